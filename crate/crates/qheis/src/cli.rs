//! Command-line front end.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand};
use qheis_core::eliminant::{curves, eliminant, make_commuting_pair, verify};
use qheis_core::laurent::{act, collapsed_identity_check, psi_chain, MIN_TRUSTED_WIDTH};
use qheis_core::spectral::{kernel_basis_window, kernel_dimension, kernel_dimension_bounds, spectrum_sample};
use qheis_core::{AlgebraElement, QParam, Rational};
use serde_json::{json, Value};
use thiserror::Error;

use crate::dsl::{self, DslError, QUsage};
use crate::json::{
    curves_to_json, element_to_json, kernel_dim_to_json, q_to_json, rational_to_json, report_to_json, tripoly_to_json,
    window_to_json,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "qheis", version, about = "Exact computations in the q-deformed Heisenberg algebra AB - qBA = 1")]
pub struct Cli {
    /// Deformation parameter: a rational such as 2 or -3/2, or "symbolic".
    #[arg(long, global = true, default_value = "symbolic", allow_hyphen_values = true)]
    pub q: String,
    /// Print results as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Width of Laurent windows, centred on t^0.
    #[arg(long, global = true, default_value_t = 64)]
    pub window_width: usize,
    /// Reject a literal q in expressions when --q is numeric.
    #[arg(long, global = true)]
    pub strict_q: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the normal form sum_j p_j(B) A^j.
    Normalize {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Decide whether P and Q commute.
    Commutes {
        #[arg(value_name = "P", allow_hyphen_values = true)]
        first: String,
        #[arg(value_name = "Q", allow_hyphen_values = true)]
        second: String,
    },
    /// Print the eliminant Delta(X, l, m).
    Eliminant {
        #[arg(value_name = "P", allow_hyphen_values = true)]
        first: String,
        #[arg(value_name = "Q", allow_hyphen_values = true)]
        second: String,
    },
    /// Print the nonzero curves delta_i(l, m) with the bounds s and t.
    Curves {
        #[arg(value_name = "P", allow_hyphen_values = true)]
        first: String,
        #[arg(value_name = "Q", allow_hyphen_values = true)]
        second: String,
    },
    /// Run every structural check on a pair.
    Verify {
        #[arg(value_name = "P", allow_hyphen_values = true)]
        first: String,
        #[arg(value_name = "Q", allow_hyphen_values = true)]
        second: String,
    },
    /// Build the commuting pair (F(W), G(W)); F and G are polynomials in T.
    Pair {
        #[arg(allow_hyphen_values = true)]
        w: String,
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Dimension of the kernel of P on Laurent series.
    KernelDim {
        #[arg(value_name = "P", allow_hyphen_values = true)]
        p: String,
        /// Also print a basis of the kernel.
        #[arg(long)]
        basis: bool,
    },
    /// Certified eigenvalues of P.
    Spectrum {
        #[arg(value_name = "P", allow_hyphen_values = true)]
        p: String,
        #[arg(long, default_value_t = 5)]
        count: usize,
    },
    /// Print Psi chains for an eigenvalue of M and check their identities.
    LaurentDemo {
        #[arg(long, default_value = "2", allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, default_value_t = 2)]
        levels: u32,
        /// Apply this element to every window of the chain.
        #[arg(long, allow_hyphen_values = true)]
        apply: Option<String>,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Dsl(#[from] DslError),
    #[error(transparent)]
    Core(#[from] qheis_core::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub fn parse_q(s: &str) -> Result<QParam, CliError> {
    if s.eq_ignore_ascii_case("symbolic") {
        return Ok(QParam::Symbolic);
    }
    let r = parse_rational(s)?;
    Ok(QParam::numeric(r)?)
}

fn parse_rational(s: &str) -> Result<Rational, CliError> {
    s.trim().parse().map_err(|_| CliError::Usage(format!("not a rational number: {s}")))
}

struct Ctx<'a> {
    q: QParam,
    usage: QUsage,
    json: bool,
    half_width: i64,
    out: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn element(&self, src: &str) -> Result<AlgebraElement, CliError> {
        Ok(dsl::element(src, &self.q, self.usage)?)
    }

    fn emit(&mut self, v: Value) -> Result<(), CliError> {
        writeln!(self.out, "{}", serde_json::to_string_pretty(&v).expect("serializable"))?;
        Ok(())
    }

    fn line(&mut self, s: impl std::fmt::Display) -> Result<(), CliError> {
        writeln!(self.out, "{s}")?;
        Ok(())
    }
}

/// Runs the command line `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let q = parse_q(&cli.q)?;
    let usage = if cli.strict_q { QUsage::Strict } else { QUsage::Substitute };
    let mut ctx = Ctx { q, usage, json: cli.json, half_width: (cli.window_width / 2) as i64, out };
    match cli.command {
        Command::Normalize { expr } => {
            let e = ctx.element(&expr)?;
            if ctx.json {
                ctx.emit(element_to_json(&e))?;
            } else {
                ctx.line(&e)?;
            }
            Ok(EXIT_OK)
        }
        Command::Commutes { first, second } => {
            let (p, qq) = (ctx.element(&first)?, ctx.element(&second)?);
            let comm = p.commutator(&qq)?;
            if ctx.json {
                ctx.emit(json!({"commuting": comm.is_zero(), "commutator": element_to_json(&comm)}))?;
            } else if comm.is_zero() {
                ctx.line("commuting")?;
            } else {
                ctx.line("non-commuting")?;
                ctx.line(format_args!("[P, Q] = {comm}"))?;
            }
            Ok(if comm.is_zero() { EXIT_OK } else { EXIT_FAIL })
        }
        Command::Eliminant { first, second } => {
            let delta = eliminant(&ctx.element(&first)?, &ctx.element(&second)?)?;
            if ctx.json {
                ctx.emit(tripoly_to_json(&delta))?;
            } else {
                ctx.line(&delta)?;
            }
            Ok(EXIT_OK)
        }
        Command::Curves { first, second } => {
            let cs = curves(&ctx.element(&first)?, &ctx.element(&second)?)?;
            if ctx.json {
                ctx.emit(curves_to_json(&cs))?;
            } else {
                ctx.line(format_args!("m = {}, n = {}, s = {}, t = {}", cs.m, cs.n, cs.s, cs.t))?;
                let lines: Vec<String> = cs.nonzero().map(|(i, d)| format!("delta_{i} = {d}")).collect();
                for l in lines {
                    ctx.line(l)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Verify { first, second } => {
            let report = verify(&ctx.element(&first)?, &ctx.element(&second)?)?;
            if ctx.json {
                ctx.emit(report_to_json(&report))?;
            } else {
                print_report(&mut ctx, &report)?;
            }
            Ok(if report.pass() { EXIT_OK } else { EXIT_FAIL })
        }
        Command::Pair { w, f, g } => {
            let w = ctx.element(&w)?;
            let f = dsl::univariate(&f, &ctx.q, ctx.usage)?;
            let g = dsl::univariate(&g, &ctx.q, ctx.usage)?;
            let (p, qq) = make_commuting_pair(&w, &f, &g)?;
            if ctx.json {
                ctx.emit(json!({"p": element_to_json(&p), "q": element_to_json(&qq)}))?;
            } else {
                ctx.line(format_args!("P = {p}"))?;
                ctx.line(format_args!("Q = {qq}"))?;
            }
            Ok(EXIT_OK)
        }
        Command::KernelDim { p, basis } => {
            let p = ctx.element(&p)?;
            if ctx.q.is_symbolic() {
                if basis {
                    return Err(qheis_core::Error::SymbolicModeUnsupported.into());
                }
                let (lower, upper) = kernel_dimension_bounds(&p)?;
                if ctx.json {
                    ctx.emit(json!({"dim": null, "lower": lower, "upper": upper}))?;
                } else {
                    ctx.line(format_args!("{lower} <= dim ker P <= {upper} (exact dimension needs a numeric q)"))?;
                }
                return Ok(EXIT_OK);
            }
            let k = kernel_dimension(&p)?;
            let vectors = if basis { kernel_basis_window(&p, -ctx.half_width, ctx.half_width)? } else { Vec::new() };
            if ctx.json {
                let mut v = kernel_dim_to_json(&k);
                if basis {
                    v["basis"] = vectors.iter().map(window_to_json).collect();
                }
                ctx.emit(v)?;
            } else {
                ctx.line(format_args!(
                    "dim ker P = {} (d_max = {}, d_min = {}, {} <= dim <= {})",
                    k.dim, k.d_max, k.d_min, k.lower, k.upper
                ))?;
                for v in &vectors {
                    ctx.line(window_to_json(v))?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Spectrum { p, count } => {
            let values = spectrum_sample(&ctx.element(&p)?, count)?;
            if ctx.json {
                ctx.emit(values.iter().map(rational_to_json).collect())?;
            } else {
                let shown: Vec<String> = values.iter().map(ToString::to_string).collect();
                ctx.line(shown.join(", "))?;
            }
            Ok(EXIT_OK)
        }
        Command::LaurentDemo { alpha, levels, apply } => laurent_demo(&mut ctx, &alpha, levels, apply.as_deref()),
    }
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAILED"
    }
}

fn print_report(ctx: &mut Ctx<'_>, r: &qheis_core::VerificationReport) -> Result<(), CliError> {
    let c = &r.curves;
    ctx.line(format_args!("m = {}, n = {}, s = {}, t = {}", c.m, c.n, c.s, c.t))?;
    ctx.line(format_args!("commuting: {}", mark(r.commuting)))?;
    ctx.line(format_args!("lambda^n coefficient: {}", mark(r.lambda_leading)))?;
    ctx.line(format_args!("mu^m coefficient: {}", mark(r.mu_leading)))?;
    ctx.line(format_args!("X-degree <= s: {}", mark(r.x_degree_bounded)))?;
    ctx.line(format_args!("curve degree <= max(m, n): {}", mark(r.curve_degree_bounded)))?;
    if let Some(qd) = &r.q_degree {
        ctx.line(format_args!("q-degree within [{}, {}]: {}", qd.allowed.0, qd.allowed.1, mark(qd.ok)))?;
    }
    if let Some(integral) = r.integral {
        ctx.line(format_args!("integral coefficients: {}", mark(integral)))?;
    }
    ctx.line(format_args!("some curve nonzero: {}", mark(r.some_curve_nonzero)))?;
    let lines: Vec<String> = r
        .residuals
        .iter()
        .filter(|res| !res.delta.is_zero())
        .map(|res| {
            let status = match &res.residual {
                None => "not evaluated",
                Some(e) => mark(e.is_zero()),
            };
            format!("delta_{}(P, Q) = 0: {status}", res.index)
        })
        .collect();
    for l in lines {
        ctx.line(l)?;
    }
    ctx.line(if r.pass() { "pass" } else { "fail" })
}

fn laurent_demo(ctx: &mut Ctx<'_>, alpha: &str, levels: u32, apply: Option<&str>) -> Result<i32, CliError> {
    let alpha = parse_rational(alpha)?;
    let (lo, hi) = (-ctx.half_width, ctx.half_width);
    let chain = psi_chain(&alpha, levels, lo, hi)?;
    let checks: Vec<(u32, bool)> = (1..=levels)
        .map(|s| Ok((s, collapsed_identity_check(&ctx.q, &alpha, s, lo, hi, MIN_TRUSTED_WIDTH)?)))
        .collect::<Result<_, CliError>>()?;
    let applied = match apply {
        None => None,
        Some(src) => {
            let p = ctx.element(src)?;
            Some(chain.iter().map(|v| act(&p, v)).collect::<Result<Vec<_>, _>>()?)
        }
    };
    let ok = checks.iter().all(|&(_, ok)| ok);
    if ctx.json {
        let mut v = json!({
            "q": q_to_json(&ctx.q),
            "alpha": rational_to_json(&alpha),
            "chain": chain.iter().map(window_to_json).collect::<Vec<_>>(),
            "collapsed": checks.iter().map(|&(s, ok)| json!({"s": s, "ok": ok})).collect::<Vec<_>>(),
        });
        if let Some(ws) = &applied {
            v["applied"] = ws.iter().map(window_to_json).collect();
        }
        ctx.emit(v)?;
    } else {
        for (s, w) in (1..).zip(&chain) {
            ctx.line(format_args!("Psi_{{{alpha},{s}}} {}", window_to_json(w)))?;
        }
        if let Some(ws) = &applied {
            for (s, w) in (1..).zip(ws) {
                ctx.line(format_args!("P Psi_{{{alpha},{s}}} {}", window_to_json(w)))?;
            }
        }
        for (s, ok) in &checks {
            ctx.line(format_args!("collapsed identity s = {s}: {}", mark(*ok)))?;
        }
    }
    Ok(if ok { EXIT_OK } else { EXIT_FAIL })
}
