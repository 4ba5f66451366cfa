//! Acceptance checks, one line per criterion.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use common::*;
use proptest::strategy::{Strategy, ValueTree};
use proptest::test_runner::TestRunner;
use qheis_core::algebra::{substitute_ordered, AlgebraElement};
use qheis_core::eliminant::{build_matrix, curves, eliminant, make_commuting_pair, verify};
use qheis_core::laurent::{act, collapsed_identity_check, kernel_basis_factored, lpd_index_set, psi_chain, PairIndex};
use qheis_core::scalars::{int, rat};
use qheis_core::spectral::{kernel_basis_window, kernel_dimension, spectrum_sample, uniform_bound_check};
use qheis_core::{BiPoly, LaurentWindow, QParam, Rational, Scalar, TriPoly, UniPoly};

type Check = Result<(), String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Check + 'a>);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

const WIDTH: i64 = 64;

fn sample<S: Strategy>(runner: &mut TestRunner, strategy: &S) -> S::Value {
    strategy.new_tree(runner).unwrap().current()
}

fn lam_sq_minus_mu() -> BiPoly {
    BiPoly::from_terms([([2, 0], Scalar::one()), ([0, 1], Scalar::from(-1))])
}

fn worked_q_values() -> Vec<QParam> {
    vec![q_num(1, 1), q_num(2, 1), q_num(1, 2), q_num(3, 1), QParam::Symbolic]
}

fn criterion_1() -> Check {
    for q in worked_q_values() {
        let a = AlgebraElement::a(&q);
        let a2 = a.power(2);
        let delta = eliminant(&a, &a2).map_err(|e| e.to_string())?;
        let expected = TriPoly::from_x_coefficients(&[lam_sq_minus_mu()]);
        ensure!(delta == expected, "q={q}: eliminant {delta}");
        let report = verify(&a, &a2).map_err(|e| e.to_string())?;
        ensure!(report.pass(), "q={q}: verification failed");
        let r0 = report.residuals.iter().find(|r| r.index == 0).ok_or("no delta_0")?;
        ensure!(r0.residual.as_ref().is_some_and(AlgebraElement::is_zero), "q={q}: delta_0(P,Q) != 0");
    }
    Ok(())
}

fn criterion_2() -> Check {
    for q in worked_q_values() {
        let ba = &AlgebraElement::b(&q) * &AlgebraElement::a(&q);
        let ba2 = ba.power(2);
        let qs = q.pow(1);
        let cs = curves(&ba, &ba2).map_err(|e| e.to_string())?;
        let qx2 = TriPoly::term(qs.clone(), [2, 0, 0]);
        let expected = &qx2 * &TriPoly::from_x_coefficients(&[lam_sq_minus_mu()]);
        ensure!(cs.eliminant == expected, "q={q}: eliminant {}", cs.eliminant);
        ensure!(cs.delta[2] == lam_sq_minus_mu().scale(&qs), "q={q}: delta_2 {}", cs.delta[2]);
        ensure!(cs.eliminant.coefficient_of(1, 2) == qx2, "q={q}: lambda^2 coefficient");
        ensure!(cs.eliminant.coefficient_of(2, 1) == -&qx2, "q={q}: mu coefficient");
        ensure!(cs.s == 4 && cs.t == 1, "q={q}: s={} t={}", cs.s, cs.t);
        ensure!(cs.eliminant.degree_in(0).unwrap() as usize <= cs.s, "q={q}: X-degree");
        let report = verify(&ba, &ba2).map_err(|e| e.to_string())?;
        ensure!(report.pass(), "q={q}: verification failed");
        let r2 = report.residuals.iter().find(|r| r.index == 2).ok_or("no delta_2 residual")?;
        ensure!(r2.residual.as_ref().is_some_and(AlgebraElement::is_zero), "q={q}: delta_2(P,Q) != 0");
        if q.is_symbolic() {
            let coeffs: Vec<Scalar> = cs.delta[2].terms().map(|(_, c)| c.clone()).collect();
            ensure!(coeffs.iter().all(Scalar::has_integer_coefficients), "delta_2 not integral");
            let span = coeffs
                .iter()
                .filter_map(Scalar::q_degree_range)
                .fold((i64::MAX, i64::MIN), |(a, b), (c, d)| (a.min(c), b.max(d)));
            ensure!(span == (1, 1) && span.1 == cs.t as i64, "q-degree span {span:?}");
            ensure!(report.q_degree.as_ref().is_some_and(|c| c.ok), "q-degree check");
            ensure!(report.integral == Some(true), "integrality check");
        }
    }
    Ok(())
}

/// Commuting pairs `(f(W), g(W))` drawn deterministically per `q`.
fn corpus() -> Vec<(QParam, AlgebraElement, AlgebraElement)> {
    let mut runner = TestRunner::deterministic();
    let mut out = Vec::new();
    for q in q_values() {
        let mut found = 0;
        while found < 5 {
            let order = if found % 2 == 0 { 1 } else { 2 };
            let w = sample(&mut runner, &nonconstant_element(q.clone(), order, 2));
            if w.order().unwrap_or(0) < 1 {
                continue;
            }
            let f = sample(&mut runner, &curve_poly());
            let g = sample(&mut runner, &curve_poly());
            let (p, qq) = make_commuting_pair(&w, &f, &g).unwrap();
            out.push((q.clone(), p, qq));
            found += 1;
        }
    }
    out
}

fn criterion_3(corpus: &[(QParam, AlgebraElement, AlgebraElement)]) -> Check {
    ensure!(corpus.len() >= 25, "corpus has {} pairs", corpus.len());
    for (q, p, qq) in corpus {
        let started = Instant::now();
        let report = verify(p, qq).map_err(|e| e.to_string())?;
        ensure!(report.pass(), "q={q}: P={p}, Q={qq}: {report:?}");
        ensure!(started.elapsed().as_secs() < 10, "q={q}: pair took {:?}", started.elapsed());
    }
    Ok(())
}

fn criterion_4() -> Check {
    let q = q_num(2, 1);
    let w = &(&AlgebraElement::a(&q) + &AlgebraElement::b(&q)) + &AlgebraElement::constant(&q, Scalar::from(1));
    let f = UniPoly::from_coeffs(vec![Scalar::from(1), Scalar::from(2), Scalar::from(-1), Scalar::one()]);
    let g = UniPoly::from_coeffs(vec![Scalar::from(-1), Scalar::from(1), Scalar::one()]);
    let (p, qq) = make_commuting_pair(&w, &f, &g).map_err(|e| e.to_string())?;
    ensure!(p.order() == Some(3) && qq.order() == Some(2), "orders {:?} {:?}", p.order(), qq.order());
    let mat = build_matrix(&p, &qq).map_err(|e| e.to_string())?;
    let zeros: Vec<(usize, usize)> = (0..5)
        .flat_map(|r| (0..5).map(move |c| (r, c)))
        .filter(|&(r, c)| mat.get(r, c).is_zero())
        .map(|(r, c)| (r + 1, c + 1))
        .collect();
    ensure!(zeros == vec![(1, 5), (3, 4), (3, 5), (4, 5)], "zero pattern {zeros:?}");
    Ok(())
}

fn criterion_5() -> Check {
    let q = q_num(2, 1);
    let a = AlgebraElement::a(&q);
    let ba = &AlgebraElement::b(&q) * &a;
    ensure!(!a.commutes_with(&ba).map_err(|e| e.to_string())?, "reported commuting");
    let report = verify(&a, &ba).map_err(|e| e.to_string())?;
    ensure!(!report.pass() && !report.commuting, "verification passed on a non-commuting pair");
    let cs = curves(&a, &ba).map_err(|e| e.to_string())?;
    let forced = cs.nonzero().any(|(_, d)| !substitute_ordered(d, &a, &ba).is_zero());
    ensure!(forced, "every forced delta_i(P,Q) vanished");
    Ok(())
}

fn criterion_6() -> Check {
    let q = q_num(2, 1);
    let a = AlgebraElement::a(&q);
    let b = AlgebraElement::b(&q);
    let b2 = &b - &AlgebraElement::constant(&q, Scalar::from(2));
    let dims = [(&a, 1), (&b, 0), (&b2, 1)];
    for (p, want) in dims {
        let got = kernel_dimension(p).map_err(|e| e.to_string())?.dim;
        ensure!(got == want, "dim ker {p} = {got}, expected {want}");
    }
    let factored = kernel_basis_factored(&int(1), 0, &[(int(1), 2), (int(3), 1)], -WIDTH / 2, WIDTH / 2)
        .map_err(|e| e.to_string())?;
    ensure!(factored.dim() == 3, "factored kernel dim {}", factored.dim());
    let pm = AlgebraElement::from_b_poly(&q, factored.polynomial.clone());
    for v in &factored.basis {
        ensure!(act(&pm, v).map_err(|e| e.to_string())?.is_zero_on_trusted(), "p(M) does not annihilate basis");
    }

    let mut runner = TestRunner::deterministic();
    for i in 0..50 {
        let qq = &numeric_q_values()[i % 5];
        let p = sample(&mut runner, &nonzero_element(qq.clone(), 2, 2));
        let k = kernel_dimension(&p).map_err(|e| e.to_string())?;
        ensure!(k.lower <= k.dim && k.dim <= k.upper, "bounds fail for {p}: {k:?}");
    }
    let lambdas: Vec<Rational> = (0..10).map(|i| rat(i - 4, 1 + i % 3)).collect();
    for i in 0..10 {
        let qq = &numeric_q_values()[i % 5];
        let p = sample(&mut runner, &nonconstant_element(qq.clone(), 2, 2));
        ensure!(uniform_bound_check(&p, &lambdas).map_err(|e| e.to_string())?, "uniform bound fails for {p}");
    }
    Ok(())
}

fn criterion_7() -> Check {
    let q = q_num(2, 1);
    let a = AlgebraElement::a(&q);
    let ba = &AlgebraElement::b(&q) * &a;
    let got = spectrum_sample(&ba, 5).map_err(|e| e.to_string())?;
    let want: Vec<Rational> = [0, 1, 3, 7, 15].into_iter().map(int).collect();
    ensure!(got == want, "spectrum of BA: {got:?}");
    let sampled = spectrum_sample(&a, 6).map_err(|e| e.to_string())?;
    ensure!(sampled.len() == 6, "only {} eigenvalues of A", sampled.len());
    for lambda in &sampled {
        let shifted = &a - &AlgebraElement::constant(&q, Scalar::Rat(lambda.clone()));
        let basis = kernel_basis_window(&shifted, -WIDTH / 2, WIDTH / 2).map_err(|e| e.to_string())?;
        ensure!(!basis.is_empty(), "lambda={lambda} has no eigenvector");
        for v in &basis {
            let image = act(&a, v).map_err(|e| e.to_string())?;
            ensure!(image.agrees_with(&v.scale(lambda), 16).map_err(|e| e.to_string())?, "A v != {lambda} v");
        }
    }
    Ok(())
}

fn random_window(runner: &mut TestRunner) -> LaurentWindow {
    let coeffs = sample(runner, &proptest::collection::vec(small_rational(), WIDTH as usize + 1));
    LaurentWindow::new(-WIDTH / 2, coeffs, (-WIDTH / 2, WIDTH / 2)).unwrap()
}

fn criterion_8() -> Check {
    let (lo, hi) = (-WIDTH / 2, WIDTH / 2);
    let mut runner = TestRunner::deterministic();
    let err = |e: qheis_core::Error| e.to_string();
    for q in numeric_q_values() {
        let relation = &(&(&AlgebraElement::a(&q) * &AlgebraElement::b(&q))
            - &(&AlgebraElement::b(&q) * &AlgebraElement::a(&q)).scale(&q.pow(1)))
            - &AlgebraElement::one(&q);
        ensure!(relation.is_zero(), "AB - qBA - 1 = {relation}");
        let a = AlgebraElement::a(&q);
        let b = AlgebraElement::b(&q);
        let qv = q.numeric_value().unwrap().clone();
        for _ in 0..50 {
            let v = random_window(&mut runner);
            let ab = act(&a, &act(&b, &v).map_err(err)?).map_err(err)?;
            let ba = act(&b, &act(&a, &v).map_err(err)?).map_err(err)?;
            let rel = ab.sub(&ba.scale(&qv)).map_err(err)?.sub(&v).map_err(err)?;
            ensure!(rel.is_zero_on_trusted(), "q={q}: faithfulness");
        }
    }
    for alpha in [int(1), int(2), rat(1, 2), int(3)] {
        let chain = psi_chain(&alpha, 4, lo, hi).map_err(err)?;
        for s in 1..=4u32 {
            let v = &chain[s as usize - 1];
            ensure!(v.m_minus_pow(&alpha, s).map_err(err)?.is_zero_on_trusted(), "(M-a)^s Psi != 0");
            ensure!(
                v.m_minus_pow(&alpha, s - 1).map_err(err)?.agrees_with(&chain[0], 16).map_err(err)?,
                "(M-a)^(s-1) Psi_s != Psi_1"
            );
        }
        let p = UniPoly::from_coeffs(vec![Scalar::from(3), Scalar::from(-2), Scalar::from(0), Scalar::one()]);
        let value = p.eval(&Scalar::Rat(alpha.clone())).as_rational().unwrap().clone();
        ensure!(
            chain[0].poly_in_m(&p).map_err(err)?.agrees_with(&chain[0].scale(&value), 16).map_err(err)?,
            "eigen-equation alpha={alpha}"
        );
    }
    for q in [q_num(2, 1), q_num(1, 2), q_num(3, 1), q_num(3, 2), q_num(5, 1)] {
        let qv = q.numeric_value().unwrap().clone();
        for alpha in [int(1), int(2), rat(1, 2), int(-3)] {
            let psi = psi_chain(&alpha, 1, lo, hi).map_err(err)?.remove(0);
            let psi_q = psi_chain(&(&alpha / &qv), 1, lo, hi).map_err(err)?.remove(0);
            let denom = &alpha * (&qv - int(1));
            let rhs = psi_q.scale(&(&qv / &denom)).sub(&psi.scale(&(int(1) / &denom))).map_err(err)?;
            let lhs = psi.q_derivative(&q).map_err(err)?;
            ensure!(lhs.agrees_with(&rhs, 16).map_err(err)?, "D_q Psi collapse q={q} alpha={alpha}");
        }
    }
    for q in [q_num(2, 1), q_num(1, 2), q_num(3, 1), q_num(1, 1)] {
        for alpha in [int(1), int(2), rat(1, 2)] {
            for s in 1..=3 {
                ensure!(
                    collapsed_identity_check(&q, &alpha, s, lo, hi, 16).map_err(err)?,
                    "collapsed identity q={q} alpha={alpha} s={s}"
                );
            }
        }
    }
    Ok(())
}

fn criterion_9() -> Check {
    let err = |e: qheis_core::Error| e.to_string();
    let idx =
        |pairs: &[(i64, u32)]| -> Vec<PairIndex> { pairs.iter().map(|&(a, s)| PairIndex::new(int(a), s)).collect() };

    let set = lpd_index_set(&q_num(1, 1), &[(int(1), 1), (int(-1), 1)], 2, 3).map_err(err)?;
    ensure!(set.indices == idx(&[(-1, 1), (-1, 2), (-1, 3), (1, 1), (1, 2), (1, 3)]), "q=1: {:?}", set.indices);

    let set = lpd_index_set(&q_num(2, 1), &[(int(1), 1)], 1, 2).map_err(err)?;
    ensure!(set.j_max == 0 && set.maximal == vec![int(1)], "q=2 single root: {set:?}");
    ensure!(set.indices == idx(&[(1, 1), (1, 2), (2, 1), (2, 2), (4, 1), (4, 2)]), "q=2: {:?}", set.indices);

    let set = lpd_index_set(&q_num(2, 1), &[(int(1), 1), (int(2), 1)], 1, 1).map_err(err)?;
    ensure!(set.j_max == 1 && set.maximal == vec![int(1)], "q=2 two roots: {set:?}");
    ensure!(set.indices == idx(&[(1, 1), (2, 1), (4, 1)]), "q=2: {:?}", set.indices);
    Ok(())
}

fn criterion_10(corpus: &[(QParam, AlgebraElement, AlgebraElement)]) -> Check {
    let points = [[rat(1, 2), int(2), int(-3)], [int(-1), rat(2, 3), int(5)], [int(3), int(0), rat(-7, 2)]];
    let q0 = int(3);
    for (q, p, qq) in corpus {
        let mat = build_matrix(p, qq).map_err(|e| e.to_string())?;
        let memo = mat.determinant();
        ensure!(memo == mat.determinant_bareiss(), "q={q}: minor expansion and Bareiss differ for P={p}");
        let at_q = if q.is_symbolic() { Some(&q0) } else { None };
        for pt in &points {
            ensure!(
                memo.eval_rational(at_q, pt) == mat.eval_rational(at_q, pt).determinant(),
                "q={q}: evaluation at {pt:?} differs for P={p}"
            );
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let corpus = corpus();
    let checks: Vec<Criterion> = vec![
        ("1 worked eliminant A, A^2", Box::new(criterion_1)),
        ("2 worked eliminant BA, (BA)^2", Box::new(criterion_2)),
        ("3 random commuting corpus", Box::new(|| criterion_3(&corpus))),
        ("4 matrix zero pattern m=3 n=2", Box::new(criterion_4)),
        ("5 non-commuting negative control", Box::new(criterion_5)),
        ("6 kernel dimensions and bounds", Box::new(criterion_6)),
        ("7 point spectrum samples", Box::new(criterion_7)),
        ("8 Laurent identities", Box::new(criterion_8)),
        ("9 L_Pd index sets", Box::new(criterion_9)),
        ("10 determinant routes agree", Box::new(|| criterion_10(&corpus))),
    ];
    let mut failed = 0;
    for (name, check) in &checks {
        let started = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = started.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("PASS criterion {name} ({secs:.2}s)"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name} ({secs:.2}s): {why}");
            }
        }
    }
    println!("{} of {} criteria passed", checks.len() - failed, checks.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
