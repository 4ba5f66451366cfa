//! Expression syntax for elements of `H(q)`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := base ('^' uint)?
//! base   := 'A' | 'B' | 'q' | rational | '(' expr ')' | '-' base
//! ```
//!
//! Products are ordered and `*` is mandatory. A rational literal is `n` or
//! `n/d`. Univariate polynomials (the `F`, `G` arguments of `pair`) use the
//! same grammar with the single generator `T`.

use num_bigint::BigInt;
use num_traits::Zero;
use qheis_core::{AlgebraElement, QParam, Rational, Scalar, UniPoly};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    GenA,
    GenB,
    GenT,
    QSym,
    Rational(Rational),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Neg(Box<Expr>),
    Paren(Box<Expr>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generators {
    /// `A` and `B`.
    Algebra,
    /// `T` only.
    Univariate,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DslError {
    #[error("syntax error at column {}: {msg}", pos + 1)]
    Syntax { pos: usize, msg: String },
    #[error("exponent at column {} is not a nonnegative integer", pos + 1)]
    NonIntegerExponent { pos: usize },
    #[error("'q' is not allowed with a numeric parameter")]
    QInNumericMode,
    #[error(transparent)]
    Algebra(#[from] qheis_core::Error),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    A,
    B,
    T,
    Q,
    Num(Rational),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn describe(t: Option<&Tok>) -> String {
    match t {
        None => "end of input".into(),
        Some(Tok::Num(r)) => format!("'{r}'"),
        Some(t) => format!(
            "'{}'",
            match t {
                Tok::A => "A",
                Tok::B => "B",
                Tok::T => "T",
                Tok::Q => "q",
                Tok::Plus => "+",
                Tok::Minus => "-",
                Tok::Star => "*",
                Tok::Caret => "^",
                Tok::LParen => "(",
                Tok::RParen => ")",
                Tok::Num(_) => unreachable!(),
            }
        ),
    }
}

fn digits(src: &[u8], mut i: usize) -> usize {
    while i < src.len() && src[i].is_ascii_digit() {
        i += 1;
    }
    i
}

fn lex(src: &str, gens: Generators) -> Result<Vec<(usize, Tok)>, DslError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let pos = i;
        let tok = match c {
            b'A' if gens == Generators::Algebra => Tok::A,
            b'B' if gens == Generators::Algebra => Tok::B,
            b'T' if gens == Generators::Univariate => Tok::T,
            b'q' => Tok::Q,
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                let end = digits(bytes, i);
                let numer: BigInt = src[i..end].parse().unwrap();
                i = end;
                let mut value = Rational::from_integer(numer);
                if i < bytes.len() && bytes[i] == b'/' {
                    let end = digits(bytes, i + 1);
                    if end == i + 1 {
                        return Err(DslError::Syntax { pos: i + 1, msg: "expected a denominator".into() });
                    }
                    let denom: BigInt = src[i + 1..end].parse().unwrap();
                    if denom.is_zero() {
                        return Err(DslError::Syntax { pos: i + 1, msg: "zero denominator".into() });
                    }
                    value /= Rational::from_integer(denom);
                    i = end;
                }
                out.push((pos, Tok::Num(value)));
                continue;
            }
            _ => {
                let ch = src[i..].chars().next().unwrap();
                return Err(DslError::Syntax { pos, msg: format!("unexpected character '{ch}'") });
            }
        };
        out.push((pos, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|(_, t)| t.clone());
        self.at += 1;
        t
    }

    fn unexpected(&self, wanted: &str) -> DslError {
        DslError::Syntax { pos: self.pos(), msg: format!("expected {wanted}, found {}", describe(self.peek())) }
    }

    fn expr(&mut self) -> Result<Expr, DslError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, DslError> {
        let mut lhs = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.bump();
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, DslError> {
        let base = self.base()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.bump();
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Num(r)) if r.is_integer() => {
                let e = u32::try_from(r.to_integer()).map_err(|_| DslError::NonIntegerExponent { pos })?;
                Ok(Expr::Pow(Box::new(base), e))
            }
            Some(_) => Err(DslError::NonIntegerExponent { pos }),
            None => Err(DslError::Syntax { pos, msg: "expected an exponent, found end of input".into() }),
        }
    }

    fn base(&mut self) -> Result<Expr, DslError> {
        let node = match self.peek() {
            Some(Tok::A) => Expr::GenA,
            Some(Tok::B) => Expr::GenB,
            Some(Tok::T) => Expr::GenT,
            Some(Tok::Q) => Expr::QSym,
            Some(Tok::Num(r)) => Expr::Rational(r.clone()),
            Some(Tok::Minus) => {
                self.bump();
                return Ok(Expr::Neg(Box::new(self.base()?)));
            }
            Some(Tok::LParen) => {
                self.bump();
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(self.unexpected("')'"));
                }
                self.bump();
                return Ok(Expr::Paren(Box::new(inner)));
            }
            _ => return Err(self.unexpected("an operand")),
        };
        self.bump();
        Ok(node)
    }
}

/// Parses an element of `H(q)`.
pub fn parse_expr(src: &str) -> Result<Expr, DslError> {
    parse_with(src, Generators::Algebra)
}

pub fn parse_with(src: &str, gens: Generators) -> Result<Expr, DslError> {
    let toks = lex(src, gens)?;
    let mut p = Parser { toks, at: 0, end: src.len() };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(p.unexpected("an operator"));
    }
    Ok(e)
}

/// How a literal `q` is read.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum QUsage {
    /// Replaced by its value when `q` is numeric.
    #[default]
    Substitute,
    /// Rejected when `q` is numeric.
    Strict,
}

fn q_scalar(q: &QParam, usage: QUsage) -> Result<Scalar, DslError> {
    if usage == QUsage::Strict && !q.is_symbolic() {
        return Err(DslError::QInNumericMode);
    }
    Ok(q.pow(1))
}

/// Evaluates to normal form.
pub fn eval_expr(e: &Expr, q: &QParam, usage: QUsage) -> Result<AlgebraElement, DslError> {
    q.validate()?;
    Ok(match e {
        Expr::GenA => AlgebraElement::a(q),
        Expr::GenB => AlgebraElement::b(q),
        Expr::GenT => unreachable!("T is only lexed in univariate mode"),
        Expr::QSym => AlgebraElement::constant(q, q_scalar(q, usage)?),
        Expr::Rational(r) => AlgebraElement::constant(q, Scalar::Rat(r.clone())),
        Expr::Add(a, b) => eval_expr(a, q, usage)?.checked_add(&eval_expr(b, q, usage)?)?,
        Expr::Sub(a, b) => eval_expr(a, q, usage)?.checked_sub(&eval_expr(b, q, usage)?)?,
        Expr::Mul(a, b) => eval_expr(a, q, usage)?.multiply(&eval_expr(b, q, usage)?)?,
        Expr::Pow(a, k) => eval_expr(a, q, usage)?.power(*k),
        Expr::Neg(a) => -&eval_expr(a, q, usage)?,
        Expr::Paren(a) => eval_expr(a, q, usage)?,
    })
}

/// Evaluates a univariate expression in `T`.
pub fn eval_univariate(e: &Expr, q: &QParam, usage: QUsage) -> Result<UniPoly, DslError> {
    Ok(match e {
        Expr::GenT => UniPoly::x(),
        Expr::GenA | Expr::GenB => unreachable!("A and B are only lexed in algebra mode"),
        Expr::QSym => UniPoly::constant(q_scalar(q, usage)?),
        Expr::Rational(r) => UniPoly::constant(Scalar::Rat(r.clone())),
        Expr::Add(a, b) => &eval_univariate(a, q, usage)? + &eval_univariate(b, q, usage)?,
        Expr::Sub(a, b) => &eval_univariate(a, q, usage)? - &eval_univariate(b, q, usage)?,
        Expr::Mul(a, b) => &eval_univariate(a, q, usage)? * &eval_univariate(b, q, usage)?,
        Expr::Pow(a, k) => eval_univariate(a, q, usage)?.pow(*k),
        Expr::Neg(a) => -&eval_univariate(a, q, usage)?,
        Expr::Paren(a) => eval_univariate(a, q, usage)?,
    })
}

/// Parse and evaluate in one step.
pub fn element(src: &str, q: &QParam, usage: QUsage) -> Result<AlgebraElement, DslError> {
    eval_expr(&parse_expr(src)?, q, usage)
}

pub fn univariate(src: &str, q: &QParam, usage: QUsage) -> Result<UniPoly, DslError> {
    eval_univariate(&parse_with(src, Generators::Univariate)?, q, usage)
}
