//! Coefficient arithmetic: the deformation parameter `q`, scalars over it,
//! q-integers and the q-falling-factorial polynomials.
//!
//! Two modes are supported. In numeric mode `q` is a fixed rational and every
//! scalar is a rational. In symbolic mode `q` is an indeterminate and scalars
//! are Laurent polynomials in `q` with rational coefficients.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::poly::UniPoly;
use crate::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Exact integer power of a rational, negative exponents allowed.
///
/// Panics on `0^k` with `k < 0`.
pub fn rational_pow(base: &Rational, k: i64) -> Rational {
    let mut acc = Rational::one();
    let mut b = if k < 0 { base.recip() } else { base.clone() };
    let mut e = k.unsigned_abs();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &b;
        }
        b = &b * &b;
        e >>= 1;
    }
    acc
}

/// The deformation parameter.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum QParam {
    Numeric(Rational),
    Symbolic,
}

impl QParam {
    /// A validated numeric parameter.
    pub fn numeric(value: Rational) -> Result<Self> {
        let q = QParam::Numeric(value);
        q.validate()?;
        Ok(q)
    }

    /// Checks `q != 0` and `{n}_q != 0` for `n != 0`. Over the rationals this
    /// rules out exactly `q = 0` and `q = -1`.
    pub fn validate(&self) -> Result<()> {
        match self {
            QParam::Symbolic => Ok(()),
            QParam::Numeric(v) => {
                if v.is_zero() || *v == -Rational::one() {
                    Err(Error::InvalidQ)
                } else {
                    Ok(())
                }
            }
        }
    }

    pub fn is_symbolic(&self) -> bool {
        matches!(self, QParam::Symbolic)
    }

    /// True only for numeric `q = 1` (the Weyl algebra).
    pub fn is_one(&self) -> bool {
        matches!(self, QParam::Numeric(v) if v.is_one())
    }

    pub fn numeric_value(&self) -> Option<&Rational> {
        match self {
            QParam::Numeric(v) => Some(v),
            QParam::Symbolic => None,
        }
    }

    /// Requires numeric mode.
    pub fn require_numeric(&self) -> Result<&Rational> {
        self.numeric_value().ok_or(Error::SymbolicModeUnsupported)
    }

    /// `q^k` as a scalar.
    pub fn pow(&self, k: i64) -> Scalar {
        match self {
            QParam::Numeric(v) => Scalar::Rat(rational_pow(v, k)),
            QParam::Symbolic => Scalar::monomial(Rational::one(), k),
        }
    }

    /// The q-integer `{n}_q = (q^n - 1)/(q - 1)`, or `n` when `q = 1`.
    pub fn q_int(&self, n: i64) -> Scalar {
        match self {
            QParam::Numeric(v) if v.is_one() => Scalar::from(int(n)),
            QParam::Numeric(v) => {
                let num = rational_pow(v, n) - Rational::one();
                Scalar::Rat(num / (v - Rational::one()))
            }
            QParam::Symbolic => {
                // (q^n - 1)/(q - 1) divides exactly:
                // n > 0: 1 + q + ... + q^(n-1); n < 0: -(q^n + ... + q^-1).
                let mut terms = BTreeMap::new();
                if n > 0 {
                    for e in 0..n {
                        terms.insert(e, Rational::one());
                    }
                } else {
                    for e in n..0 {
                        terms.insert(e, -Rational::one());
                    }
                }
                Scalar::from_laurent(terms)
            }
        }
    }

    /// The polynomial `r_j` with `r_j({k}_q) = {k}_q {k-1}_q ... {k-j+1}_q`
    /// for every integer `k`, built from `r_j(Z) = Z * r_{j-1}((Z - 1)/q)`.
    pub fn q_falling(&self, j: usize) -> UniPoly {
        let inv_q = self.pow(-1);
        let shift = UniPoly::from_coeffs(alloc::vec![-inv_q.clone(), inv_q]);
        let mut r = UniPoly::one();
        for _ in 0..j {
            r = UniPoly::x().mul(&r.compose(&shift));
        }
        r
    }
}

impl fmt::Display for QParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QParam::Numeric(v) => write!(f, "{v}"),
            QParam::Symbolic => f.write_str("symbolic"),
        }
    }
}

/// A coefficient: an exact rational, or a Laurent polynomial in symbolic `q`.
///
/// Canonical form: Laurent polynomials store no zero coefficients and always
/// contain some power of `q` other than `q^0`; anything else collapses to
/// [`Scalar::Rat`]. Structural equality is therefore value equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(Rational),
    Laurent(BTreeMap<i64, Rational>),
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::Rat(r)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::Rat(int(n))
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rat(Rational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rat(Rational::one())
    }

    /// `c * q^e`.
    pub fn monomial(c: Rational, e: i64) -> Self {
        let mut m = BTreeMap::new();
        m.insert(e, c);
        Scalar::from_laurent(m)
    }

    /// Canonicalizes an exponent -> coefficient map.
    pub fn from_laurent(mut terms: BTreeMap<i64, Rational>) -> Self {
        terms.retain(|_, c| !c.is_zero());
        match terms.len() {
            0 => Scalar::zero(),
            1 if terms.contains_key(&0) => Scalar::Rat(terms.remove(&0).unwrap()),
            _ => Scalar::Laurent(terms),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_one())
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Scalar::Rat(r) => Some(r),
            Scalar::Laurent(_) => None,
        }
    }

    /// Exponent -> coefficient pairs, increasing exponent; empty for zero.
    pub fn terms(&self) -> Vec<(i64, Rational)> {
        match self {
            Scalar::Rat(r) if r.is_zero() => Vec::new(),
            Scalar::Rat(r) => alloc::vec![(0, r.clone())],
            Scalar::Laurent(m) => m.iter().map(|(e, c)| (*e, c.clone())).collect(),
        }
    }

    fn to_map(&self) -> BTreeMap<i64, Rational> {
        self.terms().into_iter().collect()
    }

    /// Lowest and highest power of `q` present, `None` for zero.
    pub fn q_degree_range(&self) -> Option<(i64, i64)> {
        match self {
            Scalar::Rat(r) if r.is_zero() => None,
            Scalar::Rat(_) => Some((0, 0)),
            Scalar::Laurent(m) => Some((*m.keys().next().unwrap(), *m.keys().next_back().unwrap())),
        }
    }

    /// True when every coefficient is an integer.
    pub fn has_integer_coefficients(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_integer(),
            Scalar::Laurent(m) => m.values().all(|c| c.is_integer()),
        }
    }

    /// Substitutes `q = q0`. Panics if `q0 = 0` and a negative power occurs.
    pub fn eval_q(&self, q0: &Rational) -> Rational {
        match self {
            Scalar::Rat(r) => r.clone(),
            Scalar::Laurent(m) => m.iter().map(|(e, c)| c * rational_pow(q0, *e)).sum(),
        }
    }

    /// Multiplicative inverse when it exists in the Laurent ring
    /// (nonzero rationals and monomials `c q^e`).
    pub fn inverse(&self) -> Option<Scalar> {
        match self {
            Scalar::Rat(r) if r.is_zero() => None,
            Scalar::Rat(r) => Some(Scalar::Rat(r.recip())),
            Scalar::Laurent(m) if m.len() == 1 => {
                let (e, c) = m.iter().next().unwrap();
                Some(Scalar::monomial(c.recip(), -e))
            }
            Scalar::Laurent(_) => None,
        }
    }

    fn combine(&self, rhs: &Scalar, sign: i8) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(if sign > 0 { a + b } else { a - b }),
            _ => {
                let mut m = self.to_map();
                for (e, c) in rhs.terms() {
                    let slot = m.entry(e).or_insert_with(Rational::zero);
                    if sign > 0 {
                        *slot += c;
                    } else {
                        *slot -= c;
                    }
                }
                Scalar::from_laurent(m)
            }
        }
    }

    fn product(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Rat(a), Scalar::Laurent(m)) | (Scalar::Laurent(m), Scalar::Rat(a)) => {
                if a.is_zero() {
                    return Scalar::zero();
                }
                Scalar::Laurent(m.iter().map(|(e, c)| (*e, c * a)).collect())
            }
            (Scalar::Laurent(x), Scalar::Laurent(y)) => {
                let mut m: BTreeMap<i64, Rational> = BTreeMap::new();
                for (ea, ca) in x {
                    for (eb, cb) in y {
                        *m.entry(ea + eb).or_insert_with(Rational::zero) += ca * cb;
                    }
                }
                Scalar::from_laurent(m)
            }
        }
    }

    /// `(true, -c)` when `c` is a single term with negative coefficient.
    pub(crate) fn split_sign(&self) -> (bool, Scalar) {
        let terms = self.terms();
        if terms.len() == 1 && terms[0].1.is_negative() {
            (true, -self)
        } else {
            (false, self.clone())
        }
    }

    pub fn pow(&self, k: u32) -> Scalar {
        let mut acc = Scalar::one();
        for _ in 0..k {
            acc = acc.product(self);
        }
        acc
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                let f: fn(&Scalar, &Scalar) -> Scalar = $body;
                f(self, rhs)
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

scalar_binop!(Add, add, |a, b| a.combine(b, 1));
scalar_binop!(Sub, sub, |a, b| a.combine(b, -1));
scalar_binop!(Mul, mul, |a, b| a.product(b));

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(-r),
            Scalar::Laurent(m) => Scalar::Laurent(m.iter().map(|(e, c)| (*e, -c)).collect()),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    /// Rationals print as `n` or `n/d`; Laurent polynomials as a sum of
    /// `c*q^e` terms in increasing exponent.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{r}"),
            Scalar::Laurent(m) => {
                for (i, (e, c)) in m.iter().enumerate() {
                    let neg = c.is_negative();
                    if i == 0 {
                        if neg {
                            f.write_str("-")?;
                        }
                    } else {
                        f.write_str(if neg { " - " } else { " + " })?;
                    }
                    let a = c.abs();
                    let qpart = match *e {
                        0 => None,
                        1 => Some(alloc::string::String::from("q")),
                        e => Some(alloc::format!("q^{e}")),
                    };
                    match qpart {
                        None => write!(f, "{a}")?,
                        Some(qp) if a.is_one() => f.write_str(&qp)?,
                        Some(qp) => write!(f, "{a}*{qp}")?,
                    }
                }
                Ok(())
            }
        }
    }
}
