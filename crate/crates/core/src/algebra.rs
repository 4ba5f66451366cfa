//! Normal-form arithmetic in `H(q)`.
//!
//! An element is stored as `sum_j p_j(B) A^j`. Products are normalized with
//! the single rewrite `A p(B) = p(qB) A + (D_q p)(B)`, which is `AB - qBA = 1`
//! extended to polynomials in `B`, applied one factor of `A` at a time.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::poly::{BiPoly, UniPoly};
use crate::scalars::{QParam, Scalar};
use crate::{Error, Result};

/// `(D_q p)`: the coefficient of `X^(i-1)` is `{i}_q` times that of `X^i`.
pub fn q_derivative(q: &QParam, p: &UniPoly) -> UniPoly {
    UniPoly::from_coeffs(p.coeffs().iter().enumerate().skip(1).map(|(i, c)| c * &q.q_int(i as i64)).collect())
}

/// An element `sum_j p_j(B) A^j` of `H(q)` in normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    q: QParam,
    terms: BTreeMap<usize, UniPoly>,
}

impl AlgebraElement {
    pub fn zero(q: &QParam) -> Self {
        AlgebraElement { q: q.clone(), terms: BTreeMap::new() }
    }

    pub fn one(q: &QParam) -> Self {
        AlgebraElement::constant(q, Scalar::one())
    }

    pub fn constant(q: &QParam, c: Scalar) -> Self {
        AlgebraElement::from_b_poly(q, UniPoly::constant(c))
    }

    /// The generator `A` (acting as `D_q`).
    pub fn a(q: &QParam) -> Self {
        AlgebraElement::from_terms(q, [(1, UniPoly::one())])
    }

    /// The generator `B` (acting as `M`).
    pub fn b(q: &QParam) -> Self {
        AlgebraElement::from_b_poly(q, UniPoly::x())
    }

    /// `p(B)`, an element of order 0.
    pub fn from_b_poly(q: &QParam, p: UniPoly) -> Self {
        AlgebraElement::from_terms(q, [(0, p)])
    }

    /// Builds `sum_j p_j(B) A^j`; repeated `j` are summed, zeros dropped.
    pub fn from_terms(q: &QParam, terms: impl IntoIterator<Item = (usize, UniPoly)>) -> Self {
        let mut out = AlgebraElement::zero(q);
        for (j, p) in terms {
            out.add_coeff(j, &p);
        }
        out
    }

    fn add_coeff(&mut self, j: usize, p: &UniPoly) {
        if p.is_zero() {
            return;
        }
        let slot = self.terms.entry(j).or_default();
        *slot = &*slot + p;
        if slot.is_zero() {
            self.terms.remove(&j);
        }
    }

    pub fn q(&self) -> &QParam {
        &self.q
    }

    /// Nonzero coefficients `(j, p_j)`, increasing `j`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &UniPoly)> {
        self.terms.iter().map(|(j, p)| (*j, p))
    }

    /// `p_j`, zero if absent.
    pub fn coeff(&self, j: usize) -> UniPoly {
        self.terms.get(&j).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest power of `A`; `None` for the zero element.
    pub fn order(&self) -> Option<usize> {
        self.terms.keys().next_back().copied()
    }

    /// True for scalar multiples of the identity (including zero).
    pub fn is_constant(&self) -> bool {
        match self.order() {
            None => true,
            Some(0) => self.coeff(0).degree() == Some(0),
            Some(_) => false,
        }
    }

    /// `max_j deg p_j`, `None` for zero.
    pub fn max_coeff_degree(&self) -> Option<usize> {
        self.terms.values().filter_map(UniPoly::degree).max()
    }

    /// All scalar coefficients of all `p_j`.
    pub fn scalars(&self) -> impl Iterator<Item = &Scalar> {
        self.terms.values().flat_map(|p| p.coeffs().iter())
    }

    fn check_mode(&self, other: &AlgebraElement) -> Result<()> {
        if self.q == other.q {
            Ok(())
        } else {
            Err(Error::ModeMismatch)
        }
    }

    pub fn checked_add(&self, rhs: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_mode(rhs)?;
        let mut out = self.clone();
        for (j, p) in &rhs.terms {
            out.add_coeff(*j, p);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, rhs: &AlgebraElement) -> Result<AlgebraElement> {
        self.checked_add(&-rhs)
    }

    pub fn scale(&self, c: &Scalar) -> AlgebraElement {
        AlgebraElement::from_terms(&self.q, self.terms.iter().map(|(j, p)| (*j, p.scale(c))))
    }

    /// `p(B) * self`; `B` commutes with every `p_j(B)`.
    pub fn left_mul_b_poly(&self, p: &UniPoly) -> AlgebraElement {
        AlgebraElement::from_terms(&self.q, self.terms.iter().map(|(j, c)| (*j, p.mul(c))))
    }

    /// `A * self`, one application of `A r(B) = r(qB) A + (D_q r)(B)` per term.
    pub fn left_mul_a(&self) -> AlgebraElement {
        let mut out = AlgebraElement::zero(&self.q);
        for (k, r) in &self.terms {
            out.add_coeff(k + 1, &r.scale_argument(&self.q, 1));
            out.add_coeff(*k, &q_derivative(&self.q, r));
        }
        out
    }

    /// Normal form of `self * rhs`.
    pub fn multiply(&self, rhs: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_mode(rhs)?;
        let mut acc = AlgebraElement::zero(&self.q);
        let Some(m) = self.order() else {
            return Ok(acc);
        };
        // cur = A^j * rhs
        let mut cur = rhs.clone();
        for j in 0..=m {
            if let Some(p) = self.terms.get(&j) {
                for (k, c) in &cur.left_mul_b_poly(p).terms {
                    acc.add_coeff(*k, c);
                }
            }
            if j < m {
                cur = cur.left_mul_a();
            }
        }
        Ok(acc)
    }

    /// `self * rhs - rhs * self`.
    pub fn commutator(&self, rhs: &AlgebraElement) -> Result<AlgebraElement> {
        self.multiply(rhs)?.checked_sub(&rhs.multiply(self)?)
    }

    pub fn commutes_with(&self, rhs: &AlgebraElement) -> Result<bool> {
        Ok(self.commutator(rhs)?.is_zero())
    }

    /// `self^a`; `self^0 = 1`.
    pub fn power(&self, a: u32) -> AlgebraElement {
        let mut acc = AlgebraElement::one(&self.q);
        for _ in 0..a {
            acc = &acc * self;
        }
        acc
    }

    /// `f(self) = sum_i f_i self^i` for a univariate `f`.
    pub fn eval_poly(&self, f: &UniPoly) -> AlgebraElement {
        let mut acc = AlgebraElement::zero(&self.q);
        let mut pw = AlgebraElement::one(&self.q);
        for (i, c) in f.coeffs().iter().enumerate() {
            if i > 0 {
                pw = &pw * self;
            }
            if !c.is_zero() {
                acc = &acc + &pw.scale(c);
            }
        }
        acc
    }
}

/// `sum c_{a,b} P^a Q^b` for commuting `P`, `Q`.
pub fn substitute(curve: &BiPoly, p: &AlgebraElement, q: &AlgebraElement) -> Result<AlgebraElement> {
    if !p.commutes_with(q)? {
        return Err(Error::NonCommuting);
    }
    Ok(substitute_ordered(curve, p, q))
}

/// `sum c_{a,b} P^a Q^b` with the powers of `P` to the left, whether or not
/// the operands commute. Operands must share `q`.
pub fn substitute_ordered(curve: &BiPoly, p: &AlgebraElement, q: &AlgebraElement) -> AlgebraElement {
    let max_a = curve.degree_in(0).unwrap_or(0) as usize;
    let max_b = curve.degree_in(1).unwrap_or(0) as usize;
    let p_pows = power_cache(p, max_a);
    let q_pows = power_cache(q, max_b);
    let mut acc = AlgebraElement::zero(p.q());
    for (e, c) in curve.terms() {
        let term = &p_pows[e[0] as usize] * &q_pows[e[1] as usize];
        acc = &acc + &term.scale(c);
    }
    acc
}

fn power_cache(x: &AlgebraElement, max: usize) -> Vec<AlgebraElement> {
    let mut v = Vec::with_capacity(max + 1);
    v.push(AlgebraElement::one(x.q()));
    for i in 1..=max {
        let next = &v[i - 1] * x;
        v.push(next);
    }
    v
}

// Operator forms for same-q operands; they panic on a q mismatch, use the
// `checked_*` / `multiply` methods when operands come from outside.

impl Add<&AlgebraElement> for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.checked_add(rhs).expect("operands over different q")
    }
}

impl Sub<&AlgebraElement> for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.checked_sub(rhs).expect("operands over different q")
    }
}

impl Mul<&AlgebraElement> for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.multiply(rhs).expect("operands over different q")
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        AlgebraElement::from_terms(&self.q, self.terms.iter().map(|(j, p)| (*j, -p)))
    }
}

impl fmt::Display for AlgebraElement {
    /// Prints in the expression syntax: `q*B^2*A^2 + B*A`, terms ordered by
    /// increasing power of `A`, then of `B`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (j, p) in &self.terms {
            for (i, c) in p.coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let mut factors: Vec<alloc::string::String> = Vec::new();
                match i {
                    0 => {}
                    1 => factors.push("B".into()),
                    _ => factors.push(alloc::format!("B^{i}")),
                }
                match j {
                    0 => {}
                    1 => factors.push("A".into()),
                    _ => factors.push(alloc::format!("A^{j}")),
                }
                let (negative, magnitude) = c.split_sign();
                let coeff = if magnitude.is_one() && !factors.is_empty() {
                    None
                } else if magnitude.terms().len() > 1 {
                    Some(alloc::format!("({magnitude})"))
                } else {
                    Some(alloc::format!("{magnitude}"))
                };
                let body = coeff.into_iter().chain(factors).collect::<Vec<_>>().join("*");
                if first {
                    // A leading `-` binds tighter than `^`: write `-1*B^2`, not `-B^2`.
                    if negative && body.split('*').next().is_some_and(|atom| atom.contains('^')) {
                        f.write_str("-1*")?;
                    } else if negative {
                        f.write_str("-")?;
                    }
                } else {
                    f.write_str(if negative { " - " } else { " + " })?;
                }
                first = false;
                f.write_str(&body)?;
            }
        }
        Ok(())
    }
}
