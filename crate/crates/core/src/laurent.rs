//! Truncated Laurent series and the module action of `H(q)` on them.
//!
//! A [`LaurentWindow`] stores the coefficients of a bi-infinite series on
//! `[lo, hi]` together with a trusted interval on which they are exact.
//! `M` (the action of `B`) shifts a window up by one and `D_q` (the action of
//! `A`) shifts it down by one, so a monomial operator never loses
//! information; sums keep the intersection of their operands.
//!
//! The eigenvectors of `M` are `Psi_{alpha,1} = sum_n (t/alpha)^n`, extended to
//! Jordan chains `(M - alpha) Psi_{alpha,s} = Psi_{alpha,s-1}`. Chains are not
//! unique; here level `s >= 2` is pinned by a zero coefficient at the top of
//! the window, and only identities that hold for every choice are checked.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::algebra::AlgebraElement;
use crate::poly::UniPoly;
use crate::roots::solve_power;
use crate::scalars::{int, rational_pow, QParam, Rational, Scalar};
use crate::{Error, Result};

/// Default minimum width of the trusted overlap used when comparing windows.
pub const MIN_TRUSTED_WIDTH: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentWindow {
    lo: i64,
    coeffs: Vec<Rational>,
    trusted: (i64, i64),
}

impl LaurentWindow {
    /// Coefficients of `t^lo, t^(lo+1), ...`; `trusted` must be a nonempty
    /// subinterval of the window.
    pub fn new(lo: i64, coeffs: Vec<Rational>, trusted: (i64, i64)) -> Result<Self> {
        let hi = lo + coeffs.len() as i64 - 1;
        if coeffs.is_empty() || trusted.0 > trusted.1 || trusted.0 < lo || trusted.1 > hi {
            return Err(Error::DegenerateWindow);
        }
        Ok(LaurentWindow { lo, coeffs, trusted })
    }

    /// Fully trusted window with coefficient `f(n)` at `t^n`.
    pub fn from_fn(lo: i64, hi: i64, f: impl FnMut(i64) -> Rational) -> Result<Self> {
        LaurentWindow::new(lo, (lo..=hi).map(f).collect(), (lo, hi))
    }

    /// `t^k` on `[lo, hi]`.
    pub fn monomial(k: i64, lo: i64, hi: i64) -> Result<Self> {
        if k < lo || k > hi {
            return Err(Error::DegenerateWindow);
        }
        LaurentWindow::from_fn(lo, hi, |n| if n == k { Rational::one() } else { Rational::zero() })
    }

    pub fn zero(lo: i64, hi: i64) -> Result<Self> {
        LaurentWindow::from_fn(lo, hi, |_| Rational::zero())
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.coeffs.len() as i64 - 1
    }

    pub fn trusted(&self) -> (i64, i64) {
        self.trusted
    }

    pub fn trusted_width(&self) -> usize {
        (self.trusted.1 - self.trusted.0 + 1) as usize
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `t^n`, `None` outside the window.
    pub fn coeff(&self, n: i64) -> Option<&Rational> {
        if n < self.lo {
            return None;
        }
        self.coeffs.get((n - self.lo) as usize)
    }

    /// The trusted part only.
    pub fn trusted_part(&self) -> LaurentWindow {
        let (a, b) = self.trusted;
        LaurentWindow {
            lo: a,
            coeffs: self.coeffs[(a - self.lo) as usize..=(b - self.lo) as usize].to_vec(),
            trusted: (a, b),
        }
    }

    pub fn is_zero_on_trusted(&self) -> bool {
        self.trusted_part().coeffs.iter().all(Zero::is_zero)
    }

    /// Equality on the overlap of the trusted intervals, which must be at
    /// least `min_width` wide.
    pub fn agrees_with(&self, other: &LaurentWindow, min_width: usize) -> Result<bool> {
        let a = self.trusted.0.max(other.trusted.0);
        let b = self.trusted.1.min(other.trusted.1);
        if b < a || ((b - a + 1) as usize) < min_width {
            return Err(Error::DegenerateWindow);
        }
        Ok((a..=b).all(|n| self.coeff(n) == other.coeff(n)))
    }

    pub fn scale(&self, c: &Rational) -> LaurentWindow {
        LaurentWindow { lo: self.lo, coeffs: self.coeffs.iter().map(|a| a * c).collect(), trusted: self.trusted }
    }

    fn combine(&self, rhs: &LaurentWindow, sign: i8) -> Result<LaurentWindow> {
        let lo = self.lo.max(rhs.lo);
        let hi = self.hi().min(rhs.hi());
        let trusted = (self.trusted.0.max(rhs.trusted.0), self.trusted.1.min(rhs.trusted.1));
        if hi < lo {
            return Err(Error::DegenerateWindow);
        }
        let coeffs = (lo..=hi)
            .map(|n| {
                let (a, b) = (self.coeff(n).unwrap(), rhs.coeff(n).unwrap());
                if sign > 0 {
                    a + b
                } else {
                    a - b
                }
            })
            .collect();
        LaurentWindow::new(lo, coeffs, trusted)
    }

    pub fn add(&self, rhs: &LaurentWindow) -> Result<LaurentWindow> {
        self.combine(rhs, 1)
    }

    pub fn sub(&self, rhs: &LaurentWindow) -> Result<LaurentWindow> {
        self.combine(rhs, -1)
    }

    /// `M v`: coefficient of `t^n` becomes `a_(n-1)`.
    pub fn shift_up(&self) -> LaurentWindow {
        LaurentWindow {
            lo: self.lo + 1,
            coeffs: self.coeffs.clone(),
            trusted: (self.trusted.0 + 1, self.trusted.1 + 1),
        }
    }

    /// `D_q v`: coefficient of `t^n` becomes `{n+1}_q a_(n+1)`.
    pub fn q_derivative(&self, q: &QParam) -> Result<LaurentWindow> {
        q.require_numeric()?;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, a)| {
                let n = self.lo + i as i64;
                a * q.q_int(n).as_rational().unwrap()
            })
            .collect();
        Ok(LaurentWindow { lo: self.lo - 1, coeffs, trusted: (self.trusted.0 - 1, self.trusted.1 - 1) })
    }

    /// `(M - alpha) v`.
    pub fn m_minus(&self, alpha: &Rational) -> Result<LaurentWindow> {
        self.shift_up().sub(&self.scale(alpha))
    }

    /// `(M - alpha)^times v`.
    pub fn m_minus_pow(&self, alpha: &Rational, times: u32) -> Result<LaurentWindow> {
        (0..times).try_fold(self.clone(), |v, _| v.m_minus(alpha))
    }

    /// `p(M) v` for `p` with rational coefficients.
    pub fn poly_in_m(&self, p: &UniPoly) -> Result<LaurentWindow> {
        let mut acc: Option<LaurentWindow> = None;
        let mut cur = self.clone();
        for (i, c) in p.coeffs().iter().enumerate() {
            if i > 0 {
                cur = cur.shift_up();
            }
            if c.is_zero() {
                continue;
            }
            let c = c.as_rational().ok_or(Error::SymbolicModeUnsupported)?;
            let term = cur.scale(c);
            acc = Some(match acc {
                None => term,
                Some(a) => a.add(&term)?,
            });
        }
        Ok(acc.unwrap_or_else(|| self.scale(&Rational::zero())))
    }
}

/// `P v` for `P = sum_j p_j(M) D_q^j`.
pub fn act(p: &AlgebraElement, v: &LaurentWindow) -> Result<LaurentWindow> {
    let q = p.q();
    q.require_numeric()?;
    let mut acc: Option<LaurentWindow> = None;
    let mut deriv = v.clone();
    let mut level = 0;
    for (j, pj) in p.terms() {
        while level < j {
            deriv = deriv.q_derivative(q)?;
            level += 1;
        }
        let term = deriv.poly_in_m(pj)?;
        acc = Some(match acc {
            None => term,
            Some(a) => a.add(&term)?,
        });
    }
    Ok(acc.unwrap_or_else(|| v.scale(&Rational::zero())))
}

/// `Psi_{alpha,1..=levels}` on `[lo, hi]`.
///
/// Level 1 has coefficient `alpha^(-n)` at `t^n`. Level `s >= 2` solves
/// `a_(n-1) = b_n + alpha a_n` downward from `a_hi = 0`; the series this
/// defines is exact on the whole window.
pub fn psi_chain(alpha: &Rational, levels: u32, lo: i64, hi: i64) -> Result<Vec<LaurentWindow>> {
    if alpha.is_zero() {
        return Err(Error::ZeroRoot);
    }
    if hi < lo {
        return Err(Error::DegenerateWindow);
    }
    let mut out: Vec<LaurentWindow> = Vec::with_capacity(levels as usize);
    if levels == 0 {
        return Ok(out);
    }
    out.push(LaurentWindow::from_fn(lo, hi, |n| rational_pow(alpha, -n))?);
    for _ in 1..levels {
        let prev = out.last().unwrap();
        let len = (hi - lo + 1) as usize;
        let mut coeffs = alloc::vec![Rational::zero(); len];
        for idx in (1..len).rev() {
            coeffs[idx - 1] = &prev.coeffs[idx] + alpha * &coeffs[idx];
        }
        out.push(LaurentWindow::new(lo, coeffs, (lo, hi))?);
    }
    Ok(out)
}

/// Basis of `ker p(M)` for `p = c X^e0 prod_i (X - alpha_i)^e_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredKernel {
    pub polynomial: UniPoly,
    /// `Psi_{alpha_i, 1..=e_i}` for each factor, in input order.
    pub basis: Vec<LaurentWindow>,
}

impl FactoredKernel {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

pub fn kernel_basis_factored(
    c: &Rational,
    e0: u32,
    factors: &[(Rational, u32)],
    lo: i64,
    hi: i64,
) -> Result<FactoredKernel> {
    if c.is_zero() {
        return Err(Error::ZeroElement);
    }
    let mut seen = BTreeSet::new();
    let mut polynomial = UniPoly::monomial(Scalar::Rat(c.clone()), e0 as usize);
    let mut basis = Vec::new();
    for (alpha, e) in factors {
        if alpha.is_zero() {
            return Err(Error::ZeroRoot);
        }
        if !seen.insert(alpha.clone()) {
            return Err(Error::DuplicateRoot);
        }
        let linear = UniPoly::from_coeffs(alloc::vec![Scalar::Rat(-alpha.clone()), Scalar::one()]);
        polynomial = polynomial.mul(&linear.pow(*e));
        basis.extend(psi_chain(alpha, *e, lo, hi)?);
    }
    Ok(FactoredKernel { polynomial, basis })
}

/// An index `(alpha, s)` of the chain element `Psi_{alpha,s}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PairIndex {
    pub alpha: Rational,
    pub s: u32,
}

impl PairIndex {
    pub fn new(alpha: Rational, s: u32) -> Self {
        PairIndex { alpha, s }
    }
}

/// `a <= b`: for `q != 1`, `b.alpha = a.alpha / q^j` with `j > 0`, or equal
/// `alpha` and `a.s <= b.s`; for `q = 1` only the latter.
pub fn pair_leq(q: &QParam, a: &PairIndex, b: &PairIndex) -> Result<bool> {
    let qv = q.require_numeric()?;
    if a.alpha == b.alpha {
        return Ok(a.s <= b.s);
    }
    if qv.is_one() {
        return Ok(false);
    }
    Ok(solve_power(qv, &(&a.alpha / &b.alpha)).is_some_and(|j| j > 0))
}

/// Whether the two indices lie in the same `q`-orbit.
pub fn pair_comparable(q: &QParam, a: &PairIndex, b: &PairIndex) -> Result<bool> {
    Ok(pair_leq(q, a, b)? || pair_leq(q, b, a)?)
}

/// Checks the chain-independent consequence of the action of `D_q` on
/// `Psi_{alpha,s}` exactly on the trusted overlap:
///
/// * `q != 1`: `(M - alpha)^s (M - alpha/q)^(s-1) D_q Psi_{alpha,s}
///   = q^(2-s) / (alpha (q-1)) * (alpha/q - alpha)^s * Psi_{alpha/q,1}`;
/// * `q = 1`: `(M - alpha)^s D_1 Psi_{alpha,s} = -s Psi_{alpha,1}`.
pub fn collapsed_identity_check(
    q: &QParam,
    alpha: &Rational,
    s: u32,
    lo: i64,
    hi: i64,
    min_width: usize,
) -> Result<bool> {
    let qv = q.require_numeric()?.clone();
    if s == 0 {
        return Err(Error::DegenerateWindow);
    }
    let chain = psi_chain(alpha, s, lo, hi)?;
    let top = &chain[s as usize - 1];
    let d = top.q_derivative(q)?;
    if qv.is_one() {
        let lhs = d.m_minus_pow(alpha, s)?;
        let rhs = chain[0].scale(&-int(s as i64));
        return lhs.agrees_with(&rhs, min_width);
    }
    let alpha_q = alpha / &qv;
    let lhs = d.m_minus_pow(&alpha_q, s - 1)?.m_minus_pow(alpha, s)?;
    let c0 = rational_pow(&qv, 2 - s as i64) / (alpha * (&qv - Rational::one()));
    let factor = c0 * rational_pow(&(&alpha_q - alpha), s as i64);
    let rhs = psi_chain(&alpha_q, 1, lo, hi)?.remove(0).scale(&factor);
    lhs.agrees_with(&rhs, min_width)
}

/// Index set `(alpha, s)` whose `Psi_{alpha,s}` span the space containing
/// every simultaneous eigenvector of `P` and a polynomial element of degree
/// at most `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpdIndexSet {
    pub indices: Vec<PairIndex>,
    /// Roots maximal for `beta <= beta'` iff `beta = q^j beta'`, `j >= 0`
    /// (for `q = 1`, all roots).
    pub maximal: Vec<Rational>,
    /// Largest `j` with `beta = q^j beta_i` over all roots (0 for `q = 1`).
    pub j_max: u32,
    /// Set when no nonzero root was supplied; `indices` is then empty.
    pub no_nonzero_roots: bool,
}

/// `roots` are the roots of the leading coefficient `p_m` with
/// multiplicities; zero roots are ignored.
pub fn lpd_index_set(q: &QParam, roots: &[(Rational, u32)], m: usize, d: usize) -> Result<LpdIndexSet> {
    let qv = q.require_numeric()?.clone();
    if m == 0 {
        return Err(Error::ZeroOrder);
    }
    if d == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let mut distinct: Vec<Rational> = Vec::new();
    for (r, _) in roots {
        if r.is_zero() {
            continue;
        }
        if distinct.contains(r) {
            return Err(Error::DuplicateRoot);
        }
        distinct.push(r.clone());
    }
    if distinct.is_empty() {
        return Ok(LpdIndexSet { indices: Vec::new(), maximal: Vec::new(), j_max: 0, no_nonzero_roots: true });
    }
    distinct.sort();
    let levels = 1..=d as u32;
    if qv.is_one() {
        let indices = distinct.iter().flat_map(|a| levels.clone().map(move |s| PairIndex::new(a.clone(), s))).collect();
        return Ok(LpdIndexSet { indices, maximal: distinct, j_max: 0, no_nonzero_roots: false });
    }
    // j >= 0 with beta = q^j * other
    let exponent = |beta: &Rational, other: &Rational| solve_power(&qv, &(beta / other)).filter(|&j| j >= 0);
    let maximal: Vec<Rational> =
        distinct.iter().filter(|b| !distinct.iter().any(|o| o != *b && exponent(b, o).is_some())).cloned().collect();
    let j_max = distinct
        .iter()
        .map(|b| maximal.iter().find_map(|mx| exponent(b, mx)).expect("every root lies above a maximal root"))
        .max()
        .unwrap() as u32;
    let top = j_max as usize + m + (d - 1) * m;
    let mut indices = Vec::new();
    for beta in &maximal {
        for j in 0..=top {
            let alpha = beta * rational_pow(&qv, j as i64);
            for s in levels.clone() {
                indices.push(PairIndex::new(alpha.clone(), s));
            }
        }
    }
    Ok(LpdIndexSet { indices, maximal, j_max, no_nonzero_roots: false })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    fn num(n: i64, d: i64) -> QParam {
        QParam::numeric(rat(n, d)).unwrap()
    }

    #[test]
    fn act_examples() {
        let q = num(2, 1);
        let t3 = LaurentWindow::monomial(3, -5, 5).unwrap();
        let got = act(&AlgebraElement::a(&q), &t3).unwrap();
        assert_eq!(got.coeff(2), Some(&int(7)));
        assert!((got.lo()..=got.hi()).filter(|&n| n != 2).all(|n| got.coeff(n).unwrap().is_zero()));

        let ones = LaurentWindow::from_fn(-2, 2, |_| Rational::one()).unwrap();
        let shifted = act(&AlgebraElement::b(&q), &ones).unwrap();
        assert_eq!((shifted.lo(), shifted.hi()), (-1, 3));
        assert_eq!(shifted.trusted(), (-1, 3));
        assert!(shifted.coeffs().iter().all(One::is_one));
    }

    #[test]
    fn act_needs_numeric_q() {
        let v = LaurentWindow::monomial(0, -2, 2).unwrap();
        assert_eq!(act(&AlgebraElement::a(&QParam::Symbolic), &v), Err(Error::SymbolicModeUnsupported));
    }

    #[test]
    fn psi_examples() {
        let two = int(2);
        let chain = psi_chain(&two, 2, -20, 20).unwrap();
        for n in -20..=20 {
            assert_eq!(chain[0].coeff(n).unwrap(), &rational_pow(&two, -n));
        }
        let back = chain[1].m_minus(&two).unwrap();
        assert!(back.agrees_with(&chain[0], 16).unwrap());
        let ones = psi_chain(&Rational::one(), 1, -8, 8).unwrap();
        assert!(ones[0].coeffs().iter().all(One::is_one));
        assert!(ones[0].m_minus(&Rational::one()).unwrap().is_zero_on_trusted());
        assert_eq!(psi_chain(&Rational::zero(), 1, 0, 3), Err(Error::ZeroRoot));
    }

    #[test]
    fn factored_kernels() {
        let k = kernel_basis_factored(&int(1), 0, &[(int(2), 1)], -20, 20).unwrap();
        assert_eq!(k.dim(), 1);
        let k = kernel_basis_factored(&int(1), 3, &[], -20, 20).unwrap();
        assert_eq!(k.dim(), 0);
        let k = kernel_basis_factored(&int(1), 0, &[(int(1), 2), (int(3), 1)], -20, 20).unwrap();
        assert_eq!(k.dim(), 3);
        for v in &k.basis {
            assert!(v.poly_in_m(&k.polynomial).unwrap().is_zero_on_trusted());
        }
        assert_eq!(kernel_basis_factored(&int(1), 0, &[(int(1), 1), (int(1), 2)], -5, 5), Err(Error::DuplicateRoot));
    }

    #[test]
    fn pair_order_examples() {
        let q2 = num(2, 1);
        let p = |a: i64, s: u32| PairIndex::new(int(a), s);
        assert!(pair_leq(&q2, &p(4, 3), &p(2, 1)).unwrap());
        assert!(!pair_leq(&q2, &p(2, 1), &p(4, 1)).unwrap());
        let q1 = num(1, 1);
        assert!(pair_leq(&q1, &p(4, 1), &p(4, 3)).unwrap());
        assert!(!pair_leq(&q1, &p(4, 1), &p(2, 5)).unwrap());
        assert!(pair_comparable(&q2, &p(2, 1), &p(16, 4)).unwrap());
        assert!(!pair_comparable(&q2, &p(3, 1), &p(2, 1)).unwrap());
    }

    #[test]
    fn collapsed_examples() {
        assert!(collapsed_identity_check(&num(3, 1), &int(2), 1, -40, 40, 16).unwrap());
        assert!(collapsed_identity_check(&num(2, 1), &int(1), 2, -40, 40, 16).unwrap());
        assert!(collapsed_identity_check(&num(1, 1), &int(2), 3, -40, 40, 16).unwrap());
    }

    #[test]
    fn collapsed_rejects_wrong_constant() {
        // Same left side as the q = 3 check, compared with a right side off by 2.
        let q = num(3, 1);
        let alpha = int(2);
        let chain = psi_chain(&alpha, 1, -30, 30).unwrap();
        let lhs = chain[0].q_derivative(&q).unwrap().m_minus(&alpha).unwrap();
        let alpha_q = rat(2, 3);
        let factor = int(3) / (int(2) * int(2)) * (&alpha_q - &alpha) * int(2);
        let rhs = psi_chain(&alpha_q, 1, -30, 30).unwrap().remove(0).scale(&factor);
        assert!(!lhs.agrees_with(&rhs, 16).unwrap());
    }

    #[test]
    fn lpd_examples() {
        let q1 = num(1, 1);
        let set = lpd_index_set(&q1, &[(int(1), 1), (int(-1), 1)], 2, 3).unwrap();
        assert_eq!(set.indices.len(), 6);

        let q2 = num(2, 1);
        let set = lpd_index_set(&q2, &[(int(1), 1)], 1, 2).unwrap();
        assert_eq!(set.indices.len(), 6);
        assert_eq!(set.j_max, 0);

        let set = lpd_index_set(&q2, &[(int(1), 1), (int(2), 1)], 1, 1).unwrap();
        assert_eq!(set.maximal, alloc::vec![int(1)]);
        assert_eq!(set.j_max, 1);
        let alphas: Vec<Rational> = set.indices.iter().map(|i| i.alpha.clone()).collect();
        assert_eq!(alphas, alloc::vec![int(1), int(2), int(4)]);

        let empty = lpd_index_set(&q2, &[(int(0), 2)], 1, 1).unwrap();
        assert!(empty.no_nonzero_roots && empty.indices.is_empty());
    }

    #[test]
    fn windows_compare_on_overlap() {
        let a = LaurentWindow::from_fn(0, 10, int).unwrap();
        let b = LaurentWindow::from_fn(5, 30, int).unwrap();
        assert!(a.agrees_with(&b, 6).unwrap());
        assert_eq!(a.agrees_with(&b, 7), Err(Error::DegenerateWindow));
        assert_eq!(LaurentWindow::new(0, alloc::vec![int(1)], (0, 1)), Err(Error::DegenerateWindow));
    }
}
