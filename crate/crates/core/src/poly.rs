//! Polynomials over [`Scalar`]: dense univariate, sparse in `(lambda, mu)`
//! and `(X, lambda, mu)`, plus determinants of matrices over the trivariate
//! ring.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::linalg::RationalMatrix;
use crate::scalars::{QParam, Rational, Scalar};

/// Dense univariate polynomial, index = degree. No trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<Scalar>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        UniPoly::from_coeffs(vec![c])
    }

    /// The variable itself.
    pub fn x() -> Self {
        UniPoly::monomial(Scalar::one(), 1)
    }

    pub fn monomial(c: Scalar, degree: usize) -> Self {
        let mut coeffs = vec![Scalar::zero(); degree + 1];
        coeffs[degree] = c;
        UniPoly::from_coeffs(coeffs)
    }

    /// Constant term first.
    pub fn from_coeffs(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Scalar) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, at: &Scalar) -> Scalar {
        self.coeffs.iter().rev().fold(Scalar::zero(), |acc, c| acc * at + c)
    }

    /// `self(inner(Z))`, by Horner's rule.
    pub fn compose(&self, inner: &UniPoly) -> UniPoly {
        self.coeffs.iter().rev().fold(UniPoly::zero(), |acc, c| &(&acc * inner) + &UniPoly::constant(c.clone()))
    }

    /// `p(q^k X)`: the coefficient of `X^i` is multiplied by `q^(k i)`.
    pub fn scale_argument(&self, q: &QParam, k: u32) -> UniPoly {
        let step = q.pow(k as i64);
        let mut factor = Scalar::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c * &factor);
            factor = factor * &step;
        }
        UniPoly::from_coeffs(out)
    }

    fn zip_with(&self, rhs: &UniPoly, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = Scalar::zero();
        UniPoly::from_coeffs(
            (0..n).map(|i| f(self.coeffs.get(i).unwrap_or(&zero), rhs.coeffs.get(i).unwrap_or(&zero))).collect(),
        )
    }

    fn product(&self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        UniPoly::from_coeffs(out)
    }

    pub fn pow(&self, k: u32) -> UniPoly {
        (0..k).fold(UniPoly::one(), |acc, _| &acc * self)
    }
}

impl Add<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        self.product(rhs)
    }
}

impl UniPoly {
    /// Method form of `&self * rhs`.
    pub fn mul(&self, rhs: &UniPoly) -> UniPoly {
        self.product(rhs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

/// Sparse polynomial in `N` commuting variables over [`Scalar`], keyed by
/// exponent vectors. Iteration order is lexicographic in the exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparsePoly<const N: usize> {
    terms: BTreeMap<[u32; N], Scalar>,
}

/// Polynomial in `(lambda, mu)`.
pub type BiPoly = SparsePoly<2>;
/// Polynomial in `(X, lambda, mu)`.
pub type TriPoly = SparsePoly<3>;

impl<const N: usize> SparsePoly<N> {
    pub fn zero() -> Self {
        SparsePoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        SparsePoly::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        SparsePoly::term(c, [0; N])
    }

    pub fn term(c: Scalar, exps: [u32; N]) -> Self {
        let mut p = SparsePoly::zero();
        p.add_term(exps, c);
        p
    }

    /// The `i`-th variable.
    pub fn var(i: usize) -> Self {
        let mut e = [0; N];
        e[i] = 1;
        SparsePoly::term(Scalar::one(), e)
    }

    pub fn from_terms(iter: impl IntoIterator<Item = ([u32; N], Scalar)>) -> Self {
        let mut p = SparsePoly::zero();
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exps: [u32; N], c: Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exps).or_default();
        *slot = &*slot + &c;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32; N], &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32; N]) -> Scalar {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    /// Highest exponent of variable `i`, `None` for zero.
    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[i]).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        SparsePoly::from_terms(self.terms.iter().map(|(e, a)| (*e, a * c)))
    }

    fn product(&self, rhs: &Self) -> Self {
        let mut out = SparsePoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let mut e = *ea;
                for k in 0..N {
                    e[k] += eb[k];
                }
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    /// Evaluates at a rational point; `q0` substitutes symbolic `q`.
    pub fn eval_rational(&self, q0: Option<&Rational>, point: &[Rational; N]) -> Rational {
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut v = match q0 {
                Some(q) => c.eval_q(q),
                None => c.as_rational().cloned().expect("symbolic coefficient needs a value for q"),
            };
            for k in 0..N {
                for _ in 0..e[k] {
                    v *= &point[k];
                }
            }
            acc += v;
        }
        acc
    }
}

impl<const N: usize> Add<&SparsePoly<N>> for &SparsePoly<N> {
    type Output = SparsePoly<N>;
    fn add(self, rhs: &SparsePoly<N>) -> SparsePoly<N> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<const N: usize> Sub<&SparsePoly<N>> for &SparsePoly<N> {
    type Output = SparsePoly<N>;
    fn sub(self, rhs: &SparsePoly<N>) -> SparsePoly<N> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl<const N: usize> Mul<&SparsePoly<N>> for &SparsePoly<N> {
    type Output = SparsePoly<N>;
    fn mul(self, rhs: &SparsePoly<N>) -> SparsePoly<N> {
        self.product(rhs)
    }
}

impl<const N: usize> Neg for &SparsePoly<N> {
    type Output = SparsePoly<N>;
    fn neg(self) -> SparsePoly<N> {
        SparsePoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

const TRI_VARS: [&str; 3] = ["X", "l", "m"];
const BI_VARS: [&str; 2] = ["l", "m"];

fn write_sparse<const N: usize>(f: &mut fmt::Formatter<'_>, p: &SparsePoly<N>, names: &[&str; N]) -> fmt::Result {
    if p.is_zero() {
        return f.write_str("0");
    }
    for (i, (e, c)) in p.terms.iter().enumerate() {
        let mono: Vec<alloc::string::String> = (0..N)
            .filter(|&k| e[k] > 0)
            .map(|k| if e[k] == 1 { names[k].into() } else { alloc::format!("{}^{}", names[k], e[k]) })
            .collect();
        let (negative, body) = c.split_sign();
        match (i, negative) {
            (0, true) => f.write_str("-")?,
            (0, false) => {}
            (_, true) => f.write_str(" - ")?,
            (_, false) => f.write_str(" + ")?,
        }
        let wrap = body.terms().len() > 1;
        if mono.is_empty() {
            write_coeff(f, &body, wrap)?;
        } else if body.is_one() {
            f.write_str(&mono.join("*"))?;
        } else {
            write_coeff(f, &body, wrap)?;
            write!(f, "*{}", mono.join("*"))?;
        }
    }
    Ok(())
}

fn write_coeff(f: &mut fmt::Formatter<'_>, c: &Scalar, wrap: bool) -> fmt::Result {
    if wrap {
        write!(f, "({c})")
    } else {
        write!(f, "{c}")
    }
}

impl fmt::Display for SparsePoly<3> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sparse(f, self, &TRI_VARS)
    }
}

impl fmt::Display for SparsePoly<2> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sparse(f, self, &BI_VARS)
    }
}

impl TriPoly {
    /// Embeds a polynomial in `X`.
    pub fn from_x_poly(p: &UniPoly) -> TriPoly {
        TriPoly::from_terms(p.coeffs().iter().enumerate().map(|(i, c)| ([i as u32, 0, 0], c.clone())))
    }

    /// Splits `sum_i delta_i(lambda, mu) X^i` into its `delta_i`, `i = 0..=deg_X`.
    pub fn extract_x_coefficients(&self) -> Vec<BiPoly> {
        let Some(deg) = self.degree_in(0) else {
            return Vec::new();
        };
        let mut out = vec![BiPoly::zero(); deg as usize + 1];
        for (e, c) in &self.terms {
            out[e[0] as usize].add_term([e[1], e[2]], c.clone());
        }
        out
    }

    /// Inverse of [`TriPoly::extract_x_coefficients`].
    pub fn from_x_coefficients(deltas: &[BiPoly]) -> TriPoly {
        TriPoly::from_terms(
            deltas
                .iter()
                .enumerate()
                .flat_map(|(i, d)| d.terms().map(move |(e, c)| ([i as u32, e[0], e[1]], c.clone()))),
        )
    }

    /// Coefficient of `var^k` as a polynomial in the remaining variables
    /// (exponent of `var` set to zero).
    pub fn coefficient_of(&self, var: usize, k: u32) -> TriPoly {
        TriPoly::from_terms(self.terms.iter().filter(|(e, _)| e[var] == k).map(|(e, c)| {
            let mut e = *e;
            e[var] = 0;
            (e, c.clone())
        }))
    }

    /// Exact division, `None` if `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &TriPoly) -> Option<TriPoly> {
        let num = Flat::from_tri(self);
        let den = Flat::from_tri(divisor);
        num.exact_div(&den).map(|f| f.into_tri())
    }
}

/// Exponent layout `(X, lambda, mu, q)` with rational coefficients; `q` may be
/// negative. Lexicographic order on this layout is a monomial order on the
/// Laurent ring, which makes leading-term division exact.
struct Flat(BTreeMap<[i64; 4], Rational>);

impl Flat {
    fn from_tri(p: &TriPoly) -> Flat {
        let mut m = BTreeMap::new();
        for (e, c) in &p.terms {
            for (qe, r) in c.terms() {
                m.insert([e[0] as i64, e[1] as i64, e[2] as i64, qe], r);
            }
        }
        Flat(m)
    }

    fn into_tri(self) -> TriPoly {
        let mut grouped: BTreeMap<[u32; 3], BTreeMap<i64, Rational>> = BTreeMap::new();
        for (e, c) in self.0 {
            grouped.entry([e[0] as u32, e[1] as u32, e[2] as u32]).or_default().insert(e[3], c);
        }
        TriPoly::from_terms(grouped.into_iter().map(|(e, m)| (e, Scalar::from_laurent(m))))
    }

    fn q_range(&self) -> (i64, i64) {
        let lo = self.0.keys().map(|e| e[3]).min().unwrap_or(0);
        let hi = self.0.keys().map(|e| e[3]).max().unwrap_or(0);
        (lo, hi)
    }

    fn exact_div(&self, den: &Flat) -> Option<Flat> {
        let (den_lead, den_lc) = den.0.iter().next_back()?;
        if self.0.is_empty() {
            return Some(Flat(BTreeMap::new()));
        }
        // Quotient q-exponents are confined by the extreme q-degrees of an
        // exact factorization; anything outside signals a remainder.
        let (nlo, nhi) = self.q_range();
        let (dlo, dhi) = den.q_range();
        let (qlo, qhi) = (nlo - dlo, nhi - dhi);
        let mut rem = self.0.clone();
        let mut quot = BTreeMap::new();
        while let Some((lead, lc)) = rem.iter().next_back() {
            let mut e = [0i64; 4];
            for k in 0..4 {
                e[k] = lead[k] - den_lead[k];
            }
            if e[..3].iter().any(|&x| x < 0) || e[3] < qlo || e[3] > qhi {
                return None;
            }
            let c = lc / den_lc;
            for (de, dc) in &den.0 {
                let key = [e[0] + de[0], e[1] + de[1], e[2] + de[2], e[3] + de[3]];
                let slot = rem.entry(key).or_insert_with(Rational::zero);
                *slot -= &c * dc;
                if slot.is_zero() {
                    rem.remove(&key);
                }
            }
            quot.insert(e, c);
        }
        Some(Flat(quot))
    }
}

/// Square matrix over the trivariate ring, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriMatrix {
    size: usize,
    entries: Vec<TriPoly>,
}

impl TriMatrix {
    pub fn zeros(size: usize) -> Self {
        TriMatrix { size, entries: vec![TriPoly::zero(); size * size] }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = TriMatrix::zeros(size);
        for i in 0..size {
            m.set(i, i, TriPoly::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<TriPoly>>) -> Self {
        let size = rows.len();
        assert!(rows.iter().all(|r| r.len() == size), "matrix must be square");
        TriMatrix { size, entries: rows.into_iter().flatten().collect() }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, r: usize, c: usize) -> &TriPoly {
        &self.entries[r * self.size + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: TriPoly) {
        self.entries[r * self.size + c] = v;
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.size {
            self.entries.swap(a * self.size + c, b * self.size + c);
        }
    }

    /// Determinant by Laplace expansion down the rows, memoized on the set of
    /// columns still available. Division free; zero entries are skipped.
    pub fn determinant(&self) -> TriPoly {
        assert!(self.size <= 64, "determinant supports at most 64 columns");
        if self.size == 0 {
            return TriPoly::one();
        }
        let full = if self.size == 64 { u64::MAX } else { (1u64 << self.size) - 1 };
        let mut memo = BTreeMap::new();
        self.minor(0, full, &mut memo)
    }

    fn minor(&self, row: usize, cols: u64, memo: &mut BTreeMap<u64, TriPoly>) -> TriPoly {
        if row == self.size {
            return TriPoly::one();
        }
        if let Some(v) = memo.get(&cols) {
            return v.clone();
        }
        let mut acc = TriPoly::zero();
        let mut position = 0;
        for c in 0..self.size {
            if cols & (1 << c) == 0 {
                continue;
            }
            let entry = self.get(row, c);
            if !entry.is_zero() {
                let sub = self.minor(row + 1, cols & !(1 << c), memo);
                if !sub.is_zero() {
                    let term = entry * &sub;
                    acc = if position % 2 == 0 { &acc + &term } else { &acc - &term };
                }
            }
            position += 1;
        }
        memo.insert(cols, acc.clone());
        acc
    }

    /// Fraction-free (Bareiss) elimination; an independent route to the
    /// determinant used for cross-checks.
    pub fn determinant_bareiss(&self) -> TriPoly {
        let n = self.size;
        if n == 0 {
            return TriPoly::one();
        }
        let mut m = self.clone();
        let mut negate = false;
        let mut prev = TriPoly::one();
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                match (k + 1..n).find(|&r| !m.get(r, k).is_zero()) {
                    Some(r) => {
                        m.swap_rows(k, r);
                        negate = !negate;
                    }
                    None => return TriPoly::zero(),
                }
            }
            let pivot = m.get(k, k).clone();
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(m.get(i, j) * &pivot) - &(m.get(i, k) * m.get(k, j));
                    let v = num.exact_div(&prev).expect("Bareiss step must divide exactly");
                    m.set(i, j, v);
                }
                m.set(i, k, TriPoly::zero());
            }
            prev = pivot;
        }
        let d = m.get(n - 1, n - 1).clone();
        if negate {
            -&d
        } else {
            d
        }
    }

    /// Substitutes a rational point (and `q0` for symbolic `q`) entrywise.
    pub fn eval_rational(&self, q0: Option<&Rational>, point: &[Rational; 3]) -> RationalMatrix {
        let n = self.size;
        RationalMatrix::from_fn(n, n, |r, c| self.get(r, c).eval_rational(q0, point))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{int, rat};

    fn s(n: i64) -> Scalar {
        Scalar::from(n)
    }

    fn x() -> TriPoly {
        TriPoly::var(0)
    }
    fn lam() -> TriPoly {
        TriPoly::var(1)
    }
    fn mu() -> TriPoly {
        TriPoly::var(2)
    }

    #[test]
    fn ring_ops_examples() {
        let p = UniPoly::from_coeffs(vec![s(1), s(1)]);
        let r = UniPoly::from_coeffs(vec![s(-1), s(1)]);
        assert_eq!(&p * &r, UniPoly::from_coeffs(vec![s(-1), s(0), s(1)]));
        assert_eq!(&p + &UniPoly::zero(), p);
        let got = &(&lam() - &x()) * &mu();
        assert_eq!(got, TriPoly::from_terms([([0, 1, 1], s(1)), ([1, 0, 1], s(-1))]));
    }

    #[test]
    fn scale_argument_examples() {
        let q2 = QParam::numeric(int(2)).unwrap();
        let p = UniPoly::from_coeffs(vec![s(1), s(0), s(1)]);
        assert_eq!(p.scale_argument(&q2, 1), UniPoly::from_coeffs(vec![s(1), s(0), s(4)]));
        assert_eq!(p.scale_argument(&q2, 0), p);
        let got = UniPoly::x().scale_argument(&QParam::Symbolic, 3);
        assert_eq!(got, UniPoly::monomial(QParam::Symbolic.pow(3), 1));
    }

    #[test]
    fn determinant_examples() {
        let neg = |p: TriPoly| -&p;
        let m2 = TriMatrix::from_rows(vec![vec![neg(lam()), TriPoly::one()], vec![neg(mu()), TriPoly::one()]]);
        assert_eq!(m2.determinant(), &mu() - &lam());
        let z = TriPoly::zero;
        let m3 = TriMatrix::from_rows(vec![
            vec![neg(lam()), TriPoly::one(), z()],
            vec![z(), neg(lam()), TriPoly::one()],
            vec![neg(mu()), z(), TriPoly::one()],
        ]);
        let expected = &(&lam() * &lam()) - &mu();
        assert_eq!(m3.determinant(), expected);
        assert_eq!(m3.determinant_bareiss(), expected);
        assert_eq!(TriMatrix::identity(4).determinant(), TriPoly::one());
        assert_eq!(TriMatrix::identity(4).determinant_bareiss(), TriPoly::one());
        assert_eq!(TriMatrix::zeros(0).determinant(), TriPoly::one());
    }

    #[test]
    fn bareiss_needs_pivoting() {
        let m = TriMatrix::from_rows(vec![vec![TriPoly::zero(), x()], vec![lam(), TriPoly::one()]]);
        let expected = -&(&x() * &lam());
        assert_eq!(m.determinant(), expected);
        assert_eq!(m.determinant_bareiss(), expected);
    }

    #[test]
    fn extract_x_coefficients_examples() {
        let d = &(&lam() * &lam()) - &mu();
        assert_eq!(d.extract_x_coefficients(), vec![BiPoly::from_terms([([2, 0], s(1)), ([0, 1], s(-1))])]);
        let xx = &x() * &x();
        let big = &xx.scale(&s(2)) * &d;
        let parts = big.extract_x_coefficients();
        assert_eq!(parts.len(), 3);
        assert!(parts[0].is_zero() && parts[1].is_zero());
        assert_eq!(parts[2], BiPoly::from_terms([([2, 0], s(2)), ([0, 1], s(-2))]));
        assert_eq!(TriPoly::from_x_coefficients(&parts), big);
        assert!(TriPoly::zero().extract_x_coefficients().is_empty());
    }

    #[test]
    fn exact_division_laurent() {
        let qs = QParam::Symbolic;
        let a = &TriPoly::constant(qs.pow(-2) + s(3)) * &(&x() + &TriPoly::constant(qs.pow(1)));
        let b = &x() + &TriPoly::constant(qs.pow(1));
        assert_eq!(a.exact_div(&b), Some(TriPoly::constant(qs.pow(-2) + s(3))));
        assert_eq!(x().exact_div(&(&x() + &TriPoly::one())), None);
        assert_eq!(
            TriPoly::constant(Scalar::Rat(rat(1, 2))).exact_div(&TriPoly::constant(s(2))),
            Some(TriPoly::constant(Scalar::Rat(rat(1, 4))))
        );
    }

    #[test]
    fn display_is_lexicographic() {
        let d = &(&lam() * &lam()) - &mu();
        assert_eq!(alloc::format!("{d}"), "-m + l^2");
        let t = TriPoly::from_terms([([1, 0, 0], QParam::Symbolic.pow(1) + s(1)), ([0, 0, 0], s(-3))]);
        assert_eq!(alloc::format!("{t}"), "-3 + (1 + q)*X");
    }
}
