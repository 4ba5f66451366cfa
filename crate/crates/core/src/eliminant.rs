//! The Burchnall-Chaundy eliminant of two elements and its curves.
//!
//! For `P` of order `m` and `Q` of order `n` the eliminant matrix has
//! `m + n` rows. Rows `1..=n` hold the coefficient vectors of
//! `A^(k-1) P - lambda A^(k-1)`, rows `n+1..=n+m` those of
//! `A^l Q - mu A^l`, `l = 0..m`. Its determinant `Delta(X, lambda, mu)`
//! splits as `sum_i delta_i(lambda, mu) X^i`, and for commuting `P`, `Q`
//! every `delta_i(P, Q)` vanishes.

use alloc::vec::Vec;

use crate::algebra::{substitute_ordered, AlgebraElement};
use crate::poly::{BiPoly, TriMatrix, TriPoly, UniPoly};
use crate::scalars::Scalar;
use crate::{Error, Result};

fn orders(p: &AlgebraElement, q: &AlgebraElement) -> Result<(usize, usize)> {
    if p.q() != q.q() {
        return Err(Error::ModeMismatch);
    }
    match (p.order(), q.order()) {
        (Some(m), Some(n)) if m >= 1 && n >= 1 => Ok((m, n)),
        _ => Err(Error::ZeroOrder),
    }
}

/// The `(m+n) x (m+n)` eliminant matrix.
pub fn build_matrix(p: &AlgebraElement, q: &AlgebraElement) -> Result<TriMatrix> {
    let (m, n) = orders(p, q)?;
    let size = m + n;
    let mut mat = TriMatrix::zeros(size);
    let lambda = TriPoly::var(1);
    let mu = TriPoly::var(2);
    let mut fill = |row: usize, elem: &AlgebraElement, shift: usize, var: &TriPoly| {
        for (j, c) in elem.terms() {
            mat.set(row, j, TriPoly::from_x_poly(c));
        }
        let v = mat.get(row, shift) - var;
        mat.set(row, shift, v);
    };
    let mut cur = p.clone();
    for k in 0..n {
        fill(k, &cur, k, &lambda);
        cur = cur.left_mul_a();
    }
    let mut cur = q.clone();
    for l in 0..m {
        fill(n + l, &cur, l, &mu);
        cur = cur.left_mul_a();
    }
    Ok(mat)
}

/// `Delta_{P,Q}(X, lambda, mu)`.
pub fn eliminant(p: &AlgebraElement, q: &AlgebraElement) -> Result<TriPoly> {
    Ok(build_matrix(p, q)?.determinant())
}

/// The curves `delta_0..=delta_s` with the degree bounds `s` and `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveSet {
    pub m: usize,
    pub n: usize,
    /// `n max deg p_j + m max deg q_j`, the bound on `deg_X Delta`.
    pub s: usize,
    /// `n(n-1)/2 max deg p_j + m(m-1)/2 max deg q_j`, the bound on the power
    /// of `q` introduced by the construction.
    pub t: usize,
    /// `delta_i`, padded with zeros to at least `s + 1` entries.
    pub delta: Vec<BiPoly>,
    pub eliminant: TriPoly,
}

impl CurveSet {
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, &BiPoly)> {
        self.delta.iter().enumerate().filter(|(_, d)| !d.is_zero())
    }
}

fn degree_bounds(p: &AlgebraElement, q: &AlgebraElement, m: usize, n: usize) -> (usize, usize) {
    let dp = p.max_coeff_degree().unwrap_or(0);
    let dq = q.max_coeff_degree().unwrap_or(0);
    let s = n * dp + m * dq;
    let t = n * (n - 1) / 2 * dp + m * (m - 1) / 2 * dq;
    (s, t)
}

pub fn curves(p: &AlgebraElement, q: &AlgebraElement) -> Result<CurveSet> {
    let (m, n) = orders(p, q)?;
    let delta_poly = eliminant(p, q)?;
    Ok(assemble(p, q, m, n, delta_poly))
}

fn assemble(p: &AlgebraElement, q: &AlgebraElement, m: usize, n: usize, eliminant: TriPoly) -> CurveSet {
    let (s, t) = degree_bounds(p, q, m, n);
    let mut delta = eliminant.extract_x_coefficients();
    if delta.len() < s + 1 {
        delta.resize(s + 1, BiPoly::zero());
    }
    CurveSet { m, n, s, t, delta, eliminant }
}

/// `(-1)^n prod_{k=0}^{m-1} lead(k)(q^k X)`.
fn leading_product(lead: &UniPoly, q: &crate::QParam, count: usize, sign_exp: usize) -> UniPoly {
    let mut prod = UniPoly::one();
    for k in 0..count {
        prod = prod.mul(&lead.scale_argument(q, k as u32));
    }
    if sign_exp % 2 == 1 {
        -&prod
    } else {
        prod
    }
}

/// The q-exponent check on the curve coefficients (symbolic `q` only).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QDegreeCheck {
    /// Smallest and largest power of `q` over all coefficients of all `delta_i`.
    pub observed: Option<(i64, i64)>,
    /// Admissible range. With `q`-free inputs this is `[0, t]`; powers of `q`
    /// already present in the inputs widen it by `n` (resp. `m`) times their
    /// extreme exponents.
    pub allowed: (i64, i64),
    pub ok: bool,
}

/// One curve with its substitution residual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveResidual {
    pub index: usize,
    pub delta: BiPoly,
    /// `delta_i(P, Q)`; `None` when skipped because `P`, `Q` do not commute.
    pub residual: Option<AlgebraElement>,
}

/// Outcome of every structural check on one pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub commuting: bool,
    pub curves: CurveSet,
    /// `lambda`-degree is exactly `n` with coefficient
    /// `(-1)^n prod_{k<m} q_n(q^k X)`.
    pub lambda_leading: bool,
    /// `mu`-degree is exactly `m` with coefficient
    /// `(-1)^(m + mn) prod_{k<n} p_m(q^k X)`. The extra `(-1)^(mn)` is the
    /// sign of moving the `m` rows of `Q` past the `n` rows of `P`.
    pub mu_leading: bool,
    /// `deg_X Delta <= s`.
    pub x_degree_bounded: bool,
    /// Every curve has total degree at most `max(m, n)`.
    pub curve_degree_bounded: bool,
    pub q_degree: Option<QDegreeCheck>,
    /// With integer input coefficients: all curve coefficients are integral.
    pub integral: Option<bool>,
    pub some_curve_nonzero: bool,
    pub residuals: Vec<CurveResidual>,
}

impl VerificationReport {
    pub fn pass(&self) -> bool {
        self.commuting
            && self.lambda_leading
            && self.mu_leading
            && self.x_degree_bounded
            && self.curve_degree_bounded
            && self.q_degree.as_ref().is_none_or(|c| c.ok)
            && self.integral.unwrap_or(true)
            && self.some_curve_nonzero
            && self.residuals.iter().all(|r| r.residual.as_ref().is_some_and(AlgebraElement::is_zero))
    }
}

fn leading_matches(delta: &TriPoly, var: usize, degree: usize, expected: &UniPoly) -> bool {
    if delta.degree_in(var) != Some(degree as u32) {
        return false;
    }
    delta.coefficient_of(var, degree as u32) == TriPoly::from_x_poly(expected)
}

fn q_exponent_span(elem: &AlgebraElement) -> (i64, i64) {
    elem.scalars().filter_map(Scalar::q_degree_range).fold((0, 0), |(lo, hi), (a, b)| (lo.min(a), hi.max(b)))
}

/// Runs every structural check. Non-commuting inputs still get their matrix,
/// eliminant and curves; only the substitution step is skipped.
pub fn verify(p: &AlgebraElement, q: &AlgebraElement) -> Result<VerificationReport> {
    let (m, n) = orders(p, q)?;
    let commuting = p.commutes_with(q)?;
    let curves = curves(p, q)?;
    let delta = &curves.eliminant;
    let qp = p.q();

    let lambda_expected = leading_product(&q.coeff(n), qp, m, n);
    let mu_expected = leading_product(&p.coeff(m), qp, n, m + m * n);
    let lambda_leading = leading_matches(delta, 1, n, &lambda_expected);
    let mu_leading = leading_matches(delta, 2, m, &mu_expected);
    let x_degree_bounded = delta.degree_in(0).is_none_or(|d| d as usize <= curves.s);
    let max_mn = m.max(n) as u32;
    let curve_degree_bounded = curves.delta.iter().all(|d| d.total_degree().is_none_or(|t| t <= max_mn));

    let (q_degree, integral) = if qp.is_symbolic() {
        let (plo, phi) = q_exponent_span(p);
        let (qlo, qhi) = q_exponent_span(q);
        let allowed = (n as i64 * plo + m as i64 * qlo, curves.t as i64 + n as i64 * phi + m as i64 * qhi);
        let observed = curves
            .delta
            .iter()
            .flat_map(|d| d.terms().filter_map(|(_, c)| c.q_degree_range()).collect::<Vec<_>>())
            .reduce(|(a, b), (c, d)| (a.min(c), b.max(d)));
        let ok = observed.is_none_or(|(lo, hi)| lo >= allowed.0 && hi <= allowed.1);
        let integer_inputs = p.scalars().chain(q.scalars()).all(Scalar::has_integer_coefficients);
        let integral =
            integer_inputs.then(|| curves.delta.iter().all(|d| d.terms().all(|(_, c)| c.has_integer_coefficients())));
        (Some(QDegreeCheck { observed, allowed, ok }), integral)
    } else {
        (None, None)
    };

    let some_curve_nonzero = curves.delta.iter().any(|d| !d.is_zero());
    let residuals = curves
        .delta
        .iter()
        .enumerate()
        .map(|(index, d)| CurveResidual {
            index,
            delta: d.clone(),
            residual: commuting.then(|| substitute_ordered(d, p, q)),
        })
        .collect();

    Ok(VerificationReport {
        commuting,
        curves,
        lambda_leading,
        mu_leading,
        x_degree_bounded,
        curve_degree_bounded,
        q_degree,
        integral,
        some_curve_nonzero,
        residuals,
    })
}

/// `(f(W), g(W))`, a commuting pair of orders `order(W) deg f` and
/// `order(W) deg g`.
pub fn make_commuting_pair(w: &AlgebraElement, f: &UniPoly, g: &UniPoly) -> Result<(AlgebraElement, AlgebraElement)> {
    if w.order().is_none_or(|o| o < 1) {
        return Err(Error::ZeroOrder);
    }
    if f.degree().is_none_or(|d| d < 1) || g.degree().is_none_or(|d| d < 1) {
        return Err(Error::ConstantPolynomial);
    }
    Ok((w.eval_poly(f), w.eval_poly(g)))
}
