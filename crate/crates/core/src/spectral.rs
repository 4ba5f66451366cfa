//! Kernels and eigenvalues of elements acting on Laurent series.
//!
//! An element `P = sum_{j,i} p_{j,i} B^i A^j` sends `t^k` to
//! `sum_d beta_d(k) t^(k+d)` with
//! `beta_d(k) = sum_{i-j=d} p_{j,i} {k}_q {k-1}_q ... {k-j+1}_q`. Each `beta_d`
//! is a polynomial in `Z = {k}_q`, and the coefficient matrix
//! `gamma_{k,l} = beta_{k-l}(l)` of `P` is a band matrix. Its kernel is
//! computed on a finite window chosen so that the boundary diagonals have no
//! zeros outside it; kernel vectors then extend uniquely in both directions.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::algebra::AlgebraElement;
use crate::laurent::LaurentWindow;
use crate::linalg::RationalMatrix;
use crate::poly::UniPoly;
use crate::roots::{q_int_preimage, rational_roots};
use crate::scalars::{int, QParam, Rational, Scalar};
use crate::{Error, Result};

/// The diagonals `beta_d` of an element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BandProfile {
    q: QParam,
    /// Order of the element.
    pub order: usize,
    /// `beta_d` as a polynomial in `Z = {k}_q`, only for occurring `d`.
    pub beta: BTreeMap<i64, UniPoly>,
    /// Whether `d` occurs with some `j >= 1`.
    pub with_differentiation: BTreeMap<i64, bool>,
}

impl BandProfile {
    pub fn occurring(&self) -> impl Iterator<Item = i64> + '_ {
        self.beta.keys().copied()
    }

    pub fn d_max(&self) -> i64 {
        *self.beta.keys().next_back().expect("profile of a nonzero element")
    }

    pub fn d_min(&self) -> i64 {
        *self.beta.keys().next().expect("profile of a nonzero element")
    }

    /// `beta_d(k)`; zero for non-occurring `d`.
    pub fn beta_at(&self, d: i64, k: i64) -> Scalar {
        match self.beta.get(&d) {
            Some(b) => b.eval(&self.q.q_int(k)),
            None => Scalar::zero(),
        }
    }

    fn beta_at_rational(&self, d: i64, k: i64) -> Rational {
        self.beta_at(d, k).as_rational().cloned().expect("numeric q")
    }
}

pub fn band_profile(p: &AlgebraElement) -> Result<BandProfile> {
    if p.is_zero() {
        return Err(Error::ZeroElement);
    }
    let q = p.q().clone();
    let mut beta: BTreeMap<i64, UniPoly> = BTreeMap::new();
    let mut with_differentiation = BTreeMap::new();
    let mut falling: Vec<UniPoly> = Vec::new();
    for (j, pj) in p.terms() {
        while falling.len() <= j {
            falling.push(q.q_falling(falling.len()));
        }
        for (i, c) in pj.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let d = i as i64 - j as i64;
            let slot = beta.entry(d).or_default();
            *slot = &*slot + &falling[j].scale(c);
            let flag = with_differentiation.entry(d).or_insert(false);
            *flag |= j >= 1;
        }
    }
    // r_j has exact degree j, so an occurring d never cancels to zero.
    debug_assert!(beta.values().all(|b| !b.is_zero()));
    Ok(BandProfile { q, order: p.order().unwrap(), beta, with_differentiation })
}

/// `P t^k` via the diagonals, as exponent -> coefficient.
pub fn apply_to_monomial(p: &AlgebraElement, k: i64) -> BTreeMap<i64, Scalar> {
    let Ok(profile) = band_profile(p) else {
        return BTreeMap::new();
    };
    profile.occurring().map(|d| (k + d, profile.beta_at(d, k))).filter(|(_, c)| !c.is_zero()).collect()
}

/// Integer zeros of the two boundary diagonals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryZeros {
    pub at_max: Vec<i64>,
    pub at_min: Vec<i64>,
}

fn integer_zeros(q: &Rational, beta: &UniPoly) -> Vec<i64> {
    let coeffs: Vec<Rational> = beta.coeffs().iter().map(|c| c.as_rational().cloned().expect("numeric q")).collect();
    let mut ks: Vec<i64> = rational_roots(&coeffs).iter().filter_map(|z| q_int_preimage(q, z)).collect();
    ks.sort_unstable();
    ks
}

pub fn boundary_zeros(p: &AlgebraElement) -> Result<BoundaryZeros> {
    let q = p.q().require_numeric()?.clone();
    let profile = band_profile(p)?;
    Ok(zeros_of(&q, &profile))
}

fn zeros_of(q: &Rational, profile: &BandProfile) -> BoundaryZeros {
    let at_max = integer_zeros(q, &profile.beta[&profile.d_max()]);
    let at_min = integer_zeros(q, &profile.beta[&profile.d_min()]);
    BoundaryZeros { at_max, at_min }
}

/// A finite window `gamma_{k,l}`, columns `l_lo..=l_hi` and the rows fully
/// supported on them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteSubmatrix {
    pub l_lo: i64,
    pub l_hi: i64,
    pub k_lo: i64,
    pub k_hi: i64,
    pub entries: RationalMatrix,
}

impl FiniteSubmatrix {
    /// Row `r` of the matrix corresponds to `k = k_lo + r`, column `c` to `l = l_lo + c`.
    pub fn nullity(&self) -> usize {
        self.entries.nullity()
    }
}

fn build_submatrix(profile: &BandProfile, zeros: &BoundaryZeros, margin: i64) -> FiniteSubmatrix {
    let (d_max, d_min) = (profile.d_max(), profile.d_min());
    let all = zeros.at_max.iter().chain(&zeros.at_min).copied();
    let lo_zero = all.clone().chain([0]).min().unwrap();
    let hi_zero = all.chain([0]).max().unwrap();
    let l_lo = lo_zero - 1 - margin;
    let l_hi = hi_zero + 1 + (d_max - d_min) + margin;
    let k_lo = l_lo + d_max;
    let k_hi = l_hi + d_min;
    let rows = (k_hi - k_lo + 1).max(0) as usize;
    let cols = (l_hi - l_lo + 1) as usize;
    let entries = RationalMatrix::from_fn(rows, cols, |r, c| {
        let k = k_lo + r as i64;
        let l = l_lo + c as i64;
        profile.beta_at_rational(k - l, l)
    });
    FiniteSubmatrix { l_lo, l_hi, k_lo, k_hi, entries }
}

/// The finite submatrix, optionally widened by `margin` on both sides.
pub fn finite_submatrix(p: &AlgebraElement, margin: i64) -> Result<FiniteSubmatrix> {
    let q = p.q().require_numeric()?.clone();
    let profile = band_profile(p)?;
    let zeros = zeros_of(&q, &profile);
    Ok(build_submatrix(&profile, &zeros, margin))
}

/// `dim ker P` with the bounds `d_max - d_min <= dim <= d_max - d_min + min(N_max, N_min)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelDimension {
    pub d_max: i64,
    pub d_min: i64,
    pub n_max: usize,
    pub n_min: usize,
    pub dim: usize,
    pub lower: usize,
    pub upper: usize,
}

pub fn kernel_dimension(p: &AlgebraElement) -> Result<KernelDimension> {
    let q = p.q().require_numeric()?.clone();
    let profile = band_profile(p)?;
    let zeros = zeros_of(&q, &profile);
    let (d_max, d_min) = (profile.d_max(), profile.d_min());
    let (n_max, n_min) = (zeros.at_max.len(), zeros.at_min.len());
    let width = (d_max - d_min) as usize;
    let dim = if d_max == d_min { n_max } else { build_submatrix(&profile, &zeros, 0).nullity() };
    Ok(KernelDimension { d_max, d_min, n_max, n_min, dim, lower: width, upper: width + n_max.min(n_min) })
}

/// Bounds on `dim ker P` valid for every `q`, symbolic included:
/// `d_max - d_min <= dim <= d_max - d_min + min(deg beta_dmax, deg beta_dmin)`.
///
/// Each boundary diagonal has at most `deg beta_d` integer zeros because
/// `k -> {k}_q` is injective.
pub fn kernel_dimension_bounds(p: &AlgebraElement) -> Result<(usize, usize)> {
    let profile = band_profile(p)?;
    let (d_max, d_min) = (profile.d_max(), profile.d_min());
    let width = (d_max - d_min) as usize;
    let deg = |d: i64| profile.beta[&d].degree().unwrap_or(0);
    Ok((width, width + deg(d_max).min(deg(d_min))))
}

/// A basis of `ker P`, each vector written out exactly on `[lo, hi]`.
///
/// A one-dimensional kernel is normalized to coefficient 1 at `t^0` when
/// that coefficient is nonzero.
pub fn kernel_basis_window(p: &AlgebraElement, lo: i64, hi: i64) -> Result<Vec<LaurentWindow>> {
    let q = p.q().require_numeric()?.clone();
    let profile = band_profile(p)?;
    let zeros = zeros_of(&q, &profile);
    let (d_max, d_min) = (profile.d_max(), profile.d_min());

    if d_max == d_min {
        if zeros.at_max.iter().any(|&k| k < lo || k > hi) {
            return Err(Error::DegenerateWindow);
        }
        return zeros.at_max.iter().map(|&k| LaurentWindow::monomial(k, lo, hi)).collect();
    }

    let sub = build_submatrix(&profile, &zeros, 0);
    if sub.l_lo < lo || sub.l_hi > hi {
        return Err(Error::DegenerateWindow);
    }
    let mut basis = sub.entries.nullspace();
    if basis.len() == 1 && (0..=sub.l_hi - sub.l_lo).contains(&-sub.l_lo) {
        let at0 = basis[0][(-sub.l_lo) as usize].clone();
        if !at0.is_zero() {
            let inv = at0.recip();
            basis[0].iter_mut().for_each(|c| *c *= &inv);
        }
    }
    basis
        .into_iter()
        .map(|v| {
            let mut coeffs: BTreeMap<i64, Rational> =
                v.into_iter().enumerate().map(|(c, a)| (sub.l_lo + c as i64, a)).collect();
            // Upward: row k = l + d_min pins a_l through beta_{d_min}(l) != 0.
            for l in sub.l_hi + 1..=hi {
                let k = l + d_min;
                let mut acc = Rational::zero();
                for ll in k - d_max..l {
                    acc += profile.beta_at_rational(k - ll, ll) * &coeffs[&ll];
                }
                let lead = profile.beta_at_rational(d_min, l);
                coeffs.insert(l, -acc / lead);
            }
            // Downward: row k = l + d_max pins a_l through beta_{d_max}(l) != 0.
            for l in (lo..sub.l_lo).rev() {
                let k = l + d_max;
                let mut acc = Rational::zero();
                for ll in l + 1..=k - d_min {
                    acc += profile.beta_at_rational(k - ll, ll) * &coeffs[&ll];
                }
                let lead = profile.beta_at_rational(d_max, l);
                coeffs.insert(l, -acc / lead);
            }
            LaurentWindow::new(lo, coeffs.range(lo..=hi).map(|(_, c)| c.clone()).collect(), (lo, hi))
        })
        .collect()
}

/// Candidate eigenvalues in a fixed order: `0, 1, -1, 2, -2, 1/2, -1/2, 3, ...`.
fn candidates() -> impl Iterator<Item = Rational> {
    (1i64..).flat_map(|n| {
        let mut v = vec![];
        if n == 1 {
            v.push(Rational::zero());
        }
        v.push(int(n));
        v.push(int(-n));
        if n > 1 {
            v.push(Rational::new(1.into(), n.into()));
            v.push(Rational::new((-1).into(), n.into()));
        }
        v.into_iter()
    })
}

/// At least `count` distinct eigenvalues of `P`, each certified by
/// `dim ker (P - lambda) >= 1`.
///
/// For `P` homogeneous of degree 0 the eigenvalues are `beta_0(k)`, listed
/// for `k = 0, 1, 2, ...`.
pub fn spectrum_sample(p: &AlgebraElement, count: usize) -> Result<Vec<Rational>> {
    p.q().require_numeric()?;
    if p.is_constant() {
        return Err(Error::ConstantElement);
    }
    let profile = band_profile(p)?;
    let mut out: Vec<Rational> = Vec::new();
    let certified = |lambda: &Rational| -> Result<bool> {
        let shifted = p.checked_sub(&AlgebraElement::constant(p.q(), Scalar::Rat(lambda.clone())))?;
        Ok(shifted.is_zero() || kernel_dimension(&shifted)?.dim >= 1)
    };
    if profile.occurring().all(|d| d == 0) {
        for k in 0.. {
            if out.len() >= count {
                break;
            }
            let v = profile.beta_at_rational(0, k);
            if !out.contains(&v) {
                debug_assert!(certified(&v)?);
                out.push(v);
            }
        }
    } else {
        for lambda in candidates() {
            if out.len() >= count {
                break;
            }
            if certified(&lambda)? {
                out.push(lambda);
            }
        }
    }
    Ok(out)
}

/// `dim ker (P - lambda) <= |d_max| + |d_min| + m` for every sample.
pub fn uniform_bound_check(p: &AlgebraElement, samples: &[Rational]) -> Result<bool> {
    p.q().require_numeric()?;
    if p.is_constant() {
        return Err(Error::ConstantElement);
    }
    let profile = band_profile(p)?;
    let bound = (profile.d_max().abs() + profile.d_min().abs()) as usize + profile.order;
    for lambda in samples {
        let shifted = p.checked_sub(&AlgebraElement::constant(p.q(), Scalar::Rat(lambda.clone())))?;
        if kernel_dimension(&shifted)?.dim > bound {
            return Ok(false);
        }
    }
    Ok(true)
}
