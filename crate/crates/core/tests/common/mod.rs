#![allow(dead_code)]

use proptest::prelude::*;
use qheis_core::scalars::{int, rat};
use qheis_core::{AlgebraElement, QParam, Rational, Scalar, UniPoly};

pub fn q_num(n: i64, d: i64) -> QParam {
    QParam::numeric(rat(n, d)).unwrap()
}

/// The parameter values exercised throughout: rational ones and symbolic.
pub fn q_values() -> Vec<QParam> {
    vec![q_num(1, 1), q_num(2, 1), q_num(1, 2), q_num(3, 2), q_num(5, 1), QParam::Symbolic]
}

pub fn numeric_q_values() -> Vec<QParam> {
    q_values().into_iter().filter(|q| !q.is_symbolic()).collect()
}

pub fn any_q() -> impl Strategy<Value = QParam> {
    prop::sample::select(q_values())
}

pub fn any_numeric_q() -> impl Strategy<Value = QParam> {
    prop::sample::select(numeric_q_values())
}

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-3i64..=3, 1i64..=3).prop_map(|(n, d)| rat(n, d))
}

pub fn int_poly(max_deg: usize) -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(-3i64..=3, 0..=max_deg + 1)
        .prop_map(|cs| UniPoly::from_coeffs(cs.into_iter().map(Scalar::from).collect()))
}

/// `sum_j p_j(B) A^j` with `j <= order`, `deg p_j <= deg`, integer
/// coefficients in `[-3, 3]`.
pub fn element(q: QParam, order: usize, deg: usize) -> impl Strategy<Value = AlgebraElement> {
    prop::collection::vec(int_poly(deg), order + 1)
        .prop_map(move |ps| AlgebraElement::from_terms(&q, ps.into_iter().enumerate()))
}

pub fn nonzero_element(q: QParam, order: usize, deg: usize) -> impl Strategy<Value = AlgebraElement> {
    element(q, order, deg).prop_filter("nonzero", |e| !e.is_zero())
}

pub fn nonconstant_element(q: QParam, order: usize, deg: usize) -> impl Strategy<Value = AlgebraElement> {
    element(q, order, deg).prop_filter("nonconstant", |e| !e.is_constant())
}

/// A univariate polynomial of degree 1 or 2 with integer coefficients.
pub fn curve_poly() -> impl Strategy<Value = UniPoly> {
    (prop::collection::vec(-3i64..=3, 1..=2), prop::sample::select(vec![-2i64, -1, 1, 2])).prop_map(|(mut cs, lead)| {
        cs.push(lead);
        UniPoly::from_coeffs(cs.into_iter().map(Scalar::from).collect())
    })
}

pub fn x_minus(a: i64) -> UniPoly {
    UniPoly::from_coeffs(vec![Scalar::from(-a), Scalar::one()])
}

pub fn scalar_int(n: i64) -> Scalar {
    Scalar::Rat(int(n))
}
