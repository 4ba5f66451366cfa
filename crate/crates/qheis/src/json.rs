//! JSON encodings.
//!
//! Rationals are strings `"n"` or `"n/d"`. A Laurent coefficient in
//! symbolic `q` is an object from exponent to rational, `{"0": "1", "1": "1"}`.
//! An element is `{"q": .., "terms": [{"j": 1, "p": [c0, c1, ..]}]}` with
//! `p` the coefficients of `p_j(B)` in increasing degree.

use std::collections::BTreeMap;

use qheis_core::eliminant::{CurveSet, VerificationReport};
use qheis_core::spectral::KernelDimension;
use qheis_core::{AlgebraElement, BiPoly, LaurentWindow, QParam, Rational, Scalar, TriPoly, UniPoly};
use serde_json::{json, Map, Value};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum JsonError {
    #[error("malformed {what}: {found}")]
    Malformed { what: &'static str, found: String },
    #[error(transparent)]
    Algebra(#[from] qheis_core::Error),
}

fn malformed(what: &'static str, found: &Value) -> JsonError {
    JsonError::Malformed { what, found: found.to_string() }
}

pub fn rational_to_json(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn rational_from_json(v: &Value) -> Result<Rational, JsonError> {
    let s = v.as_str().ok_or_else(|| malformed("rational", v))?;
    let r: Rational = s.parse().map_err(|_| malformed("rational", v))?;
    Ok(r)
}

pub fn scalar_to_json(s: &Scalar) -> Value {
    match s {
        Scalar::Rat(r) => rational_to_json(r),
        Scalar::Laurent(_) => {
            Value::Object(s.terms().iter().map(|(e, c)| (e.to_string(), rational_to_json(c))).collect())
        }
    }
}

pub fn scalar_from_json(v: &Value) -> Result<Scalar, JsonError> {
    match v {
        Value::String(_) => Ok(Scalar::Rat(rational_from_json(v)?)),
        Value::Object(map) => {
            let mut terms = BTreeMap::new();
            for (k, c) in map {
                let e: i64 = k.parse().map_err(|_| malformed("q exponent", v))?;
                terms.insert(e, rational_from_json(c)?);
            }
            Ok(Scalar::from_laurent(terms))
        }
        _ => Err(malformed("scalar", v)),
    }
}

pub fn q_to_json(q: &QParam) -> Value {
    match q {
        QParam::Symbolic => Value::String("symbolic".into()),
        QParam::Numeric(r) => rational_to_json(r),
    }
}

pub fn q_from_json(v: &Value) -> Result<QParam, JsonError> {
    if v.as_str() == Some("symbolic") {
        return Ok(QParam::Symbolic);
    }
    Ok(QParam::numeric(rational_from_json(v)?)?)
}

pub fn unipoly_to_json(p: &UniPoly) -> Value {
    Value::Array(p.coeffs().iter().map(scalar_to_json).collect())
}

pub fn unipoly_from_json(v: &Value) -> Result<UniPoly, JsonError> {
    let items = v.as_array().ok_or_else(|| malformed("coefficient list", v))?;
    Ok(UniPoly::from_coeffs(items.iter().map(scalar_from_json).collect::<Result<_, _>>()?))
}

pub fn element_to_json(e: &AlgebraElement) -> Value {
    let terms: Vec<Value> = e.terms().map(|(j, p)| json!({"j": j, "p": unipoly_to_json(p)})).collect();
    json!({"q": q_to_json(e.q()), "terms": terms})
}

pub fn element_from_json(v: &Value) -> Result<AlgebraElement, JsonError> {
    let q = q_from_json(v.get("q").ok_or_else(|| malformed("element", v))?)?;
    let terms = v.get("terms").and_then(Value::as_array).ok_or_else(|| malformed("element", v))?;
    let mut parsed = Vec::with_capacity(terms.len());
    for t in terms {
        let j = t.get("j").and_then(Value::as_u64).ok_or_else(|| malformed("term", t))?;
        let p = unipoly_from_json(t.get("p").ok_or_else(|| malformed("term", t))?)?;
        parsed.push((j as usize, p));
    }
    Ok(AlgebraElement::from_terms(&q, parsed))
}

pub fn tripoly_to_json(p: &TriPoly) -> Value {
    let terms: Vec<Value> =
        p.terms().map(|(e, c)| json!({"x": e[0], "l": e[1], "m": e[2], "c": scalar_to_json(c)})).collect();
    json!({"terms": terms})
}

fn exponent(t: &Value, key: &str) -> Result<u32, JsonError> {
    t.get(key).and_then(Value::as_u64).map(|e| e as u32).ok_or_else(|| malformed("monomial", t))
}

pub fn tripoly_from_json(v: &Value) -> Result<TriPoly, JsonError> {
    let terms = v.get("terms").and_then(Value::as_array).ok_or_else(|| malformed("polynomial", v))?;
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        let c = scalar_from_json(t.get("c").ok_or_else(|| malformed("monomial", t))?)?;
        out.push(([exponent(t, "x")?, exponent(t, "l")?, exponent(t, "m")?], c));
    }
    Ok(TriPoly::from_terms(out))
}

pub fn bipoly_to_json(p: &BiPoly) -> Value {
    let terms: Vec<Value> = p.terms().map(|(e, c)| json!({"l": e[0], "m": e[1], "c": scalar_to_json(c)})).collect();
    json!({"terms": terms})
}

pub fn bipoly_from_json(v: &Value) -> Result<BiPoly, JsonError> {
    let terms = v.get("terms").and_then(Value::as_array).ok_or_else(|| malformed("polynomial", v))?;
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        let c = scalar_from_json(t.get("c").ok_or_else(|| malformed("monomial", t))?)?;
        out.push(([exponent(t, "l")?, exponent(t, "m")?], c));
    }
    Ok(BiPoly::from_terms(out))
}

/// Nonzero curves only, each tagged with its index `i`.
pub fn curves_to_json(c: &CurveSet) -> Value {
    let delta: Vec<Value> =
        c.nonzero().map(|(i, d)| json!({"i": i, "curve": bipoly_to_json(d), "text": d.to_string()})).collect();
    json!({
        "m": c.m,
        "n": c.n,
        "s": c.s,
        "t": c.t,
        "eliminant": tripoly_to_json(&c.eliminant),
        "delta": delta,
    })
}

pub fn report_to_json(r: &VerificationReport) -> Value {
    let residuals: Vec<Value> = r
        .residuals
        .iter()
        .map(|res| {
            json!({
                "i": res.index,
                "zero": res.residual.as_ref().map(AlgebraElement::is_zero),
            })
        })
        .collect();
    let mut map = Map::new();
    map.insert("pass".into(), r.pass().into());
    map.insert("commuting".into(), r.commuting.into());
    map.insert("lambda_leading".into(), r.lambda_leading.into());
    map.insert("mu_leading".into(), r.mu_leading.into());
    map.insert("x_degree_bounded".into(), r.x_degree_bounded.into());
    map.insert("curve_degree_bounded".into(), r.curve_degree_bounded.into());
    map.insert("some_curve_nonzero".into(), r.some_curve_nonzero.into());
    map.insert(
        "q_degree".into(),
        r.q_degree.as_ref().map_or(
            Value::Null,
            |c| json!({"observed": c.observed.map(|(a, b)| [a, b]), "allowed": [c.allowed.0, c.allowed.1], "ok": c.ok}),
        ),
    );
    map.insert("integral".into(), r.integral.map_or(Value::Null, Value::Bool));
    map.insert("residuals".into(), residuals.into());
    map.insert("curves".into(), curves_to_json(&r.curves));
    Value::Object(map)
}

pub fn kernel_dim_to_json(k: &KernelDimension) -> Value {
    json!({
        "dim": k.dim,
        "d_max": k.d_max,
        "d_min": k.d_min,
        "n_max": k.n_max,
        "n_min": k.n_min,
        "lower": k.lower,
        "upper": k.upper,
    })
}

pub fn window_to_json(w: &LaurentWindow) -> Value {
    let coeffs: Vec<Value> = w.coeffs().iter().map(rational_to_json).collect();
    json!({"lo": w.lo(), "coeffs": coeffs, "trusted": [w.trusted().0, w.trusted().1]})
}

pub fn window_from_json(v: &Value) -> Result<LaurentWindow, JsonError> {
    let lo = v.get("lo").and_then(Value::as_i64).ok_or_else(|| malformed("window", v))?;
    let coeffs = v.get("coeffs").and_then(Value::as_array).ok_or_else(|| malformed("window", v))?;
    let trusted = v.get("trusted").and_then(Value::as_array).ok_or_else(|| malformed("window", v))?;
    let bound = |i: usize| trusted.get(i).and_then(Value::as_i64).ok_or_else(|| malformed("window", v));
    let coeffs = coeffs.iter().map(rational_from_json).collect::<Result<Vec<_>, _>>()?;
    Ok(LaurentWindow::new(lo, coeffs, (bound(0)?, bound(1)?))?)
}
