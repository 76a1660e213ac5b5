//! JSON encoding of exact series and Laurent polynomials.
//!
//! ```text
//! QSeries:     {"truncation": N, "terms": [{"grade": "3/2", "coeff": ...}, ...]}
//! Rational:    "p/q" (or "p" for integers)
//! LaurentPoly: {"<exponent>": "p/q", ...}
//! ```
//!
//! `terms` lists every stored grade `0, 1/2, …, N` in order. Object keys are
//! kept in `serde_json`'s sorted map, so output is deterministic.

use serde_json::{json, Map, Value};

use super::grade::HalfInt;
use super::laurent::LaurentPoly;
use super::qseries::QSeries;
use super::traits::{parse_rational, render_rational, Ring};
use crate::error::{Error, Result};
use crate::Rational;

/// Coefficient types with a canonical JSON form.
pub trait JsonCoeff: Ring {
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self>;
}

impl JsonCoeff for Rational {
    fn to_json(&self) -> Value {
        Value::String(render_rational(self))
    }

    fn from_json(v: &Value) -> Result<Self> {
        v.as_str()
            .and_then(parse_rational)
            .ok_or_else(|| Error::Json(format!("expected rational string, got {v}")))
    }
}

impl JsonCoeff for LaurentPoly<Rational> {
    fn to_json(&self) -> Value {
        let mut map = Map::new();
        for (e, c) in self.terms() {
            map.insert(e.to_string(), c.to_json());
        }
        Value::Object(map)
    }

    fn from_json(v: &Value) -> Result<Self> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Json(format!("expected Laurent object, got {v}")))?;
        let terms = obj
            .iter()
            .map(|(k, c)| {
                let e: i64 = k
                    .parse()
                    .map_err(|_| Error::Json(format!("bad exponent key {k:?}")))?;
                Ok((e, Rational::from_json(c)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(LaurentPoly::from_terms(terms))
    }
}

pub fn qseries_to_json<R: JsonCoeff>(s: &QSeries<R>) -> Value {
    let terms: Vec<Value> = s
        .grades()
        .map(|(g, c)| json!({"grade": g.to_string(), "coeff": c.to_json()}))
        .collect();
    json!({"truncation": s.truncation(), "terms": terms})
}

pub fn qseries_from_json<R: JsonCoeff>(v: &Value) -> Result<QSeries<R>> {
    let truncation = v
        .get("truncation")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Json("missing integer \"truncation\"".into()))? as u32;
    let terms = v
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Json("missing \"terms\" array".into()))?;
    let mut s = QSeries::zero(truncation);
    for t in terms {
        let grade: HalfInt = t
            .get("grade")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Json("term without \"grade\"".into()))?
            .parse()
            .map_err(|e| Error::Json(format!("{e}")))?;
        if grade.halves() < 0 || grade.halves() as usize > s.max_half() {
            return Err(Error::GradeOutOfRange { grade, truncation });
        }
        let coeff = R::from_json(
            t.get("coeff")
                .ok_or_else(|| Error::Json("term without \"coeff\"".into()))?,
        )?;
        s.set_coeff(grade, coeff);
    }
    Ok(s)
}
