//! A desk-scale measure layer: the ring of 1-D interval unions, length and
//! counting measures, canonical simple functions and their exact integral.

pub mod counting;
pub mod interval;
pub mod simple;

pub use counting::{counting_measure, Count};
pub use interval::{lebesgue_measure, IntervalUnion};
pub use simple::{
    integrate_simple, monotone_limit_check, simple_canonicalize, MonotoneLimitReport,
    SimpleFunction,
};

use serde_json::Value;

use crate::numbers::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MeasureError {
    #[error("chain is not increasing at position {position}")]
    NotIncreasing { position: usize },
    #[error("cannot parse interval union: {0}")]
    Parse(String),
}

/// Parses the wire form `[["0","1"],["2","5"]]` of endpoint pairs.
pub fn interval_union_from_json(v: &Value) -> Result<IntervalUnion, MeasureError> {
    let Value::Array(pairs) = v else {
        return Err(MeasureError::Parse("expected an array of [a, b] pairs".into()));
    };
    let mut raw = Vec::with_capacity(pairs.len());
    for pair in pairs {
        let Value::Array(ab) = pair else {
            return Err(MeasureError::Parse(format!("expected a pair, got {pair}")));
        };
        if ab.len() != 2 {
            return Err(MeasureError::Parse(format!("expected two endpoints, got {pair}")));
        }
        let endpoint = |v: &Value| -> Result<Rational, MeasureError> {
            match v {
                Value::String(s) => s.parse().map_err(|e| {
                    MeasureError::Parse(format!("bad endpoint {s:?}: {e}"))
                }),
                Value::Number(n) => n
                    .as_i64()
                    .map(Rational::from_int)
                    .ok_or_else(|| MeasureError::Parse(format!("bad endpoint {n}"))),
                other => Err(MeasureError::Parse(format!("bad endpoint {other}"))),
            }
        };
        raw.push((endpoint(&ab[0])?, endpoint(&ab[1])?));
    }
    Ok(IntervalUnion::from_intervals(raw))
}

pub fn interval_union_to_json(u: &IntervalUnion) -> Value {
    Value::Array(
        u.intervals()
            .iter()
            .map(|(a, b)| {
                Value::Array(vec![
                    Value::String(a.to_string()),
                    Value::String(b.to_string()),
                ])
            })
            .collect(),
    )
}

/// Parses a simple function given as `[{"value": "2", "support": [["0","1"]]}, ...]`.
pub fn simple_function_from_json(v: &Value) -> Result<SimpleFunction, MeasureError> {
    let Value::Array(terms) = v else {
        return Err(MeasureError::Parse("expected an array of terms".into()));
    };
    let mut raw = Vec::with_capacity(terms.len());
    for term in terms {
        let Value::Object(map) = term else {
            return Err(MeasureError::Parse(format!("expected a term object, got {term}")));
        };
        let value = match map.get("value") {
            Some(Value::String(s)) => s
                .parse()
                .map_err(|e| MeasureError::Parse(format!("bad value {s:?}: {e}")))?,
            Some(Value::Number(n)) => n
                .as_i64()
                .map(Rational::from_int)
                .ok_or_else(|| MeasureError::Parse(format!("bad value {n}")))?,
            other => {
                return Err(MeasureError::Parse(format!("missing term value: {other:?}")))
            }
        };
        let support = map
            .get("support")
            .ok_or_else(|| MeasureError::Parse("missing term support".into()))?;
        raw.push((value, interval_union_from_json(support)?));
    }
    Ok(simple_canonicalize(raw))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn interval_union_wire_round_trip() {
        let v = json!([["0", "1"], ["2", "5"]]);
        let u = interval_union_from_json(&v).unwrap();
        assert_eq!(lebesgue_measure(&u), Rational::from_int(4));
        assert_eq!(interval_union_to_json(&u), v);
    }

    #[test]
    fn simple_function_wire_form() {
        let v = json!([
            {"value": "2", "support": [["0", "1"]]},
            {"value": "5", "support": [["1", "3"]]}
        ]);
        let s = simple_function_from_json(&v).unwrap();
        let e = interval_union_from_json(&json!([["0", "3"]])).unwrap();
        assert_eq!(integrate_simple(&s, &e), Rational::from_int(12));
    }

    #[test]
    fn malformed_input_is_reported() {
        assert!(interval_union_from_json(&json!("nope")).is_err());
        assert!(interval_union_from_json(&json!([["1"]])).is_err());
        assert!(simple_function_from_json(&json!([{"support": []}])).is_err());
    }
}
