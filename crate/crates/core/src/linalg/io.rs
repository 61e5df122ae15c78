//! The JSON wire form for matrices: an array of rows whose entries are
//! rational strings like `"5/6"` (or bare integers `"7"`), or objects
//! `{"re": "p/q", "im": "p/q"}` for complex entries.

use serde_json::Value;

use super::matrix::Matrix;
use super::LinalgError;
use crate::numbers::{ComplexRational, Rational};

/// A parsed matrix, kept rational when every entry is real.
#[derive(Debug, Clone, PartialEq)]
pub enum MatrixData {
    Rational(Matrix<Rational>),
    Complex(Matrix<ComplexRational>),
}

impl MatrixData {
    pub fn rows(&self) -> usize {
        match self {
            MatrixData::Rational(m) => m.rows(),
            MatrixData::Complex(m) => m.rows(),
        }
    }

    pub fn cols(&self) -> usize {
        match self {
            MatrixData::Rational(m) => m.cols(),
            MatrixData::Complex(m) => m.cols(),
        }
    }

    /// Widens a rational matrix into the complex field.
    pub fn into_complex(self) -> Matrix<ComplexRational> {
        match self {
            MatrixData::Complex(m) => m,
            MatrixData::Rational(m) => {
                let entries = m
                    .entries()
                    .iter()
                    .cloned()
                    .map(ComplexRational::from_rational)
                    .collect();
                Matrix::new(m.rows(), m.cols(), entries).expect("shape preserved")
            }
        }
    }
}

fn parse_rational_value(v: &Value) -> Result<Rational, LinalgError> {
    match v {
        Value::String(s) => s
            .parse()
            .map_err(|e| LinalgError::Parse(format!("bad rational {s:?}: {e}"))),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Rational::from_int(i))
            } else {
                Err(LinalgError::Parse(format!(
                    "non-integer numeric entry {n}; use a \"p/q\" string"
                )))
            }
        }
        other => Err(LinalgError::Parse(format!("unexpected entry {other}"))),
    }
}

fn parse_entry(v: &Value) -> Result<ComplexRational, LinalgError> {
    if let Value::Object(map) = v {
        let re = map
            .get("re")
            .map(parse_rational_value)
            .transpose()?
            .unwrap_or_else(Rational::zero);
        let im = map
            .get("im")
            .map(parse_rational_value)
            .transpose()?
            .unwrap_or_else(Rational::zero);
        return Ok(ComplexRational::new(re, im));
    }
    Ok(ComplexRational::from_rational(parse_rational_value(v)?))
}

/// Parses the array-of-rows form, choosing the rational field when no entry
/// has an imaginary part.
pub fn matrix_from_json(v: &Value) -> Result<MatrixData, LinalgError> {
    let Value::Array(rows) = v else {
        return Err(LinalgError::Parse("expected an array of rows".into()));
    };
    let mut parsed: Vec<Vec<ComplexRational>> = Vec::with_capacity(rows.len());
    for row in rows {
        let Value::Array(cells) = row else {
            return Err(LinalgError::Parse("expected each row to be an array".into()));
        };
        parsed.push(cells.iter().map(parse_entry).collect::<Result<_, _>>()?);
    }
    let all_real = parsed
        .iter()
        .flatten()
        .all(|z| crate::numbers::Rational::is_zero(&z.im));
    if all_real {
        let rows: Vec<Vec<Rational>> = parsed
            .into_iter()
            .map(|r| r.into_iter().map(|z| z.re).collect())
            .collect();
        Ok(MatrixData::Rational(Matrix::from_rows(rows)?))
    } else {
        Ok(MatrixData::Complex(Matrix::from_rows(parsed)?))
    }
}

pub fn matrix_to_json(m: &MatrixData) -> Value {
    match m {
        MatrixData::Rational(m) => Value::Array(
            (0..m.rows())
                .map(|i| {
                    Value::Array(
                        (0..m.cols())
                            .map(|j| Value::String(m.at(i, j).to_string()))
                            .collect(),
                    )
                })
                .collect(),
        ),
        MatrixData::Complex(m) => Value::Array(
            (0..m.rows())
                .map(|i| {
                    Value::Array(
                        (0..m.cols())
                            .map(|j| {
                                let z = m.at(i, j);
                                serde_json::json!({
                                    "re": z.re.to_string(),
                                    "im": z.im.to_string(),
                                })
                            })
                            .collect(),
                    )
                })
                .collect(),
        ),
    }
}
