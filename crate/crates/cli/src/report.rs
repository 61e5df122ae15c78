//! The JSON report envelope and deterministic value formatting.
//!
//! Reports are byte-for-byte reproducible: envelope fields have a fixed
//! order, nested objects sort their keys, and floats render through one
//! fixed 12-significant-digit formatter.

use serde::Serialize;
use serde_json::Value;

#[derive(Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub diagnostics: Value,
}

impl Report {
    pub fn new(command: &str, inputs: Value, result: Value, diagnostics: Value) -> Self {
        Report {
            command: command.to_string(),
            inputs,
            result,
            diagnostics,
        }
    }

    pub fn print(&self) {
        println!(
            "{}",
            serde_json::to_string_pretty(self).expect("report serializes")
        );
    }
}

/// Renders a float with 12 significant digits, trailing zeros trimmed.
/// Magnitudes outside a readable range switch to scientific notation.
pub fn fmt_f64(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let magnitude = x.abs().log10().floor() as i32;
    if (-5..12).contains(&magnitude) {
        let decimals = (11 - magnitude).max(0) as usize;
        let s = format!("{x:.decimals$}");
        trim_zeros(&s).to_string()
    } else {
        let s = format!("{x:.11e}");
        let (mantissa, exp) = s.split_once('e').expect("scientific form has an exponent");
        format!("{}e{}", trim_zeros(mantissa), exp)
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// A float as a JSON string in the fixed format.
pub fn float_value(x: f64) -> Value {
    Value::String(fmt_f64(x))
}
