//! Polynomial expansion of a function around a point from supplied
//! derivative data, with the Lagrange-form remainder bound in one
//! dimension.

use std::collections::HashMap;

use super::AnalysisError;

/// A multi-index: non-negative derivative counts per axis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiIndex(pub Vec<usize>);

impl MultiIndex {
    pub fn order(&self) -> usize {
        self.0.iter().sum()
    }
}

/// Value and remainder bound of a one-dimensional expansion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TaylorValue {
    pub value: f64,
    /// `M |x - x0|^(m+1) / (m+1)!` for the supplied bound `M` on the next
    /// derivative.
    pub remainder_bound: f64,
}

/// Evaluates `f(x0) + sum f^(k)(x0)/k! (x - x0)^k` from the derivative
/// list `derivs[k] = f^(k)(x0)`, `k = 0..=m`, plus the remainder bound
/// given `|f^(m+1)| <= deriv_bound` on the segment.
pub fn taylor_eval_1d(derivs: &[f64], x0: f64, x: f64, deriv_bound: f64) -> TaylorValue {
    assert!(!derivs.is_empty(), "need at least the value f(x0)");
    let dx = x - x0;
    let mut value = 0.0;
    let mut factorial = 1.0;
    let mut power = 1.0;
    for (k, &d) in derivs.iter().enumerate() {
        if k > 0 {
            factorial *= k as f64;
            power *= dx;
        }
        value += d / factorial * power;
    }
    let m = derivs.len() - 1;
    let remainder_bound = deriv_bound * dx.abs().powi(m as i32 + 1) / factorial_f(m + 1);
    TaylorValue {
        value,
        remainder_bound,
    }
}

fn factorial_f(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

/// Partial-derivative values keyed by axis paths. Keys are stored sorted,
/// so symmetric partials (`d_x d_y = d_y d_x` for smooth functions) share
/// one entry.
#[derive(Debug, Clone, Default)]
pub struct PartialTable {
    values: HashMap<Vec<usize>, f64>,
}

impl PartialTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records `d_(path) f(x0)`; the path lists axes, e.g. `[0, 1]` for
    /// `d_x d_y`.
    pub fn insert(&mut self, path: &[usize], value: f64) {
        let mut key = path.to_vec();
        key.sort_unstable();
        self.values.insert(key, value);
    }

    pub fn get(&self, path: &[usize]) -> Option<f64> {
        let mut key = path.to_vec();
        key.sort_unstable();
        self.values.get(&key).copied()
    }
}

/// Multivariate expansion through order `m` via the repeated-index sum
/// `sum over k of (1/k!) sum over (i_1..i_k) of d-path * prod (x - x0)`,
/// with the `1/k!` factor of the standard expansion.
pub fn taylor_eval_nd(
    partials: &PartialTable,
    x0: &[f64],
    x: &[f64],
    m: u32,
) -> Result<f64, AnalysisError> {
    if x0.len() != x.len() || x0.is_empty() {
        return Err(AnalysisError::Parameter(
            "expansion point and target must share a positive dimension".into(),
        ));
    }
    let n = x0.len();
    let dx: Vec<f64> = x.iter().zip(x0).map(|(a, b)| a - b).collect();

    let value_of = |path: &[usize]| -> Result<f64, AnalysisError> {
        partials.get(path).ok_or_else(|| AnalysisError::MissingPartial {
            path: format!("{path:?}"),
        })
    };

    let mut total = value_of(&[])?;
    let mut paths: Vec<Vec<usize>> = vec![vec![]];
    let mut factorial = 1.0;
    for k in 1..=m as usize {
        factorial *= k as f64;
        // Extend every path of length k-1 by one more axis index.
        let mut next = Vec::with_capacity(paths.len() * n);
        for p in &paths {
            for axis in 0..n {
                let mut q = p.clone();
                q.push(axis);
                next.push(q);
            }
        }
        paths = next;
        let mut layer = 0.0;
        for p in &paths {
            let coeff = value_of(p)?;
            let weight: f64 = p.iter().map(|&axis| dx[axis]).product();
            layer += coeff * weight;
        }
        total += layer / factorial;
    }
    Ok(total)
}
