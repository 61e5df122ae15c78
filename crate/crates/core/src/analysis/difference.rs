//! Finite differences on the grid lattice, discrete Lp norms, and moduli of
//! continuity.
//!
//! Displacements are integer lattice vectors, so difference identities hold
//! exactly on shared points instead of through interpolation. Differences
//! shrink the domain; norms run over whatever sub-grid remains.

use super::grid::{Grid, SampledFunction};
use super::AnalysisError;

/// The exponent of a discrete Lebesgue or sequence norm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Lp {
    Finite(f64),
    Infinity,
}

impl Lp {
    pub fn new(p: f64) -> Result<Self, AnalysisError> {
        if p >= 1.0 && p.is_finite() {
            Ok(Lp::Finite(p))
        } else {
            Err(AnalysisError::Parameter(format!(
                "norm exponent must satisfy 1 <= p <= infinity, got {p}"
            )))
        }
    }
}

impl std::str::FromStr for Lp {
    type Err = AnalysisError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("inf") || t.eq_ignore_ascii_case("infinity") || t == "∞" {
            return Ok(Lp::Infinity);
        }
        let p: f64 = t
            .parse()
            .map_err(|_| AnalysisError::Parameter(format!("bad norm exponent {s:?}")))?;
        Lp::new(p)
    }
}

impl std::fmt::Display for Lp {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Lp::Finite(p) => write!(f, "{p}"),
            Lp::Infinity => write!(f, "inf"),
        }
    }
}

/// One forward difference step along the lattice vector `h` (in grid
/// steps): `(Dh f)(x) = f(x + h) - f(x)` on the shrunken grid where both
/// points stay in range.
fn difference_once(f: &SampledFunction, h: &[i64]) -> Result<SampledFunction, AnalysisError> {
    let grid = &f.grid;
    let dim = grid.dim();
    if h.len() != dim {
        return Err(AnalysisError::Parameter(format!(
            "displacement has {} components for a {dim}-dimensional grid",
            h.len()
        )));
    }
    let mut out_shape = Vec::with_capacity(dim);
    let mut base_offset = Vec::with_capacity(dim);
    for (axis, &step) in h.iter().enumerate() {
        let extent = grid.shape[axis] as i64;
        let remaining = extent - step.abs();
        if remaining < 1 {
            return Err(AnalysisError::ShiftOutOfRange {
                step: step.to_string(),
                extent: grid.shape[axis],
            });
        }
        out_shape.push(remaining as usize);
        base_offset.push(if step < 0 { -step } else { 0 });
    }
    let out_origin: Vec<f64> = grid
        .origin
        .iter()
        .zip(&base_offset)
        .map(|(&o, &off)| o + off as f64 * grid.spacing)
        .collect();
    let out_grid = Grid {
        origin: out_origin,
        spacing: grid.spacing,
        shape: out_shape,
    };

    let mut values = Vec::with_capacity(out_grid.len());
    for out_idx in out_grid.indices() {
        let base: Vec<usize> = out_idx
            .iter()
            .zip(&base_offset)
            .map(|(&i, &off)| i + off as usize)
            .collect();
        let shifted: Vec<usize> = base
            .iter()
            .zip(h)
            .map(|(&i, &step)| (i as i64 + step) as usize)
            .collect();
        values.push(f.at(&shifted) - f.at(&base));
    }
    Ok(SampledFunction {
        grid: out_grid,
        values,
    })
}

/// The iterated difference `(D^m_h f)` via the recursion
/// `D^m = D(D^(m-1))`. Errs when no valid points remain.
pub fn finite_difference(
    f: &SampledFunction,
    h: &[i64],
    order: u32,
) -> Result<SampledFunction, AnalysisError> {
    if order == 0 {
        return Err(AnalysisError::Parameter("difference order must be >= 1".into()));
    }
    let mut out = difference_once(f, h)?;
    for _ in 1..order {
        out = difference_once(&out, h)?;
    }
    Ok(out)
}

/// Riemann-sum Lp norm over the grid: `(sum |f|^p * spacing^dim)^(1/p)`;
/// the infinity norm is the maximum of `|f|`.
pub fn grid_lp_norm(f: &SampledFunction, p: Lp) -> f64 {
    match p {
        Lp::Infinity => f.values.iter().fold(0.0, |m, v| m.max(v.abs())),
        Lp::Finite(p) => {
            let cell = f.grid.spacing.powi(f.dim() as i32);
            let sum: f64 = f.values.iter().map(|v| v.abs().powf(p) * cell).sum();
            sum.powf(1.0 / p)
        }
    }
}

/// The lp norm of a finite sequence; empty sequences have norm 0.
pub fn seq_lp_norm(values: &[f64], p: Lp) -> f64 {
    match p {
        Lp::Infinity => values.iter().fold(0.0, |m, v| m.max(v.abs())),
        Lp::Finite(p) => values
            .iter()
            .map(|v| v.abs().powf(p))
            .sum::<f64>()
            .powf(1.0 / p),
    }
}

/// Enumerates nonzero lattice vectors `h` with `|h * spacing|_2 <= radius`.
fn lattice_ball(dim: usize, spacing: f64, radius: f64) -> Vec<Vec<i64>> {
    if radius < 0.0 {
        return vec![];
    }
    let per_axis = (radius / spacing).floor() as i64;
    let mut out = Vec::new();
    let mut current = vec![0i64; dim];
    fn rec(
        axis: usize,
        per_axis: i64,
        spacing: f64,
        radius: f64,
        current: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        if axis == current.len() {
            let norm_sq: f64 = current
                .iter()
                .map(|&c| (c as f64 * spacing).powi(2))
                .sum();
            if norm_sq <= radius * radius && current.iter().any(|&c| c != 0) {
                out.push(current.clone());
            }
            return;
        }
        for step in -per_axis..=per_axis {
            current[axis] = step;
            rec(axis + 1, per_axis, spacing, radius, current, out);
        }
        current[axis] = 0;
    }
    rec(0, per_axis, spacing, radius, &mut current, &mut out);
    out
}

/// The modulus of continuity `omega_(m,p)(f, t)`: the supremum of
/// `|D^m_h f|_p` over lattice displacements with Euclidean length at most
/// `t`. The zero displacement contributes 0, so `t` below one grid step
/// gives 0. Displacements that push every point off the grid are skipped.
pub fn modulus_of_continuity(f: &SampledFunction, order: u32, p: Lp, t: f64) -> f64 {
    let mut sup: f64 = 0.0;
    for h in lattice_ball(f.dim(), f.grid.spacing, t) {
        if let Ok(diff) = finite_difference(f, &h, order) {
            sup = sup.max(grid_lp_norm(&diff, p));
        }
    }
    sup
}

/// `omega_(1,inf)(f, t)` at the geometric radii `t_j = 2^-j`, largest
/// first. A profile that decays toward 0 signals uniform continuity at grid
/// scale; a floor at some positive height signals a jump.
pub fn uniform_continuity_profile(f: &SampledFunction, t_levels: u32) -> Vec<(f64, f64)> {
    (0..t_levels)
        .map(|j| {
            let t = 0.5f64.powi(j as i32);
            (t, modulus_of_continuity(f, 1, Lp::Infinity, t))
        })
        .collect()
}
