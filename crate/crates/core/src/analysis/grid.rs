//! Uniform axis-aligned grids and functions sampled on them.

use serde::{Deserialize, Serialize};

use super::AnalysisError;

/// A uniform grid over a box: `point(i) = origin + i * spacing` per axis.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    pub origin: Vec<f64>,
    pub spacing: f64,
    pub shape: Vec<usize>,
}

impl Grid {
    pub fn new(origin: Vec<f64>, spacing: f64, shape: Vec<usize>) -> Result<Self, AnalysisError> {
        if origin.len() != shape.len() || shape.is_empty() {
            return Err(AnalysisError::BadGrid(
                "origin and shape must agree on a positive dimension".into(),
            ));
        }
        let spacing_valid = spacing.is_finite() && spacing > 0.0;
        if !spacing_valid {
            return Err(AnalysisError::BadGrid("spacing must be positive".into()));
        }
        if shape.iter().any(|&n| n < 2) {
            return Err(AnalysisError::BadGrid("every extent must be >= 2".into()));
        }
        Ok(Grid {
            origin,
            spacing,
            shape,
        })
    }

    /// 1-D grid over `[a, b]` with `points` samples including both ends.
    pub fn line(a: f64, b: f64, points: usize) -> Result<Self, AnalysisError> {
        let proper = b.is_finite() && a.is_finite() && a < b;
        if points < 2 || !proper {
            return Err(AnalysisError::BadGrid(format!(
                "cannot lay {points} points over [{a}, {b}]"
            )));
        }
        Grid::new(vec![a], (b - a) / (points - 1) as f64, vec![points])
    }

    pub fn dim(&self) -> usize {
        self.shape.len()
    }

    pub fn len(&self) -> usize {
        self.shape.iter().product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Physical coordinates of the grid point with the given multi-index.
    pub fn point(&self, index: &[usize]) -> Vec<f64> {
        index
            .iter()
            .zip(&self.origin)
            .map(|(&i, &o)| o + i as f64 * self.spacing)
            .collect()
    }

    /// Row-major flattening of a multi-index.
    pub fn flat(&self, index: &[usize]) -> usize {
        let mut acc = 0usize;
        for (i, (&idx, &extent)) in index.iter().zip(&self.shape).enumerate() {
            debug_assert!(idx < extent, "index {idx} out of extent {extent} at axis {i}");
            let _ = extent;
            acc = acc * self.shape[i] + idx;
        }
        acc
    }

    /// Inverse of [`Grid::flat`].
    pub fn unflat(&self, mut flat: usize) -> Vec<usize> {
        let mut index = vec![0usize; self.dim()];
        for axis in (0..self.dim()).rev() {
            index[axis] = flat % self.shape[axis];
            flat /= self.shape[axis];
        }
        index
    }

    /// Iterates all multi-indices in row-major order.
    pub fn indices(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0..self.len()).map(|f| self.unflat(f))
    }
}

/// Values of a function on every point of a grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampledFunction {
    pub grid: Grid,
    pub values: Vec<f64>,
}

impl SampledFunction {
    pub fn new(grid: Grid, values: Vec<f64>) -> Result<Self, AnalysisError> {
        if values.len() != grid.len() {
            return Err(AnalysisError::BadGrid(format!(
                "value count {} does not fill the grid of {} points",
                values.len(),
                grid.len()
            )));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(AnalysisError::BadGrid("values must be finite".into()));
        }
        Ok(SampledFunction { grid, values })
    }

    /// Samples `f` on every grid point.
    pub fn sample(grid: Grid, f: impl Fn(&[f64]) -> f64) -> Result<Self, AnalysisError> {
        let values = grid.indices().map(|idx| f(&grid.point(&idx))).collect();
        SampledFunction::new(grid, values)
    }

    pub fn at(&self, index: &[usize]) -> f64 {
        self.values[self.grid.flat(index)]
    }

    pub fn dim(&self) -> usize {
        self.grid.dim()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Wire form mirror of [`SampledFunction`] with an explicit `dim` field.
#[derive(Serialize, Deserialize)]
struct SampledFunctionWire {
    dim: usize,
    origin: Vec<f64>,
    spacing: f64,
    shape: Vec<usize>,
    values: Vec<f64>,
}

pub fn sampled_from_json(text: &str) -> Result<SampledFunction, AnalysisError> {
    let wire: SampledFunctionWire =
        serde_json::from_str(text).map_err(|e| AnalysisError::Parse(e.to_string()))?;
    if wire.dim != wire.shape.len() {
        return Err(AnalysisError::Parse(format!(
            "dim {} does not match shape of rank {}",
            wire.dim,
            wire.shape.len()
        )));
    }
    let grid = Grid::new(wire.origin, wire.spacing, wire.shape)?;
    SampledFunction::new(grid, wire.values)
}

pub fn sampled_to_json(f: &SampledFunction) -> String {
    let wire = SampledFunctionWire {
        dim: f.grid.dim(),
        origin: f.grid.origin.clone(),
        spacing: f.grid.spacing,
        shape: f.grid.shape.clone(),
        values: f.values.clone(),
    };
    serde_json::to_string(&wire).expect("wire struct serializes")
}

/// Parses CSV rows of `n` coordinate columns plus a value column. The rows
/// must fill a complete uniform grid; order does not matter.
pub fn sampled_from_csv(text: &str) -> Result<SampledFunction, AnalysisError> {
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let fields: Result<Vec<f64>, _> = trimmed.split(',').map(|f| f.trim().parse()).collect();
        match fields {
            Ok(f) if f.len() >= 2 => rows.push(f),
            Ok(_) => {
                return Err(AnalysisError::Parse(format!(
                    "line {}: need at least one coordinate and a value",
                    lineno + 1
                )))
            }
            Err(_) if lineno == 0 => continue, // tolerate a header row
            Err(e) => {
                return Err(AnalysisError::Parse(format!("line {}: {e}", lineno + 1)))
            }
        }
    }
    if rows.is_empty() {
        return Err(AnalysisError::Parse("no data rows".into()));
    }
    let dim = rows[0].len() - 1;
    if rows.iter().any(|r| r.len() != dim + 1) {
        return Err(AnalysisError::Parse("rows have unequal column counts".into()));
    }

    // Distinct sorted coordinates per axis define the grid.
    let mut axes: Vec<Vec<f64>> = Vec::with_capacity(dim);
    for a in 0..dim {
        let mut coords: Vec<f64> = rows.iter().map(|r| r[a]).collect();
        coords.sort_by(f64::total_cmp);
        coords.dedup();
        if coords.len() < 2 {
            return Err(AnalysisError::Parse(format!(
                "axis {a} has fewer than two distinct coordinates"
            )));
        }
        axes.push(coords);
    }
    let spacing = axes[0][1] - axes[0][0];
    let tol = spacing * 1e-9;
    for (a, coords) in axes.iter().enumerate() {
        for pair in coords.windows(2) {
            if ((pair[1] - pair[0]) - spacing).abs() > tol {
                return Err(AnalysisError::Parse(format!(
                    "axis {a} is not uniformly spaced by {spacing}"
                )));
            }
        }
    }
    let shape: Vec<usize> = axes.iter().map(Vec::len).collect();
    let origin: Vec<f64> = axes.iter().map(|c| c[0]).collect();
    let grid = Grid::new(origin, spacing, shape)?;
    if rows.len() != grid.len() {
        return Err(AnalysisError::Parse(format!(
            "{} rows do not fill a complete grid of {} points",
            rows.len(),
            grid.len()
        )));
    }

    let locate = |coords: &[f64], x: f64| -> Result<usize, AnalysisError> {
        let i = ((x - coords[0]) / spacing).round() as usize;
        if i < coords.len() && (coords[i] - x).abs() <= tol {
            Ok(i)
        } else {
            Err(AnalysisError::Parse(format!("coordinate {x} is off-grid")))
        }
    };
    let mut values = vec![f64::NAN; grid.len()];
    for r in &rows {
        let mut index = Vec::with_capacity(dim);
        for a in 0..dim {
            index.push(locate(&axes[a], r[a])?);
        }
        let flat = grid.flat(&index);
        if !values[flat].is_nan() {
            return Err(AnalysisError::Parse(format!(
                "duplicate sample at {:?}",
                &r[..dim]
            )));
        }
        values[flat] = r[dim];
    }
    SampledFunction::new(grid, values)
}
