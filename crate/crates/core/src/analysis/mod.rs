//! Sampled-function analysis: finite differences and moduli of continuity,
//! discrete norms, smoothness norm estimators, polynomial expansions and
//! convex gauges. This module works in binary64; the exact layers live in
//! `numbers`, `linalg` and `measure`.
//!
//! Results are reproducible bit for bit: suprema and sums reduce over fixed
//! enumeration orders.

pub mod difference;
pub mod grid;
pub mod minkowski;
pub mod smoothness;
pub mod taylor;

pub use difference::{
    finite_difference, grid_lp_norm, modulus_of_continuity, seq_lp_norm,
    uniform_continuity_profile, Lp,
};
pub use grid::{
    sampled_from_csv, sampled_from_json, sampled_to_json, Grid, SampledFunction,
};
pub use minkowski::{minkowski_functional, Polytope};
pub use smoothness::{
    besov_level_values, besov_norm_mc, cm_norm, holder_norm, multi_indices_up_to,
    partial_estimate, zygmund_difference_part, zygmund_norm,
};
pub use taylor::{taylor_eval_1d, taylor_eval_nd, MultiIndex, PartialTable, TaylorValue};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum AnalysisError {
    #[error("bad grid: {0}")]
    BadGrid(String),
    #[error("displacement step {step} leaves no valid points in extent {extent}")]
    ShiftOutOfRange { step: String, extent: usize },
    #[error("grid too coarse: stencil needs {needed} points, extent is {extent}")]
    GridTooCoarse { needed: usize, extent: usize },
    #[error("missing partial derivative for path {path}")]
    MissingPartial { path: String },
    #[error("{0}")]
    Parameter(String),
    #[error("cannot parse sampled function: {0}")]
    Parse(String),
}
