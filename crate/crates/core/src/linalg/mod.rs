//! Exact dense matrix algebra over rational and complex-rational entries.

pub mod field;
pub mod io;
pub mod matrix;
pub mod solve;

pub use field::FieldElement;
pub use io::{matrix_from_json, matrix_to_json, MatrixData};
pub use matrix::Matrix;
pub use solve::{
    classify, image_basis, inverse, kernel_basis, rank, row_reduce, verify_eigenpair, Echelon,
    MatrixClass,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("entry list of length {len} does not fill a {rows}x{cols} matrix")]
    BadShape {
        rows: usize,
        cols: usize,
        len: usize,
    },
    #[error("rows have unequal lengths")]
    RaggedRows,
    #[error("dimension mismatch: {left:?} vs {right:?}")]
    DimensionMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("matrix is singular")]
    Singular,
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("expected a column vector, got {rows}x{cols}")]
    NotAColumn { rows: usize, cols: usize },
    #[error("eigenpair check requires a nonzero vector")]
    ZeroVector,
    #[error("cannot parse matrix: {0}")]
    Parse(String),
}
