//! Gauss-Jordan elimination and what it yields: inverses, reduced row
//! echelon form, kernel and image bases, and the matrix-classification
//! predicates.
//!
//! Arithmetic is exact, so pivoting just takes the first nonzero entry in
//! column order.

use super::field::FieldElement;
use super::matrix::Matrix;
use super::LinalgError;

/// Reduced row echelon form together with the pivot columns.
pub struct Echelon<F> {
    pub rref: Matrix<F>,
    pub pivot_cols: Vec<usize>,
}

pub fn row_reduce<F: FieldElement>(a: &Matrix<F>) -> Echelon<F> {
    let mut m = a.clone();
    let (rows, cols) = (m.rows(), m.cols());
    let mut pivot_cols = Vec::new();
    let mut pivot_row = 0usize;

    for col in 0..cols {
        if pivot_row == rows {
            break;
        }
        let Some(src) = (pivot_row..rows).find(|&r| !m.at(r, col).is_zero()) else {
            continue;
        };
        if src != pivot_row {
            for j in 0..cols {
                let tmp = m.at(src, j).clone();
                *m.at_mut(src, j) = m.at(pivot_row, j).clone();
                *m.at_mut(pivot_row, j) = tmp;
            }
        }
        let inv = m
            .at(pivot_row, col)
            .inv()
            .expect("pivot entry is nonzero");
        for j in 0..cols {
            let v = m.at(pivot_row, j).mul(&inv);
            *m.at_mut(pivot_row, j) = v;
        }
        for r in 0..rows {
            if r == pivot_row || m.at(r, col).is_zero() {
                continue;
            }
            let factor = m.at(r, col).clone();
            for j in 0..cols {
                let v = m.at(r, j).sub(&factor.mul(m.at(pivot_row, j)));
                *m.at_mut(r, j) = v;
            }
        }
        pivot_cols.push(col);
        pivot_row += 1;
    }

    Echelon {
        rref: m,
        pivot_cols,
    }
}

pub fn rank<F: FieldElement>(a: &Matrix<F>) -> usize {
    row_reduce(a).pivot_cols.len()
}

/// Exact inverse via Gauss-Jordan on `[A | I]`. The product `A * A^{-1}` is
/// re-verified before returning.
pub fn inverse<F: FieldElement>(a: &Matrix<F>) -> Result<Matrix<F>, LinalgError> {
    if !a.is_square() {
        return Err(LinalgError::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    let mut aug = Matrix::zeros(n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            *aug.at_mut(i, j) = a.at(i, j).clone();
        }
        *aug.at_mut(i, n + i) = F::one();
    }
    let reduced = row_reduce(&aug);
    // Invertible iff the left block reduced to the identity.
    let left_is_identity = reduced.pivot_cols.len() >= n && reduced.pivot_cols[..n] == (0..n).collect::<Vec<_>>()[..];
    if !left_is_identity {
        return Err(LinalgError::Singular);
    }
    let mut inv = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            *inv.at_mut(i, j) = reduced.rref.at(i, n + j).clone();
        }
    }
    debug_assert_eq!(
        a.mul(&inv).expect("square shapes agree"),
        Matrix::identity(n),
        "inverse verification failed"
    );
    Ok(inv)
}

/// Exact basis of the null space, one vector per free column of the RREF.
/// Returns an empty list for a trivial kernel.
pub fn kernel_basis<F: FieldElement>(a: &Matrix<F>) -> Vec<Matrix<F>> {
    let reduced = row_reduce(a);
    let cols = a.cols();
    let pivots = &reduced.pivot_cols;
    let free_cols: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();

    free_cols
        .iter()
        .map(|&free| {
            let mut v = vec![F::zero(); cols];
            v[free] = F::one();
            for (row, &pivot_col) in pivots.iter().enumerate() {
                // x_pivot = -R[row][free] when x_free = 1.
                v[pivot_col] = reduced.rref.at(row, free).neg();
            }
            Matrix::column(v).expect("cols >= 1")
        })
        .collect()
}

/// Basis of the column space: the pivot columns of `a` itself.
pub fn image_basis<F: FieldElement>(a: &Matrix<F>) -> Vec<Matrix<F>> {
    let reduced = row_reduce(a);
    reduced
        .pivot_cols
        .iter()
        .map(|&j| Matrix::column(a.col_vec(j)).expect("rows >= 1"))
        .collect()
}

/// Exact check of the eigenpair relation `A v = lambda v`; `v` must be a
/// nonzero column.
pub fn verify_eigenpair<F: FieldElement>(
    a: &Matrix<F>,
    v: &Matrix<F>,
    lambda: &F,
) -> Result<bool, LinalgError> {
    if v.cols() != 1 {
        return Err(LinalgError::NotAColumn {
            rows: v.rows(),
            cols: v.cols(),
        });
    }
    if v.entries().iter().all(FieldElement::is_zero) {
        return Err(LinalgError::ZeroVector);
    }
    let lhs = a.mul(v)?;
    let rhs = v.scale(lambda);
    Ok(lhs == rhs)
}

/// Structure flags decided by exact predicate evaluation. A singular matrix
/// is neither orthogonal nor unitary.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MatrixClass {
    pub symmetric: bool,
    pub hermitian: bool,
    pub orthogonal: bool,
    pub unitary: bool,
}

pub fn classify<F: FieldElement>(a: &Matrix<F>) -> Result<MatrixClass, LinalgError> {
    if !a.is_square() {
        return Err(LinalgError::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let t = a.transpose();
    let d = a.dagger();
    let symmetric = *a == t;
    let hermitian = *a == d;
    let (orthogonal, unitary) = match inverse(a) {
        Ok(inv) => (inv == t, inv == d),
        Err(LinalgError::Singular) => (false, false),
        Err(e) => return Err(e),
    };
    Ok(MatrixClass {
        symmetric,
        hermitian,
        orthogonal,
        unitary,
    })
}
