//! Dense matrices over an exact field, stored row-major.

use std::fmt;

use super::field::FieldElement;
use super::LinalgError;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    entries: Vec<F>,
}

impl<F: FieldElement> Matrix<F> {
    pub fn new(rows: usize, cols: usize, entries: Vec<F>) -> Result<Self, LinalgError> {
        if rows == 0 || cols == 0 || entries.len() != rows * cols {
            return Err(LinalgError::BadShape {
                rows,
                cols,
                len: entries.len(),
            });
        }
        Ok(Matrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = F::one();
        }
        m
    }

    /// Builds from nested rows; all rows must share one length.
    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map(Vec::len).unwrap_or(0);
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinalgError::RaggedRows);
        }
        Matrix::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn column(entries: Vec<F>) -> Result<Self, LinalgError> {
        let n = entries.len();
        Matrix::new(n, 1, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &F {
        &self.entries[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut F {
        &mut self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[F] {
        &self.entries
    }

    pub fn row_vec(&self, i: usize) -> Vec<F> {
        (0..self.cols).map(|j| self.at(i, j).clone()).collect()
    }

    pub fn col_vec(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    fn same_shape(&self, other: &Self) -> Result<(), LinalgError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinalgError::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, LinalgError> {
        self.same_shape(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.add(b))
            .collect();
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, LinalgError> {
        self.same_shape(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.sub(b))
            .collect();
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn neg(&self) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(FieldElement::neg).collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| c.mul(a)).collect(),
        }
    }

    /// `AB` with exact inner products; `self.cols` must equal `other.rows`.
    pub fn mul(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = F::zero();
                for k in 0..self.cols {
                    acc = acc.add(&self.at(i, k).mul(other.at(k, j)));
                }
                *out.at_mut(i, j) = acc;
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Self {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        out
    }

    /// Hermitian conjugate: transpose with conjugated entries.
    pub fn dagger(&self) -> Self {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.at_mut(j, i) = self.at(i, j).conj();
            }
        }
        out
    }
}

impl<F: FieldElement> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.at(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
