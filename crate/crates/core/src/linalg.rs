//! Minimal dense linear algebra: a packed lower-triangular Cholesky factor
//! with an append-row update, and a small row-major matrix.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::math;
use crate::{Error, Result};

/// Pivot-squared floor below which a factorization is treated as a loss of
/// positive-definiteness.
const PIVOT_FLOOR: f64 = 1e-10;

/// Lower-triangular matrix stored packed row-major (row `i` holds `i + 1`
/// entries), acting as the Cholesky factor `L` with `L·Lᵀ = A`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct LowerTriangular {
    dim: usize,
    data: Vec<f64>,
}

impl LowerTriangular {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    fn row(&self, i: usize) -> &[f64] {
        let start = i * (i + 1) / 2;
        &self.data[start..start + i + 1]
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        if j > i {
            0.0
        } else {
            self.data[i * (i + 1) / 2 + j]
        }
    }

    /// Factorizes the symmetric positive-definite matrix given entrywise by
    /// `a(i, j)`.
    pub fn factorize(n: usize, a: impl Fn(usize, usize) -> f64) -> Result<Self> {
        let mut l = LowerTriangular {
            dim: 0,
            data: Vec::with_capacity(n * (n + 1) / 2),
        };
        let mut col = Vec::with_capacity(n);
        for i in 0..n {
            col.clear();
            for j in 0..i {
                col.push(a(i, j));
            }
            l.append_row(&col, a(i, i))?;
        }
        Ok(l)
    }

    /// Extends the factor by one row so that the factored matrix gains the
    /// column `col` and diagonal entry `diag`. Fails (leaving the factor
    /// unchanged) if the new pivot drops to the breakdown floor.
    pub fn append_row(&mut self, col: &[f64], diag: f64) -> Result<()> {
        if col.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: col.len(),
            });
        }
        let head = self.forward_solve(col)?;
        let pivot_sq = diag - head.iter().map(|h| h * h).sum::<f64>();
        if !pivot_sq.is_finite() || pivot_sq <= PIVOT_FLOOR {
            return Err(Error::Numeric(format!(
                "cholesky breakdown: pivot^2 = {pivot_sq:e} at row {}",
                self.dim
            )));
        }
        self.data.extend_from_slice(&head);
        self.data.push(math::sqrt(pivot_sq));
        self.dim += 1;
        Ok(())
    }

    /// Solves `L y = b`.
    pub fn forward_solve(&self, b: &[f64]) -> Result<Vec<f64>> {
        if b.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: b.len(),
            });
        }
        let mut y = vec![0.0; self.dim];
        for i in 0..self.dim {
            let row = self.row(i);
            let mut acc = b[i];
            for j in 0..i {
                acc -= row[j] * y[j];
            }
            y[i] = acc / row[i];
        }
        Ok(y)
    }

    /// Solves `Lᵀ x = y`.
    pub fn back_solve(&self, y: &[f64]) -> Result<Vec<f64>> {
        if y.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: y.len(),
            });
        }
        let mut x = y.to_vec();
        for i in (0..self.dim).rev() {
            let row = self.row(i);
            x[i] /= row[i];
            let xi = x[i];
            for j in 0..i {
                x[j] -= row[j] * xi;
            }
        }
        Ok(x)
    }

    /// Solves `L·Lᵀ x = b`.
    pub fn solve(&self, b: &[f64]) -> Result<Vec<f64>> {
        self.back_solve(&self.forward_solve(b)?)
    }
}

/// Dense row-major matrix; just enough for the linear test environments.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMat {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl DenseMat {
    pub fn new(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                got: data.len(),
            });
        }
        Ok(DenseMat { rows, cols, data })
    }

    pub fn identity(n: usize) -> Self {
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            data[i * n + i] = 1.0;
        }
        DenseMat { rows: n, cols: n, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    /// Matrix-vector product `A·v`.
    pub fn mul_vec(&self, v: &[f64]) -> Result<Vec<f64>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                let row = &self.data[i * self.cols..(i + 1) * self.cols];
                row.iter().zip(v).map(|(a, b)| a * b).sum()
            })
            .collect())
    }
}
