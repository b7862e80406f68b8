//! Small dense matrices and Gaussian elimination with partial pivoting.
//!
//! The systems here are tiny (a few dozen unknowns at most), so nothing
//! beyond a straightforward LU factorization is warranted.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Pivots smaller than this fraction of the row-equilibrated `||M||_inf`
/// mean "singular".
const SINGULAR_RTOL: f64 = 1e-13;

/// Row-major dense matrix. Serializes as a list of rows.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<f64>>", into = "Vec<Vec<f64>>")]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Maximum absolute row sum.
    pub fn norm_inf(&self) -> f64 {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| x.abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn mul_vec(&self, x: &[f64]) -> Result<Vec<f64>> {
        if x.len() != self.cols {
            return Err(Error::Dimension(format!(
                "{}x{} matrix times vector of length {}",
                self.rows,
                self.cols,
                x.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect())
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = f64;

    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.cols + j]
    }
}

impl TryFrom<Vec<Vec<f64>>> for Matrix {
    type Error = Error;

    fn try_from(rows: Vec<Vec<f64>>) -> Result<Self> {
        Self::from_rows(rows)
    }
}

impl From<Matrix> for Vec<Vec<f64>> {
    fn from(m: Matrix) -> Self {
        m.to_rows()
    }
}

/// `P D A = L U` with unit lower-triangular `L`, stored packed. `D` scales
/// every row of `A` to unit max-norm before elimination, so rows of very
/// different magnitude (Vandermonde rows `k^m`) are compared fairly.
#[derive(Debug, Clone)]
pub struct Lu {
    lu: Matrix,
    perm: Vec<usize>,
    row_scale: Vec<f64>,
}

impl Lu {
    pub fn factor(a: &Matrix) -> Result<Self> {
        if !a.is_square() {
            return Err(Error::Dimension(format!(
                "{}x{} matrix is not square",
                a.rows, a.cols
            )));
        }
        let n = a.rows;
        let mut lu = a.clone();
        let mut row_scale = vec![1.0; n];
        for (i, scale) in row_scale.iter_mut().enumerate() {
            let big = lu.row(i).iter().fold(0.0_f64, |m, v| m.max(v.abs()));
            if big > 0.0 {
                *scale = 1.0 / big;
                for j in 0..n {
                    lu[(i, j)] *= *scale;
                }
            }
        }
        let threshold = SINGULAR_RTOL * lu.norm_inf();
        let mut perm: Vec<usize> = (0..n).collect();
        for col in 0..n {
            let (p, pivot) = (col..n)
                .map(|r| (r, lu[(r, col)]))
                .max_by(|x, y| x.1.abs().total_cmp(&y.1.abs()))
                .expect("non-empty pivot range");
            if pivot.is_nan() || pivot.abs() <= threshold {
                return Err(Error::Singular { pivot, column: col });
            }
            if p != col {
                for j in 0..n {
                    lu.data.swap(p * n + j, col * n + j);
                }
                perm.swap(p, col);
            }
            for r in col + 1..n {
                let factor = lu[(r, col)] / pivot;
                lu[(r, col)] = factor;
                if factor != 0.0 {
                    for j in col + 1..n {
                        let v = lu[(col, j)];
                        lu[(r, j)] -= factor * v;
                    }
                }
            }
        }
        Ok(Self {
            lu,
            perm,
            row_scale,
        })
    }

    pub fn solve(&self, b: &[f64]) -> Result<Vec<f64>> {
        let n = self.perm.len();
        if b.len() != n {
            return Err(Error::Dimension(format!(
                "system of size {n}, right-hand side of length {}",
                b.len()
            )));
        }
        let mut x: Vec<f64> = self
            .perm
            .iter()
            .map(|&p| b[p] * self.row_scale[p])
            .collect();
        for i in 0..n {
            let s: f64 = (0..i).map(|j| self.lu[(i, j)] * x[j]).sum();
            x[i] -= s;
        }
        for i in (0..n).rev() {
            let s: f64 = (i + 1..n).map(|j| self.lu[(i, j)] * x[j]).sum();
            x[i] = (x[i] - s) / self.lu[(i, i)];
        }
        Ok(x)
    }

    /// `||A^-1||_inf`, from solving against the identity columns.
    pub fn inverse_norm_inf(&self) -> f64 {
        let n = self.perm.len();
        let mut row_sums = vec![0.0; n];
        for j in 0..n {
            let mut e = vec![0.0; n];
            e[j] = 1.0;
            let col = self.solve(&e).expect("dimensions match");
            for (s, v) in row_sums.iter_mut().zip(col) {
                *s += v.abs();
            }
        }
        row_sums.into_iter().fold(0.0, f64::max)
    }
}

/// Solves `M x = c` by Gaussian elimination with partial pivoting.
pub fn solve_dense(m: &Matrix, c: &[f64]) -> Result<Vec<f64>> {
    if m.rows != c.len() {
        return Err(Error::Dimension(format!(
            "{} equations, {} constants",
            m.rows,
            c.len()
        )));
    }
    Lu::factor(m)?.solve(c)
}

/// Infinity-norm condition number `||M|| * ||M^-1||`.
pub fn condition_number(m: &Matrix) -> Result<f64> {
    Ok(m.norm_inf() * Lu::factor(m)?.inverse_norm_inf())
}
