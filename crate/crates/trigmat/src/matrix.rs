//! Dense row-major matrices and the exactly-symmetric wrapper used for
//! everything spectral.

use std::ops::{Index, IndexMut};

use crate::error::{check_finite, Error, Result};

/// Dense real matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![0.0; rows * cols] }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn identity(n: usize) -> Self {
        Mat::from_fn(n, n, |i, j| if i == j { 1.0 } else { 0.0 })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn mat_mul(&self, other: &Mat) -> Result<Mat> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self[(i, k)];
                if aik == 0.0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += aik * other[(k, j)];
                }
            }
        }
        Ok(out)
    }

    pub fn trace(&self) -> Result<f64> {
        if self.rows != self.cols {
            return Err(Error::Dimension(format!(
                "trace requires a square matrix, got {}x{}",
                self.rows, self.cols
            )));
        }
        Ok((0..self.rows).map(|i| self[(i, i)]).sum())
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0_f64, |m, v| m.max(v.abs()))
    }

    /// Largest entrywise absolute difference; errors on shape mismatch.
    pub fn max_abs_diff(&self, other: &Mat) -> Result<f64> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension(format!(
                "shape mismatch: {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .fold(0.0_f64, |m, (a, b)| m.max((a - b).abs())))
    }
}

impl Index<(usize, usize)> for Mat {
    type Output = f64;

    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

/// Dense real symmetric matrix. Constructors fill the upper triangle from one
/// formula and mirror it, so `m[(i, j)] == m[(j, i)]` holds bit-exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseSym {
    mat: Mat,
}

impl DenseSym {
    /// Builds an exactly symmetric matrix by evaluating `f` on the upper
    /// triangle (i <= j) and mirroring.
    pub fn from_upper_fn(dim: usize, mut f: impl FnMut(usize, usize) -> f64) -> Result<Self> {
        let mut mat = Mat::zeros(dim, dim);
        for i in 0..dim {
            for j in i..dim {
                let v = f(i, j);
                mat[(i, j)] = v;
                mat[(j, i)] = v;
            }
        }
        check_finite("symmetric matrix", mat.data())?;
        Ok(DenseSym { mat })
    }

    /// Wraps a matrix that is already exactly symmetric.
    pub fn from_mat(mat: Mat) -> Result<Self> {
        if mat.rows() != mat.cols() {
            return Err(Error::Dimension(format!(
                "symmetric matrix must be square, got {}x{}",
                mat.rows(),
                mat.cols()
            )));
        }
        for i in 0..mat.rows() {
            for j in (i + 1)..mat.cols() {
                if mat[(i, j)].to_bits() != mat[(j, i)].to_bits() {
                    return Err(Error::Domain(format!(
                        "matrix is not exactly symmetric at ({i}, {j})"
                    )));
                }
            }
        }
        check_finite("symmetric matrix", mat.data())?;
        Ok(DenseSym { mat })
    }

    pub fn dim(&self) -> usize {
        self.mat.rows()
    }

    pub fn mat(&self) -> &Mat {
        &self.mat
    }

    pub fn into_mat(self) -> Mat {
        self.mat
    }
}

impl Index<(usize, usize)> for DenseSym {
    type Output = f64;

    fn index(&self, idx: (usize, usize)) -> &f64 {
        &self.mat[idx]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mat_mul_identity() {
        let m = Mat::from_fn(3, 3, |i, j| (i * 3 + j) as f64);
        let id = Mat::identity(3);
        assert_eq!(id.mat_mul(&m).unwrap(), m);
        assert_eq!(m.mat_mul(&id).unwrap(), m);
    }

    #[test]
    fn trace_small() {
        let m = Mat::from_fn(2, 2, |i, j| (i * 2 + j + 1) as f64);
        assert_eq!(m.trace().unwrap(), 5.0);
    }

    #[test]
    fn trace_rejects_rectangular() {
        let m = Mat::zeros(2, 3);
        assert!(matches!(m.trace(), Err(Error::Dimension(_))));
    }

    #[test]
    fn sym_constructor_mirrors_exactly() {
        let s = DenseSym::from_upper_fn(4, |i, j| ((i + 1) * (j + 2)) as f64 / 7.0).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(s[(i, j)].to_bits(), s[(j, i)].to_bits());
            }
        }
    }

    #[test]
    fn sym_rejects_non_finite() {
        let r = DenseSym::from_upper_fn(2, |_, _| f64::NAN);
        assert!(matches!(r, Err(Error::Domain(_))));
    }
}
