//! Independent numerical ground truth: a cyclic-by-row Jacobi eigensolver for
//! dense symmetric matrices, plus the threshold rule for numerical rank.
//!
//! Each Jacobi rotation annihilates one off-diagonal entry; sweeps repeat
//! until the off-diagonal Frobenius norm falls below `threshold · ‖M‖_F`.
//! The solver is deterministic: identical inputs give bitwise identical
//! output on one platform.

use crate::error::{Error, Result};
use crate::matrix::DenseSym;

/// Relative off-diagonal convergence threshold.
pub const DEFAULT_THRESHOLD: f64 = 1e-12;
pub const DEFAULT_MAX_SWEEPS: usize = 50;

/// Pivots smaller than this are skipped to avoid denormal churn.
const PIVOT_SKIP: f64 = 1e-300;

#[derive(Debug, Clone, PartialEq)]
pub struct EigResult {
    /// Eigenvalues sorted descending.
    pub values: Vec<f64>,
    pub sweeps_used: usize,
    /// Off-diagonal Frobenius norm at termination.
    pub off_diag_norm: f64,
}

fn off_diag_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let v = a[i * n + j];
                s += v * v;
            }
        }
    }
    s.sqrt()
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
///
/// `threshold` is relative to the Frobenius norm of the input.
pub fn jacobi_eigs(m: &DenseSym, threshold: f64, max_sweeps: usize) -> Result<EigResult> {
    if threshold <= 0.0 {
        return Err(Error::Domain("threshold must be positive".into()));
    }
    if max_sweeps == 0 {
        return Err(Error::Domain("max_sweeps must be at least 1".into()));
    }
    let n = m.dim();
    let mut a: Vec<f64> = m.mat().data().to_vec();
    let stop = threshold * m.mat().frobenius_norm().max(f64::MIN_POSITIVE);

    let mut off = off_diag_norm(&a, n);
    let mut sweeps_used = 0;
    while off > stop {
        if sweeps_used == max_sweeps {
            return Err(Error::NoConvergence { off_diag_norm: off, sweeps: sweeps_used });
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq.abs() < PIVOT_SKIP {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = if theta.is_finite() {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                } else {
                    // |theta| overflows only when apq is tiny relative to the
                    // diagonal gap; the rotation angle is then 1/(2 theta)
                    0.5 / theta
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                // A <- Jᵀ A J, applied as column then row updates
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
        sweeps_used += 1;
        off = off_diag_norm(&a, n);
    }

    let mut values: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    values.sort_by(|x, y| y.partial_cmp(x).unwrap());
    Ok(EigResult { values, sweeps_used, off_diag_norm: off })
}

/// Solve with the default threshold and sweep budget.
pub fn jacobi_eigs_default(m: &DenseSym) -> Result<EigResult> {
    jacobi_eigs(m, DEFAULT_THRESHOLD, DEFAULT_MAX_SWEEPS)
}

/// Numerical rank: count of |vᵢ| above `tol_scale · dim · max(1, max|v|)`.
pub fn numerical_rank(values: &[f64], dim: usize, tol_scale: f64) -> usize {
    let vmax = values.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
    let cut = tol_scale * dim as f64 * vmax.max(1.0);
    values.iter().filter(|v| v.abs() > cut).count()
}

/// Numerical rank of a symmetric matrix via the Jacobi oracle.
pub fn numerical_rank_sym(m: &DenseSym, tol_scale: f64) -> Result<usize> {
    let eig = jacobi_eigs_default(m)?;
    Ok(numerical_rank(&eig.values, m.dim(), tol_scale))
}
