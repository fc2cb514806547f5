//! Rank structure of the block matrix Z = [[A, B], [Bᵀ, A]] with A = UUᵀ and
//! B = UJUᵀ, where J is the symplectic identity. For full-rank U,
//! rank(Z) = rank(A) = 2r; the pure trigonometric matrix P̂ is the special
//! case U = [sin x | cos x], which pins rank(P̂) = 2 for generic phases.

use crate::error::{check_finite, Error, Result};
use crate::matrix::{DenseSym, Mat};
use crate::oracle::{jacobi_eigs_default, numerical_rank, numerical_rank_sym};
use crate::trig::{build_l, build_p, build_pure, TrigSpec};

/// Default eigenvalue-magnitude scale for numerical rank decisions.
pub const DEFAULT_RANK_TOL_SCALE: f64 = 1e-12;

/// The 2r×2r symplectic identity J = [[0, I], [−I, 0]], with J·J = −I.
#[derive(Debug, Clone, PartialEq)]
pub struct SymplecticBlock {
    pub r: usize,
    pub j: Mat,
}

pub fn build_symplectic(r: usize) -> Result<SymplecticBlock> {
    if r < 1 {
        return Err(Error::Domain("need r >= 1".into()));
    }
    let j = Mat::from_fn(2 * r, 2 * r, |i, k| {
        if k == i + r {
            1.0
        } else if i == k + r {
            -1.0
        } else {
            0.0
        }
    });
    Ok(SymplecticBlock { r, j })
}

/// The blocks of Z built from one factor U.
#[derive(Debug, Clone)]
pub struct ZBlocks {
    pub u: Mat,
    /// A = UUᵀ.
    pub a: DenseSym,
    /// B = UJUᵀ, antisymmetric.
    pub b: Mat,
    /// Z = [[A, B], [Bᵀ, A]].
    pub z: DenseSym,
}

/// Assembles Z from an n×2r factor U (n ≥ 2r).
pub fn build_z(u: &Mat) -> Result<ZBlocks> {
    let n = u.rows();
    let cols = u.cols();
    if cols == 0 || cols % 2 != 0 {
        return Err(Error::Dimension(format!(
            "U must have an even, positive column count, got {cols}"
        )));
    }
    let r = cols / 2;
    if n < 2 * r {
        return Err(Error::Dimension(format!("need n >= 2r, got n = {n}, 2r = {}", 2 * r)));
    }
    check_finite("U", u.data())?;
    let a = DenseSym::from_upper_fn(n, |i, j| {
        (0..cols).map(|k| u[(i, k)] * u[(j, k)]).sum()
    })?;
    // B_ij = Σ_k u_ik u_j(k+r) − u_i(k+r) u_jk, written to be antisymmetric
    // bit-exactly
    let mut b = Mat::zeros(n, n);
    for i in 0..n {
        for j in (i + 1)..n {
            let mut v = 0.0;
            for k in 0..r {
                v += u[(i, k)] * u[(j, k + r)] - u[(i, k + r)] * u[(j, k)];
            }
            b[(i, j)] = v;
            b[(j, i)] = -v;
        }
    }
    let z = DenseSym::from_upper_fn(2 * n, |i, j| {
        if j < n {
            a[(i, j)]
        } else if i < n {
            b[(i, j - n)]
        } else {
            a[(i - n, j - n)]
        }
    })?;
    Ok(ZBlocks { u: u.clone(), a, b, z })
}

/// The n×2 factor of the pure trigonometric matrix: row i is
/// (sin xᵢ, cos xᵢ), so that UUᵀ = Â and UJ₂Uᵀ = B̂.
pub fn trig_u(x: &[f64]) -> Result<Mat> {
    if x.len() < 2 {
        return Err(Error::Dimension(format!("need n >= 2, got n = {}", x.len())));
    }
    check_finite("x", x)?;
    Ok(Mat::from_fn(x.len(), 2, |i, k| {
        if k == 0 {
            x[i].sin()
        } else {
            x[i].cos()
        }
    }))
}

/// The 4r×4r middle factor [[I, J], [−J, I]] of the block-diagonal
/// factorization Z = diag(U, U) · L₂ᵣ · diag(Uᵀ, Uᵀ); its rank is 2r.
pub fn l2r_factor(r: usize) -> Result<Mat> {
    let sp = build_symplectic(r)?;
    let d = 2 * r;
    Ok(Mat::from_fn(2 * d, 2 * d, |i, j| {
        let (bi, bj) = (i / d, j / d);
        let (ii, jj) = (i % d, j % d);
        match (bi, bj) {
            (0, 0) | (1, 1) => {
                if ii == jj {
                    1.0
                } else {
                    0.0
                }
            }
            (0, 1) => sp.j[(ii, jj)],
            _ => -sp.j[(ii, jj)],
        }
    }))
}

/// Measured numerical ranks of P, P̂, and L, with the Hadamard rank bound
/// rank(P) ≤ 2·rank(P̂) and the tightened equality
/// rank(P) = rank(L)·rank(P̂).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RankBoundReport {
    pub rank_p: usize,
    pub rank_phat: usize,
    pub rank_l: usize,
    pub bound_holds: bool,
    pub equality_holds: bool,
}

pub fn rank_bound_check(spec: &TrigSpec, tol_scale: f64) -> Result<RankBoundReport> {
    let p = build_p(spec)?.p;
    let phat = build_pure(spec.x())?.phat;
    let lmat = build_l(spec.l(), spec.h())?;
    let rank_p = numerical_rank_sym(&p, tol_scale)?;
    let rank_phat = numerical_rank_sym(&phat, tol_scale)?;
    let rank_l = numerical_rank_sym(&lmat, tol_scale)?;
    Ok(RankBoundReport {
        rank_p,
        rank_phat,
        rank_l,
        bound_holds: rank_p <= 2 * rank_phat,
        equality_holds: rank_p == rank_l * rank_phat,
    })
}

/// Numerical rank of an arbitrary (possibly nonsymmetric) matrix, computed on
/// the symmetric Gram product XᵀX with a squared threshold.
pub fn numerical_rank_general(x: &Mat, tol_scale: f64) -> Result<usize> {
    let gram = DenseSym::from_mat(x.transpose().mat_mul(x)?)?;
    let eig = jacobi_eigs_default(&gram)?;
    Ok(numerical_rank(&eig.values, gram.dim(), tol_scale * tol_scale))
}
