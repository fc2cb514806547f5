//! Construction of the generalized trigonometric matrix family.
//!
//! Given a phase vector `x` and the rank-2 symmetric scaling `L = lhᵀ + hlᵀ`,
//! the 2n×2n matrix assembled here is
//!
//! ```text
//! P = [ A  B ]      A_ij = L_ij · cos(x_i − x_j)
//!     [ Bᵀ A ],     B_ij = L_ij · sin(x_i − x_j)
//! ```
//!
//! The pure variant P̂ drops the scaling (L_ij ≡ 1). The FIR filter-design
//! matrix is the special case L_ij = (i+j)/2 (0-based), x_i = (i+1)·ω.

use crate::error::{check_finite, Error, Result};
use crate::matrix::{DenseSym, Mat};

/// Generator data for one matrix family instance: phases `x` and the two
/// vectors defining `L = lhᵀ + hlᵀ`. All three share the same length n ≥ 2.
#[derive(Debug, Clone, PartialEq)]
pub struct TrigSpec {
    x: Vec<f64>,
    l: Vec<f64>,
    h: Vec<f64>,
}

impl TrigSpec {
    pub fn new(x: Vec<f64>, l: Vec<f64>, h: Vec<f64>) -> Result<Self> {
        let n = x.len();
        if n < 2 {
            return Err(Error::Dimension(format!("need n >= 2, got n = {n}")));
        }
        if l.len() != n || h.len() != n {
            return Err(Error::Dimension(format!(
                "vector lengths differ: x has {n}, l has {}, h has {}",
                l.len(),
                h.len()
            )));
        }
        check_finite("x", &x)?;
        check_finite("l", &l)?;
        check_finite("h", &h)?;
        Ok(TrigSpec { x, l, h })
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    pub fn x(&self) -> &[f64] {
        &self.x
    }

    pub fn l(&self) -> &[f64] {
        &self.l
    }

    pub fn h(&self) -> &[f64] {
        &self.h
    }
}

/// Parameters of the FIR filter-design instance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FirParams {
    pub n: usize,
    pub omega: f64,
}

impl FirParams {
    pub fn new(n: usize, omega: f64) -> Result<Self> {
        if n < 2 {
            return Err(Error::Dimension(format!("need n >= 2, got n = {n}")));
        }
        if !omega.is_finite() {
            return Err(Error::Domain("omega must be finite".into()));
        }
        Ok(FirParams { n, omega })
    }
}

/// The blocks of the pure trigonometric matrix P̂.
#[derive(Debug, Clone)]
pub struct PureBlocks {
    /// Â with Â_ij = cos(x_i − x_j), unit diagonal.
    pub ahat: DenseSym,
    /// B̂ with B̂_ij = sin(x_i − x_j), antisymmetric, zero diagonal.
    pub bhat: Mat,
    /// P̂ = [[Â, B̂], [B̂ᵀ, Â]].
    pub phat: DenseSym,
}

/// The blocks of the scaled matrix P.
#[derive(Debug, Clone)]
pub struct PBlocks {
    /// A = L ⊙ Â.
    pub a: DenseSym,
    /// B = L ⊙ B̂.
    pub b: Mat,
    /// P = [[A, B], [Bᵀ, A]].
    pub p: DenseSym,
}

/// L = lhᵀ + hlᵀ, the symmetric rank-≤2 scaling matrix.
pub fn build_l(l: &[f64], h: &[f64]) -> Result<DenseSym> {
    if l.len() != h.len() {
        return Err(Error::Dimension(format!(
            "l has length {}, h has length {}",
            l.len(),
            h.len()
        )));
    }
    if l.len() < 2 {
        return Err(Error::Dimension(format!("need n >= 2, got n = {}", l.len())));
    }
    check_finite("l", l)?;
    check_finite("h", h)?;
    DenseSym::from_upper_fn(l.len(), |i, j| l[i] * h[j] + h[i] * l[j])
}

/// Assembles [[A, B], [Bᵀ, A]] as an exactly symmetric 2n×2n matrix.
fn assemble_blocks(a: &DenseSym, b: &Mat) -> Result<DenseSym> {
    let n = a.dim();
    DenseSym::from_upper_fn(2 * n, |i, j| {
        // upper triangle only: i <= j
        if j < n {
            a[(i, j)]
        } else if i < n {
            b[(i, j - n)]
        } else {
            a[(i - n, j - n)]
        }
    })
}

/// Â, B̂, and P̂ for the given phase vector.
pub fn build_pure(x: &[f64]) -> Result<PureBlocks> {
    let n = x.len();
    if n < 2 {
        return Err(Error::Dimension(format!("need n >= 2, got n = {n}")));
    }
    check_finite("x", x)?;
    let ahat = DenseSym::from_upper_fn(n, |i, j| (x[i] - x[j]).cos())?;
    // one sine evaluation per pair keeps B̂ antisymmetric bit-exactly
    let mut bhat = Mat::zeros(n, n);
    for i in 0..n {
        for j in (i + 1)..n {
            let s = (x[i] - x[j]).sin();
            bhat[(i, j)] = s;
            bhat[(j, i)] = -s;
        }
    }
    let phat = assemble_blocks(&ahat, &bhat)?;
    Ok(PureBlocks { ahat, bhat, phat })
}

/// A, B, and P for the given generator spec.
pub fn build_p(spec: &TrigSpec) -> Result<PBlocks> {
    let n = spec.n();
    let lmat = build_l(spec.l(), spec.h())?;
    let pure = build_pure(spec.x())?;
    let a = DenseSym::from_upper_fn(n, |i, j| lmat[(i, j)] * pure.ahat[(i, j)])?;
    let mut b = Mat::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            b[(i, j)] = lmat[(i, j)] * pure.bhat[(i, j)];
        }
    }
    let p = assemble_blocks(&a, &b)?;
    Ok(PBlocks { a, b, p })
}

/// Generator spec of the FIR matrix: x_i = i·ω (1-based), l_i = (i−1)/2,
/// h = all ones.
pub fn build_fir(params: FirParams) -> Result<TrigSpec> {
    let FirParams { n, omega } = FirParams::new(params.n, params.omega)?;
    let x: Vec<f64> = (1..=n).map(|i| i as f64 * omega).collect();
    let l: Vec<f64> = (1..=n).map(|i| (i as f64 - 1.0) / 2.0).collect();
    let h = vec![1.0; n];
    TrigSpec::new(x, l, h)
}

/// Max-abs entrywise difference between the direct construction of P and the
/// Hadamard form P̂ ⊙ [[L, L], [L, L]]. Algebraically zero.
pub fn hadamard_kron_check(spec: &TrigSpec) -> Result<f64> {
    let n = spec.n();
    let blocks = build_p(spec)?;
    let lmat = build_l(spec.l(), spec.h())?;
    let pure = build_pure(spec.x())?;
    let tile = |i: usize, j: usize| lmat[(i % n, j % n)];
    let hadamard = Mat::from_fn(2 * n, 2 * n, |i, j| pure.phat[(i, j)] * tile(i, j));
    blocks.p.mat().max_abs_diff(&hadamard)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_mat_eq(m: &Mat, expected: &[&[f64]]) {
        assert_eq!(m.rows(), expected.len());
        for (i, row) in expected.iter().enumerate() {
            assert_eq!(m.cols(), row.len());
            for (j, v) in row.iter().enumerate() {
                assert_eq!(m[(i, j)], *v, "mismatch at ({i}, {j})");
            }
        }
    }

    #[test]
    fn build_l_orthonormal_pair() {
        let l = build_l(&[1.0, 0.0], &[0.0, 1.0]).unwrap();
        assert_mat_eq(l.mat(), &[&[0.0, 1.0], &[1.0, 0.0]]);
    }

    #[test]
    fn build_l_fir_entries() {
        // l_i = (i-1)/2 against all-ones gives L[i][j] = (i+j-2)/2, 1-based
        let l = build_l(&[0.0, 0.5, 1.0], &[1.0, 1.0, 1.0]).unwrap();
        assert_mat_eq(
            l.mat(),
            &[&[0.0, 0.5, 1.0], &[0.5, 1.0, 1.5], &[1.0, 1.5, 2.0]],
        );
    }

    #[test]
    fn build_l_parallel_is_rank_one() {
        let l = build_l(&[1.0, 1.0], &[1.0, 1.0]).unwrap();
        assert_mat_eq(l.mat(), &[&[2.0, 2.0], &[2.0, 2.0]]);
    }

    #[test]
    fn build_l_rejects_length_mismatch() {
        assert!(matches!(
            build_l(&[1.0, 2.0], &[1.0, 2.0, 3.0]),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn build_l_rejects_non_finite() {
        assert!(matches!(
            build_l(&[1.0, f64::INFINITY], &[1.0, 2.0]),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn build_pure_zero_phases() {
        let pure = build_pure(&[0.0, 0.0]).unwrap();
        assert_mat_eq(pure.ahat.mat(), &[&[1.0, 1.0], &[1.0, 1.0]]);
        assert_mat_eq(&pure.bhat, &[&[0.0, 0.0], &[0.0, 0.0]]);
    }

    #[test]
    fn build_pure_quarter_turn() {
        let pure = build_pure(&[0.0, std::f64::consts::FRAC_PI_2]).unwrap();
        // cos(±π/2) = 6.1e-17, not exactly 0
        assert!(pure.ahat[(0, 1)].abs() < 1e-15);
        assert_eq!(pure.ahat[(0, 0)], 1.0);
        assert_eq!(pure.ahat[(1, 1)], 1.0);
        assert_eq!(pure.bhat[(0, 1)], -1.0);
        assert_eq!(pure.bhat[(1, 0)], 1.0);
    }

    #[test]
    fn build_pure_matches_scalar_evaluation() {
        let x = [0.3, 1.1, 2.0];
        let pure = build_pure(&x).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let d = x[i] - x[j];
                assert!((pure.ahat[(i, j)] - d.cos()).abs() <= f64::EPSILON);
                assert!((pure.bhat[(i, j)] - d.sin()).abs() <= f64::EPSILON);
            }
        }
        assert_eq!(pure.phat.dim(), 6);
    }

    #[test]
    fn bhat_is_antisymmetric_exactly() {
        let pure = build_pure(&[0.1, 0.9, 4.2, 5.5]).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(pure.bhat[(i, j)], -pure.bhat[(j, i)]);
            }
        }
    }

    #[test]
    fn build_p_unit_hadamard_factor_reduces_to_pure() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let spec = TrigSpec::new(vec![0.4, 1.7], vec![s, s], vec![s, s]).unwrap();
        let blocks = build_p(&spec).unwrap();
        let pure = build_pure(spec.x()).unwrap();
        // l_i h_j + h_i l_j = 1 for every entry, so P == P̂ up to rounding
        assert!(blocks.p.mat().max_abs_diff(pure.phat.mat()).unwrap() < 1e-15);
    }

    #[test]
    fn build_p_zero_phases_is_block_diagonal() {
        let spec = TrigSpec::new(vec![0.0; 3], vec![1.0, 2.0, 3.0], vec![0.5, 0.1, 0.7]).unwrap();
        let blocks = build_p(&spec).unwrap();
        let lmat = build_l(spec.l(), spec.h()).unwrap();
        assert_eq!(blocks.b.max_abs(), 0.0);
        assert_eq!(blocks.a.mat(), lmat.mat());
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(blocks.p[(i, j + 3)], 0.0);
            }
        }
    }

    #[test]
    fn build_p_fir_matches_entrywise_formula() {
        let spec = build_fir(FirParams::new(2, 0.7).unwrap()).unwrap();
        let blocks = build_p(&spec).unwrap();
        for i in 1..=2usize {
            for j in 1..=2usize {
                let scale = (i + j - 2) as f64 / 2.0;
                let arg = i as f64 * 0.7 - j as f64 * 0.7;
                let a = scale * arg.cos();
                let b = scale * arg.sin();
                assert!((blocks.a[(i - 1, j - 1)] - a).abs() <= 1e-16);
                assert!((blocks.b[(i - 1, j - 1)] - b).abs() <= 1e-16);
            }
        }
    }

    #[test]
    fn fir_spec_layout() {
        let spec = build_fir(FirParams::new(2, 0.3).unwrap()).unwrap();
        assert_eq!(spec.l(), &[0.0, 0.5]);
        assert_eq!(spec.h(), &[1.0, 1.0]);
        assert_eq!(spec.x(), &[0.3, 0.6]);
        let spec3 = build_fir(FirParams::new(3, 1.0).unwrap()).unwrap();
        assert_eq!(spec3.l(), &[0.0, 0.5, 1.0]);
    }

    #[test]
    fn fir_omega_zero_gives_real_arithmetic_matrix() {
        let spec = build_fir(FirParams::new(4, 0.0).unwrap()).unwrap();
        let blocks = build_p(&spec).unwrap();
        assert_eq!(blocks.b.max_abs(), 0.0);
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(blocks.a[(i, j)], (i + j) as f64 / 2.0);
            }
        }
    }

    #[test]
    fn fir_rejects_small_n() {
        assert!(matches!(FirParams::new(1, 0.5), Err(Error::Dimension(_))));
    }

    #[test]
    fn diag_of_a_equals_diag_of_l() {
        let spec = TrigSpec::new(
            vec![0.2, 1.4, 3.3],
            vec![1.0, -2.0, 0.5],
            vec![0.3, 0.8, -1.1],
        )
        .unwrap();
        let blocks = build_p(&spec).unwrap();
        let lmat = build_l(spec.l(), spec.h()).unwrap();
        for i in 0..3 {
            assert_eq!(blocks.a[(i, i)], lmat[(i, i)]);
        }
    }

    #[test]
    fn hadamard_kron_residual_is_zero() {
        let spec = build_fir(FirParams::new(5, 1.3).unwrap()).unwrap();
        assert_eq!(hadamard_kron_check(&spec).unwrap(), 0.0);

        let spec2 = TrigSpec::new(
            vec![0.0, std::f64::consts::PI],
            vec![1.0, 2.0],
            vec![3.0, 4.0],
        )
        .unwrap();
        assert_eq!(hadamard_kron_check(&spec2).unwrap(), 0.0);
    }
}
