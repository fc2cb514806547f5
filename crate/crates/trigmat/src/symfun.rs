//! Power traces, Newton's identities, and the reduced quartic characteristic
//! polynomial χ(λ) = λ⁴ − φ₁λ³ + φ₂λ² − φ₃λ + φ₄.
//!
//! Traces of M³ and M⁴ come from entrywise sums over M and M² only:
//! trace M³ = Σᵢⱼ [M²]ᵢⱼ mᵢⱼ and trace M⁴ = Σᵢⱼ [M²]ᵢⱼ², valid for
//! symmetric M.

use crate::error::{Error, Result};
use crate::matrix::DenseSym;
use crate::spectral::GammaDelta;
use crate::trig::{build_l, build_p, TrigSpec};

/// Power traces of P and L, the γₘ = 2·trace(Lᵐ) sequence, the elementary
/// symmetric polynomials φ₁..φ₄, and the quartic coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct SymFunReport {
    pub power_traces_p: [f64; 4],
    pub power_traces_l: [f64; 4],
    pub gamma_m: [f64; 4],
    pub phi: [f64; 4],
    /// (1, −φ₁, φ₂, −φ₃, φ₄)
    pub quartic_coeffs: [f64; 5],
}

/// [trace M, trace M², ..., trace M^max_m] for 1 <= max_m <= 4.
pub fn power_traces(m: &DenseSym, max_m: usize) -> Result<Vec<f64>> {
    if !(1..=4).contains(&max_m) {
        return Err(Error::Domain(format!("max_m must be in 1..=4, got {max_m}")));
    }
    let dim = m.dim();
    let mut traces = vec![m.mat().trace()?];
    if max_m >= 2 {
        let m2 = m.mat().mat_mul(m.mat())?;
        let mut t2 = 0.0;
        let mut t3 = 0.0;
        let mut t4 = 0.0;
        for i in 0..dim {
            for j in 0..dim {
                let mij = m[(i, j)];
                let m2ij = m2[(i, j)];
                t2 += mij * mij;
                t3 += m2ij * mij;
                t4 += m2ij * m2ij;
            }
        }
        traces.push(t2);
        if max_m >= 3 {
            traces.push(t3);
        }
        if max_m >= 4 {
            traces.push(t4);
        }
    }
    Ok(traces)
}

/// |trace(Pᵐ) − 2·trace(Lᵐ)| for m = 1..4.
pub fn trace_identity_residuals(spec: &TrigSpec) -> Result<[f64; 4]> {
    let p = build_p(spec)?.p;
    let lmat = build_l(spec.l(), spec.h())?;
    let tp = power_traces(&p, 4)?;
    let tl = power_traces(&lmat, 4)?;
    let mut res = [0.0; 4];
    for m in 0..4 {
        res[m] = (tp[m] - 2.0 * tl[m]).abs();
    }
    Ok(res)
}

/// Newton's identities, degree 4: elementary symmetric polynomials from the
/// power sums p₁..p₄ of the spectrum.
pub fn newton_phis(power_sums: [f64; 4]) -> [f64; 4] {
    let [p1, p2, p3, p4] = power_sums;
    let phi1 = p1;
    let phi2 = (p1 * p1 - p2) / 2.0;
    let phi3 = (phi2 * p1 - p1 * p2 + p3) / 3.0;
    let phi4 = (phi3 * p1 - phi2 * p2 + p1 * p3 - p4) / 4.0;
    [phi1, phi2, phi3, phi4]
}

/// χ(λ) = λ⁴ − φ₁λ³ + φ₂λ² − φ₃λ + φ₄, evaluated by Horner's scheme.
pub fn quartic_eval(phi: [f64; 4], lam: f64) -> f64 {
    (((lam - phi[0]) * lam + phi[1]) * lam - phi[2]) * lam + phi[3]
}

/// Max over the grid of |χ(λ) − (λ−γ+δ)²(λ−γ−δ)²|.
pub fn factorization_check(gd: GammaDelta, phi: [f64; 4], grid: &[f64]) -> Result<f64> {
    if grid.is_empty() {
        return Err(Error::Domain("factorization grid is empty".into()));
    }
    let mut worst = 0.0_f64;
    for &lam in grid {
        let a = lam - gd.gamma + gd.delta;
        let b = lam - gd.gamma - gd.delta;
        let factored = a * a * b * b;
        worst = worst.max((quartic_eval(phi, lam) - factored).abs());
    }
    Ok(worst)
}

/// γₘ = 2·trace(Lᵐ) in closed form:
/// (4γ, 4(γ²+δ²), 4(γ³+3γδ²), 4(γ⁴+6γ²δ²+δ⁴)).
pub fn gamma_m_closed(gd: GammaDelta) -> [f64; 4] {
    let g = gd.gamma;
    let d2 = gd.delta * gd.delta;
    [
        4.0 * g,
        4.0 * (g * g + d2),
        4.0 * (g * g * g + 3.0 * g * d2),
        4.0 * (g * g * g * g + 6.0 * g * g * d2 + d2 * d2),
    ]
}

/// φ₁..φ₄ in closed form: (4γ, 6γ²−2δ², 4(γ³−γδ²), (γ²−δ²)²).
pub fn phis_closed(gd: GammaDelta) -> [f64; 4] {
    let g = gd.gamma;
    let d2 = gd.delta * gd.delta;
    [
        4.0 * g,
        6.0 * g * g - 2.0 * d2,
        4.0 * (g * g * g - g * d2),
        (g * g - d2) * (g * g - d2),
    ]
}

/// Full symmetric-function report for one spec.
pub fn sym_fun_report(spec: &TrigSpec) -> Result<SymFunReport> {
    let p = build_p(spec)?.p;
    let lmat = build_l(spec.l(), spec.h())?;
    let tp = power_traces(&p, 4)?;
    let tl = power_traces(&lmat, 4)?;
    let gamma_m = [2.0 * tl[0], 2.0 * tl[1], 2.0 * tl[2], 2.0 * tl[3]];
    let phi = newton_phis(gamma_m);
    Ok(SymFunReport {
        power_traces_p: [tp[0], tp[1], tp[2], tp[3]],
        power_traces_l: [tl[0], tl[1], tl[2], tl[3]],
        gamma_m,
        phi,
        quartic_coeffs: [1.0, -phi[0], phi[1], -phi[2], phi[3]],
    })
}
