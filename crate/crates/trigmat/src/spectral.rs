//! Closed-form spectra.
//!
//! The whole nonzero spectrum of P is determined by two scalars,
//! γ = lᵀh and δ = √((lᵀl)(hᵀh)): when L has rank 2 the nonzero eigenvalues
//! are γ+δ and γ−δ, each with multiplicity 2. Rank-1 L (γ = ±δ) leaves two
//! nonzero eigenvalues; L = 0 leaves none.

use crate::error::{check_finite, Error, Result};
use crate::trig::TrigSpec;

/// Default relative tolerance for the rank classification of L.
pub const DEFAULT_RANK_TOL: f64 = 1e-12;

/// The pair (γ, δ) controlling the spectrum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaDelta {
    pub gamma: f64,
    pub delta: f64,
}

/// Closed-form eigenvalue summary of P for one generator spec.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralSummary {
    pub gd: GammaDelta,
    pub lam_plus: f64,
    pub lam_minus: f64,
    pub mult_plus: usize,
    pub mult_minus: usize,
    pub zero_count: usize,
    pub predicted_rank: usize,
}

impl SpectralSummary {
    /// The full 2n-element eigenvalue multiset, sorted descending.
    pub fn values_descending(&self) -> Vec<f64> {
        let mut vals = Vec::with_capacity(self.mult_plus + self.mult_minus + self.zero_count);
        vals.extend(std::iter::repeat(self.lam_plus).take(self.mult_plus));
        vals.extend(std::iter::repeat(self.lam_minus).take(self.mult_minus));
        vals.extend(std::iter::repeat(0.0).take(self.zero_count));
        vals.sort_by(|a, b| b.partial_cmp(a).unwrap());
        vals
    }
}

/// γ = lᵀh and δ = √((lᵀl)(hᵀh)).
pub fn gamma_delta(l: &[f64], h: &[f64]) -> Result<GammaDelta> {
    if l.len() != h.len() {
        return Err(Error::Dimension(format!(
            "l has length {}, h has length {}",
            l.len(),
            h.len()
        )));
    }
    check_finite("l", l)?;
    check_finite("h", h)?;
    let gamma: f64 = l.iter().zip(h).map(|(a, b)| a * b).sum();
    let ll: f64 = l.iter().map(|a| a * a).sum();
    let hh: f64 = h.iter().map(|a| a * a).sum();
    Ok(GammaDelta { gamma, delta: (ll * hh).sqrt() })
}

/// The at-most-two nonzero eigenvalues of L: (γ+δ, γ−δ).
pub fn eigs_of_l(gd: GammaDelta) -> (f64, f64) {
    (gd.gamma + gd.delta, gd.gamma - gd.delta)
}

/// Rank of L from (γ, δ): 0 when δ vanishes, 1 when |γ| = δ, else 2.
pub fn classify_rank_l(gd: GammaDelta, tol: f64) -> usize {
    if gd.delta <= tol {
        0
    } else if (gd.delta - gd.gamma.abs()).abs() <= tol * gd.delta {
        1
    } else {
        2
    }
}

/// Closed-form spectrum of P for the given spec.
pub fn eigs_of_p(spec: &TrigSpec) -> Result<SpectralSummary> {
    let gd = gamma_delta(spec.l(), spec.h())?;
    let two_n = 2 * spec.n();
    let (lam_plus, lam_minus) = eigs_of_l(gd);
    let summary = match classify_rank_l(gd, DEFAULT_RANK_TOL) {
        0 => SpectralSummary {
            gd,
            lam_plus: 0.0,
            lam_minus: 0.0,
            mult_plus: 0,
            mult_minus: 0,
            zero_count: two_n,
            predicted_rank: 0,
        },
        1 => {
            // γ = ±δ: one of the closed-form values collapses into the kernel,
            // leaving exactly two nonzero eigenvalues
            if gd.gamma > 0.0 {
                SpectralSummary {
                    gd,
                    lam_plus,
                    lam_minus: 0.0,
                    mult_plus: 2,
                    mult_minus: 0,
                    zero_count: two_n - 2,
                    predicted_rank: 2,
                }
            } else {
                SpectralSummary {
                    gd,
                    lam_plus: 0.0,
                    lam_minus,
                    mult_plus: 0,
                    mult_minus: 2,
                    zero_count: two_n - 2,
                    predicted_rank: 2,
                }
            }
        }
        _ => SpectralSummary {
            gd,
            lam_plus,
            lam_minus,
            mult_plus: 2,
            mult_minus: 2,
            zero_count: two_n - 4,
            predicted_rank: 4,
        },
    };
    Ok(summary)
}

/// Closed-form (λ₊, λ₋) of the FIR matrix of block size n:
/// λ± = (n/4)·(n−1 ± √((4n²−6n+2)/3)).
pub fn fir_closed_form(n: usize) -> Result<(f64, f64)> {
    if n < 2 {
        return Err(Error::Domain(format!("need n >= 2, got n = {n}")));
    }
    let nf = n as f64;
    let root = ((4.0 * nf * nf - 6.0 * nf + 2.0) / 3.0).sqrt();
    Ok((nf / 4.0 * (nf - 1.0 + root), nf / 4.0 * (nf - 1.0 - root)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trig::{build_fir, FirParams};

    #[test]
    fn gamma_delta_orthonormal() {
        let gd = gamma_delta(&[1.0, 0.0], &[0.0, 1.0]).unwrap();
        assert_eq!(gd.gamma, 0.0);
        assert_eq!(gd.delta, 1.0);
    }

    #[test]
    fn gamma_delta_parallel_equality_case() {
        let gd = gamma_delta(&[1.0, 1.0, 1.0], &[1.0, 1.0, 1.0]).unwrap();
        assert_eq!(gd.gamma, 3.0);
        assert_eq!(gd.delta, 3.0);
    }

    #[test]
    fn gamma_delta_fir_n2() {
        let gd = gamma_delta(&[0.0, 0.5], &[1.0, 1.0]).unwrap();
        assert_eq!(gd.gamma, 0.5);
        assert!((gd.delta - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-16);
    }

    #[test]
    fn gamma_delta_rejects_mismatch() {
        assert!(gamma_delta(&[1.0], &[1.0, 2.0]).is_err());
    }

    #[test]
    fn cauchy_schwarz_holds() {
        let gd = gamma_delta(&[0.3, -1.2, 2.0], &[0.7, 0.4, -0.9]).unwrap();
        assert!(gd.gamma.abs() <= gd.delta);
    }

    #[test]
    fn eigs_of_l_cases() {
        assert_eq!(eigs_of_l(GammaDelta { gamma: 0.0, delta: 1.0 }), (1.0, -1.0));
        assert_eq!(eigs_of_l(GammaDelta { gamma: 3.0, delta: 3.0 }), (6.0, 0.0));
        let gd = gamma_delta(&[0.0, 0.5, 1.0], &[1.0, 1.0, 1.0]).unwrap();
        let (lp, lm) = eigs_of_l(gd);
        assert!((lp - 3.4364916731037085).abs() < 1e-12);
        assert!((lm + 0.4364916731037085).abs() < 1e-12);
    }

    #[test]
    fn classify_rank_cases() {
        assert_eq!(classify_rank_l(GammaDelta { gamma: 0.5, delta: 0.75 }, 1e-12), 2);
        assert_eq!(classify_rank_l(GammaDelta { gamma: 3.0, delta: 3.0 }, 1e-12), 1);
        assert_eq!(classify_rank_l(GammaDelta { gamma: 0.0, delta: 0.0 }, 1e-12), 0);
        assert_eq!(classify_rank_l(GammaDelta { gamma: -2.0, delta: 2.0 }, 1e-12), 1);
    }

    #[test]
    fn fir_closed_form_small_n() {
        let (lp, lm) = fir_closed_form(2).unwrap();
        assert!((lp - 1.2071067811865475).abs() < 1e-15);
        assert!((lm + 0.2071067811865476).abs() < 1e-15);
        let (lp, lm) = fir_closed_form(3).unwrap();
        assert!((lp - 3.4364916731037085).abs() < 1e-14);
        assert!((lm + 0.4364916731037085).abs() < 1e-14);
        assert!(fir_closed_form(1).is_err());
    }

    #[test]
    fn fir_closed_form_matches_gamma_delta_route() {
        // γ = n(n-1)/4 and δ = √n·‖l‖ give the same pair
        for n in 2..=20usize {
            let spec = build_fir(FirParams::new(n, 0.4).unwrap()).unwrap();
            let gd = gamma_delta(spec.l(), spec.h()).unwrap();
            let (lp, lm) = eigs_of_l(gd);
            let (cp, cm) = fir_closed_form(n).unwrap();
            let scale = lp.abs().max(1.0);
            assert!((lp - cp).abs() <= 1e-12 * scale);
            assert!((lm - cm).abs() <= 1e-12 * scale);
            assert!((gd.gamma - (n * (n - 1)) as f64 / 4.0).abs() <= 1e-12 * scale);
        }
    }

    #[test]
    fn fir_sign_pattern() {
        for n in 2..=50usize {
            let (lp, lm) = fir_closed_form(n).unwrap();
            assert!(lp > 0.0 && lm < 0.0, "n = {n}");
        }
    }

    #[test]
    fn summary_generic_rank2() {
        let spec = build_fir(FirParams::new(2, 1.0).unwrap()).unwrap();
        let s = eigs_of_p(&spec).unwrap();
        assert_eq!(s.predicted_rank, 4);
        assert_eq!((s.mult_plus, s.mult_minus, s.zero_count), (2, 2, 0));
        assert!((s.lam_plus - 1.2071067811865475).abs() < 1e-15);
        assert!((s.lam_minus + 0.2071067811865476).abs() < 1e-15);
        assert_eq!(s.mult_plus + s.mult_minus + s.zero_count, 2 * spec.n());
    }

    #[test]
    fn summary_rank1_and_zero() {
        let spec = TrigSpec::new(vec![0.1, 0.8], vec![1.0, 1.0], vec![1.0, 1.0]).unwrap();
        let s = eigs_of_p(&spec).unwrap();
        assert_eq!(s.predicted_rank, 2);
        assert_eq!(s.lam_plus, 4.0);
        assert_eq!((s.mult_plus, s.mult_minus, s.zero_count), (2, 0, 2));

        let zero = TrigSpec::new(vec![0.1, 0.8], vec![0.0, 0.0], vec![1.0, 1.0]).unwrap();
        let s0 = eigs_of_p(&zero).unwrap();
        assert_eq!(s0.predicted_rank, 0);
        assert_eq!(s0.zero_count, 4);
    }

    #[test]
    fn values_descending_is_sorted_and_complete() {
        let spec = build_fir(FirParams::new(4, 2.2).unwrap()).unwrap();
        let s = eigs_of_p(&spec).unwrap();
        let vals = s.values_descending();
        assert_eq!(vals.len(), 8);
        assert!(vals.windows(2).all(|w| w[0] >= w[1]));
    }
}
