//! Generalized trigonometric matrices.
//!
//! A 2n×2n block matrix P = [[A, B], [Bᵀ, A]] with A_ij = L_ij cos(x_i − x_j)
//! and B_ij = L_ij sin(x_i − x_j), where L = lhᵀ + hlᵀ, has at most four
//! nonzero eigenvalues and they are known in closed form: γ ± δ with
//! γ = lᵀh and δ = √((lᵀl)(hᵀh)), each with multiplicity 2. This crate
//! constructs the matrices, evaluates the closed forms, and checks every
//! structural claim (rank, trace identities, quartic factorization,
//! ω-independence of the FIR special case) against an independent Jacobi
//! eigensolver.

pub mod error;
pub mod io;
pub mod matrix;
pub mod oracle;
pub mod rank;
pub mod spectral;
pub mod symfun;
pub mod trig;
pub mod verify;

pub use error::{Error, Result};
pub use matrix::{DenseSym, Mat};
pub use oracle::{jacobi_eigs, jacobi_eigs_default, numerical_rank, numerical_rank_sym, EigResult};
pub use rank::{build_symplectic, build_z, rank_bound_check, trig_u, RankBoundReport, ZBlocks};
pub use spectral::{
    classify_rank_l, eigs_of_l, eigs_of_p, fir_closed_form, gamma_delta, GammaDelta,
    SpectralSummary,
};
pub use symfun::{
    factorization_check, gamma_m_closed, newton_phis, phis_closed, power_traces, quartic_eval,
    sym_fun_report, trace_identity_residuals, SymFunReport,
};
pub use trig::{
    build_fir, build_l, build_p, build_pure, hadamard_kron_check, FirParams, PBlocks, PureBlocks,
    TrigSpec,
};
pub use verify::{run_suite, Check, VerifyConfig, VerifyReport};
