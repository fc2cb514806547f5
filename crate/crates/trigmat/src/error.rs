/// Errors shared by all construction and verification routines.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dimension error: {0}")]
    Dimension(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error(
        "eigensolver did not converge: off-diagonal norm {off_diag_norm:.3e} after {sweeps} sweeps"
    )]
    NoConvergence { off_diag_norm: f64, sweeps: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_finite(name: &str, values: &[f64]) -> Result<()> {
    if values.iter().any(|v| !v.is_finite()) {
        return Err(Error::Domain(format!("{name} contains a non-finite entry")));
    }
    Ok(())
}
