use thiserror::Error;

/// Errors raised by the spectral routines.
#[derive(Debug, Error)]
pub enum SpectralError {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid signal: {0}")]
    InvalidSignal(String),

    #[error("grid mismatch: expected N = {expected}, found N = {found}")]
    GridMismatch { expected: usize, found: usize },

    #[error("degenerate kernel: H(r, {k}) = {h:e} is negligible against sigma_{k}")]
    DegenerateKernel { k: usize, h: f64 },

    #[error("series truncation hit the cap of {cap} terms before reaching tolerance {tol:e}")]
    TruncationCap { cap: usize, tol: f64 },

    #[error(
        "quadrature for k = {k} did not converge: last ({:e}, {:e}), previous ({:e}, {:e})",
        last.0, last.1, previous.0, previous.1
    )]
    QuadratureFailure {
        k: usize,
        last: (f64, f64),
        previous: (f64, f64),
    },

    #[error("parse error: {0}")]
    Parse(String),
}

impl SpectralError {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        SpectralError::Domain(msg.into())
    }

    /// True for failures of the numerics (as opposed to bad input).
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            SpectralError::DegenerateKernel { .. }
                | SpectralError::TruncationCap { .. }
                | SpectralError::QuadratureFailure { .. }
        )
    }
}

impl From<serde_json::Error> for SpectralError {
    fn from(e: serde_json::Error) -> Self {
        SpectralError::Parse(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, SpectralError>;
