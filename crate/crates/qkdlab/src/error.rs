use thiserror::Error;

/// Errors surfaced by the covariance algebra, the protocol builders and
/// the sweep front end.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not symmetric (max asymmetry {0:.3e})")]
    NotSymmetric(f64),

    #[error("matrix is not symplectic (max residual {0:.3e})")]
    NotSymplectic(f64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unknown mode label: {0}")]
    UnknownMode(String),

    /// The input state violates the Heisenberg bound (or a derived
    /// quantity does, which signals a construction bug upstream).
    #[error("unphysical state: {0}")]
    Unphysical(String),

    /// A numerical invariant failed beyond tolerance.
    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("invalid sweep spec: {0}")]
    InvalidSpec(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
