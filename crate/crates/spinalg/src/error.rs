use thiserror::Error;

#[derive(Debug, Error)]
pub enum SpinAlgError {
    #[error("spin must be a half-integer >= 1/2, got {0}")]
    InvalidSpin(f64),
    #[error("operator dimension {got} does not match local dimension {want} at site {site}")]
    DimensionMismatch { site: usize, got: usize, want: usize },
    #[error("bond endpoints must differ, got site {0} twice")]
    SameSiteBond(usize),
    #[error("operator is not hermitian (max |A - A^dagger| = {0:.3e})")]
    NotHermitian(f64),
    #[error("eigensolver did not converge after {0} iterations")]
    NoConvergence(usize),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("operators live on different spaces")]
    SpaceMismatch,
    #[error("requested {k} eigenpairs of a {dim}-dimensional operator")]
    TooManyEigenpairs { k: usize, dim: usize },
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed record stream: {0}")]
    BadRecordStream(String),
}
