use std::path::PathBuf;

use thiserror::Error;

/// Errors raised by the simulation, measurement and search routines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix dimension {0} exceeds the supported maximum of {max}", max = crate::linalg::MAX_DIM)]
    DimensionOverflow(usize),

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("matrix is not Hermitian (max asymmetry {0:e})")]
    NotHermitian(f64),

    #[error("Jacobi eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("invalid density matrix: {0}")]
    InvalidDensityMatrix(String),

    #[error("invalid state: {0}")]
    InvalidState(String),

    #[error("qubit {qubit} out of range for a {n_qubits}-qubit register")]
    QubitOutOfRange { qubit: usize, n_qubits: usize },

    #[error("invalid qubit subset: {0}")]
    InvalidSubset(String),

    #[error("noise strength p = {0} outside [0, 1]")]
    InvalidStrength(f64),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("{path}:{line}: {msg}")]
    Parse { path: PathBuf, line: usize, msg: String },

    #[error("cannot read {path}: {source}")]
    UnreadableFile { path: PathBuf, source: std::io::Error },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    /// True for errors caused by bad user input rather than a numerical or I/O failure.
    pub fn is_validation(&self) -> bool {
        !matches!(self, Error::NoConvergence { .. } | Error::Io(_) | Error::Csv(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
