//! Dense complex linear algebra sized for small qubit registers.
//!
//! Basis ordering is global: qubit 0 is the most significant bit of a basis
//! index, so `|00011⟩` is index 3.

pub(crate) mod density;
mod eigen;
pub(crate) mod matrix;

pub use density::{partial_trace, partial_transpose, DensityMatrix, PureState, MAX_QUBITS};
pub use eigen::{hermitian_eigen, hermitian_eigenvalues, HermitianEigen};
pub use matrix::{pauli, tensor_product, ComplexMatrix};

/// Largest matrix dimension handled (2^MAX_QUBITS).
pub const MAX_DIM: usize = 1 << MAX_QUBITS;

/// Bit mask of qubit `q` in an `n`-qubit basis index.
#[inline]
pub(crate) fn qubit_mask(q: usize, n: usize) -> usize {
    1 << (n - 1 - q)
}
