//! Problem matrices for the two radar applications: SNR-optimal phase codes
//! and adaptive beamforming steering vectors.

use num_complex::Complex64;

use crate::eigen::eigen_decompose;
use crate::error::{Result, UqpError};
use crate::hermitian::HermitianMatrix;

/// Smallest eigenvalue a covariance must exceed to be treated as invertible.
pub const PD_GATE: f64 = 1e-10;

fn inverse_covariance(cov: &HermitianMatrix) -> Result<HermitianMatrix> {
    let lam1 = eigen_decompose(cov)?.min_eigenvalue();
    if lam1 <= PD_GATE {
        return Err(UqpError::SingularCovariance { min_eigenvalue: lam1 });
    }
    let n = cov.n();
    // LU with partial pivoting, solved against the identity.
    let inv = cov
        .to_nalgebra()
        .lu()
        .try_inverse()
        .ok_or(UqpError::SingularCovariance { min_eigenvalue: lam1 })?;
    let entries = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| inv[(i, j)]).collect();
    HermitianMatrix::from_row_major(n, entries)
}

/// `R = M^{-1} (Hadamard) conj(p p^H)` for the code-design SNR `c^H R c`.
pub fn build_snr_matrix(cov: &HermitianMatrix, steering: &[Complex64]) -> Result<HermitianMatrix> {
    let n = cov.n();
    if steering.len() != n {
        return Err(UqpError::DimensionMismatch { expected: n, actual: steering.len() });
    }
    let inv = inverse_covariance(cov)?;
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            // conj(p_i conj(p_j)) = conj(p_i) p_j
            entries.push(inv.get(i, j) * steering[i].conj() * steering[j]);
        }
    }
    HermitianMatrix::from_row_major(n, entries)
}

/// `R = M^{-1}` for the beamforming objective `c^H M^{-1} c`.
pub fn build_beamforming_matrix(cov: &HermitianMatrix) -> Result<HermitianMatrix> {
    inverse_covariance(cov)
}
