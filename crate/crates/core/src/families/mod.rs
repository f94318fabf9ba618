//! Constructors for the concrete braidings: flips, diagonal braidings, the
//! type-A braidings on quantum projective space, Yetter-Drinfeld modules over
//! finite groups, and the quantum determinant expansion.

mod frt;
mod qdet;
mod yd;

use crate::braidcore::Braiding;
use crate::error::{Error, Result};
use crate::linalg::FieldMatrix;
use crate::qfield::QRational;

pub use frt::{
    agreement_rescaling, bundle_braiding, bundle_braiding_with, cpn_cotangent_braiding, cpn_yd_braiding,
    cpn_yd_scaled_braiding, frt_braiding, frt_matrix, proportionality_scalar, RConvention,
};
pub use qdet::quantum_determinant_terms;
pub use yd::{check_yd, transposition_module, yd_group_braiding, GroupData, YdVerdict, YdViolation, YDGroupModule};

/// `v ⊗ w ↦ w ⊗ v`.
pub fn flip(d: usize) -> Result<Braiding> {
    diagonal(&vec![vec![QRational::one(); d]; d])
}

/// `v ⊗ w ↦ -w ⊗ v`.
pub fn antiflip(d: usize) -> Result<Braiding> {
    diagonal(&vec![vec![-QRational::one(); d]; d])
}

/// `e_i ⊗ e_j ↦ λ_{ij} e_j ⊗ e_i`; the table is indexed `[i][j]`, 0-based.
pub fn diagonal(lambda: &[Vec<QRational>]) -> Result<Braiding> {
    let d = lambda.len();
    if d == 0 || lambda.iter().any(|row| row.len() != d) {
        return Err(Error::Shape("diagonal braiding needs a nonempty square table".into()));
    }
    let mut entries = Vec::with_capacity(d * d);
    for (i, row) in lambda.iter().enumerate() {
        for (j, l) in row.iter().enumerate() {
            if l.is_zero() {
                return Err(Error::InvalidArgument(format!("λ[{}][{}] is zero", i + 1, j + 1)));
            }
            entries.push((j * d + i, i * d + j, l.clone()));
        }
    }
    // diagonal braidings satisfy the braid equation identically
    Ok(Braiding::new_unchecked(d, FieldMatrix::from_entries(d * d, d * d, entries)?))
}
