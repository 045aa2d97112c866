//! Checkers for the overlap identities, their Schur specializations, the
//! walk and subpartition forms, and the dual Cauchy identity.

pub mod catalog;
pub mod engine;
mod ls;
mod report;
mod schur_ids;

use thiserror::Error;

use crate::overlap::OverlapError;
use crate::partitions::{Partition, PartitionError};
use crate::polyring::AlgebraError;
use crate::walks::WalkError;

pub use ls::{
    counterexample_regression, ls_routes_check, sorted_split, verify_cor_max_index, verify_first_overlap,
    verify_second_overlap, verify_sorted_first_overlap, verify_walk_split,
};
pub use report::{IdentityId, Mode, Outcome, VerificationReport};
pub use schur_ids::{
    verify_dual_cauchy, verify_first_overlap_schur, verify_labeled_walk_schur, verify_second_overlap_schur,
    verify_subpartition_ls, verify_subpartition_schur,
};

#[derive(Debug, Error)]
pub enum IdentityError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Overlap(#[from] OverlapError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Walk(#[from] WalkError),
}

/// `head` padded with zeros to `len` rows, followed by `tail`.
pub(crate) fn stack(head: &Partition, len: usize, tail: &Partition) -> Result<Partition, PartitionError> {
    let mut parts = head.padded(len);
    parts.extend_from_slice(tail.parts());
    Partition::new(parts)
}

/// `mu + <k^rows>` for a possibly negative `k`.
pub(crate) fn shift_rows(mu: &Partition, k: i64, rows: usize) -> Result<Partition, PartitionError> {
    let parts: Vec<i64> = mu.padded_signed(rows).iter().map(|p| p + k).collect();
    Partition::from_signed(&parts)
}
