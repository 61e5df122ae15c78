//! Finite group machinery: permutation groups, Cayley-table groups, the
//! subgroup criterion, cosets and homomorphism checks.

pub mod cayley;
pub mod perm;

pub use cayley::{c2v_group, verify_group_table, CayleyGroup, CayleyTable, GroupCheck};
pub use perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("image table {image:?} is not a bijection of {{1..n}}")]
    NotABijection { image: Vec<usize> },
    #[error("permutation degrees differ: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("cannot parse permutation from {0:?}")]
    ParsePermutation(String),
    #[error("table is not a group: {reason}")]
    NotAGroup { reason: String },
    #[error("unknown element {label:?}")]
    UnknownElement { label: String },
    #[error("candidate set is not a subgroup")]
    NotASubgroup,
    #[error("map must be total: expected {expected} images, got {got}")]
    MapNotTotal { expected: usize, got: usize },
    #[error("permutation degree {degree} out of supported range 1..=8")]
    DegreeOutOfRange { degree: usize },
}
