//! Error types shared across the crate.

use thiserror::Error;

/// Errors produced by group, space, function and series operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed permutation: {0}")]
    MalformedPermutation(String),

    #[error("group closure exceeded the element cap of {cap}")]
    SizeLimit { cap: usize },

    #[error("element id {id} out of range (group has {order} elements)")]
    ElementIndex { id: usize, order: usize },

    #[error("atom index {index} out of range (space has {count} atoms)")]
    AtomIndex { index: usize, count: usize },

    #[error("unknown atom id {0:?}")]
    UnknownAtom(String),

    #[error("duplicate atom id {0:?}")]
    DuplicateAtom(String),

    #[error("groups do not match: {0}")]
    GroupMismatch(String),

    #[error("space mismatch: {0}")]
    SpaceMismatch(String),

    #[error("cell map is inconsistent: {0}")]
    MapInconsistent(String),

    #[error("series has no inverse: constant term {0} is not a unit")]
    NotInvertible(String),

    #[error("series ring mismatch: {0}")]
    RingMismatch(String),

    #[error("degree mismatch in substitution: {0}")]
    DegreeMismatch(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("malformed rational {0:?}")]
    MalformedRational(String),
}

pub type Result<T> = std::result::Result<T, Error>;
