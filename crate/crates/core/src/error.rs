use thiserror::Error;

use crate::face::Face;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {} out of range for ground set of size {ground}", index + 1)]
    VertexOutOfRange { index: usize, ground: usize },

    #[error("ground set of size {0} exceeds the supported maximum of 128")]
    GroundTooLarge(usize),

    #[error("face enumeration exceeded the cap of {cap} faces; instance too large")]
    TooManyFaces { cap: usize },

    #[error("ground sizes disagree: expected {expected}, got {got}")]
    GroundMismatch { expected: usize, got: usize },

    #[error("deleted join arity j = {j} out of range; expected 2 <= j <= {max}")]
    BadJoinArity { j: usize, max: usize },

    #[error("Bier sphere undefined: the complex is the full powerset (its dual is void)")]
    BierOfFullComplex,

    #[error("Bier sphere undefined: the complex is void")]
    BierOfVoidComplex,

    #[error("Bier sphere requires a ground set of size >= 2, got {0}")]
    BierGroundTooSmall(usize),

    #[error("face {0} does not belong to this Bier sphere")]
    ForeignBierFace(Face),

    #[error("discrete vector field is invalid: {0}")]
    InvalidMatching(String),

    #[error("Bier matching needs the trivial-dual case excluded: the Alexander dual is {{<empty face>}}")]
    TrivialDual,

    #[error("Bier matching requires {{1}} in the Alexander dual; re-enumerate the ground set first")]
    BaseVertexMissing,

    #[error(
        "row/column caps fail the inequality sum(l) >= sum(k) + n - 1: {col_sum} < {row_sum} + {rows} - 1"
    )]
    StarConditionViolated {
        col_sum: usize,
        row_sum: usize,
        rows: usize,
    },

    #[error("column pointer a_{step} undefined at step {step} for face {face}; construction cannot proceed")]
    PointerUndefined { step: usize, face: Face },

    #[error("matching classification is inconsistent at face {0}; this indicates an implementation bug")]
    MatchingInconsistent(Face),

    #[error("connectivity certificate not applicable: found {zero_cells} critical 0-cells, need exactly 1")]
    CertificateNotApplicable { zero_cells: usize },

    #[error("clutter member {0} is empty")]
    EmptyClutterMember(usize),

    #[error("clutter is not an antichain: member {0} contains member {1}")]
    NotAnAntichain(Face, Face),

    #[error("clutter has no members")]
    EmptyClutter,

    #[error("ground set of size {got} exceeds the limit of {limit} for this operation")]
    GroundOverLimit { got: usize, limit: usize },

    #[error("multiplicity profile length mismatch: expected {expected} caps, got {got}")]
    ProfileLengthMismatch { expected: usize, got: usize },

    #[error("invalid input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
