use thiserror::Error;

use crate::root_datum::{Coweight, RootChar};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cannot parse group descriptor `{0}` (expected GL<n> or <TYPE><rank>)")]
    BadDescriptor(String),
    #[error("unknown root system type `{0}`")]
    UnknownType(String),
    #[error("rank {rank} is out of range for type {kind}")]
    RankOutOfRange { kind: String, rank: usize },
    #[error("cannot parse coweight `{input}`: {reason}")]
    BadCoweight { input: String, reason: String },
    #[error("expected a vector of length {expected}, got {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("coweight {0} is not dominant")]
    NotDominant(Coweight),
    #[error("{mu} is not below {lambda} in the dominance order")]
    NotBelow { mu: Coweight, lambda: Coweight },
    #[error("coweight {0} is not minuscule")]
    NotMinuscule(Coweight),
    #[error("{mu} is not in the Weyl orbit of {lambda}")]
    MuNotInOrbit { mu: Coweight, lambda: Coweight },
    #[error("mu-condition fails for {mu}: root {root} pairs to {pairing}")]
    MuConditionFailed {
        mu: Coweight,
        root: RootChar,
        pairing: i64,
    },
    #[error("term h^{hbar} e^{weight} has zero weight for the chosen cocharacter")]
    ZeroWeightTerm { hbar: i64, weight: RootChar },
    #[error("tuple is not a torus fixed point: {0}")]
    TupleNotFixedPoint(String),
    #[error("malformed subset: {0}")]
    MalformedSubset(String),
    #[error("weight {0} is not in the root lattice")]
    NotInRootLattice(RootChar),
    #[error("convolution datum needs at least one factor")]
    EmptyConvolution,
    #[error("closed-form offset must be 0 or -1, got {0}")]
    BadOffset(i64),
    #[error("invalid character JSON: {0}")]
    BadJson(String),
}
