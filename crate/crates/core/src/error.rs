use thiserror::Error;

use crate::shadow::Shadow;

/// Errors raised by lattice construction and the operations built on it.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} vertices exceed the capacity of {cap}", cap = crate::shadow::MAX_VERTICES)]
    Capacity(usize),

    #[error("a lattice needs at least one vertex")]
    Empty,

    #[error("face {shadow:?} references a vertex outside 0..{n}")]
    OutOfRange { shadow: Shadow, n: usize },

    #[error("not a lattice: {0}")]
    NotALattice(String),

    #[error("not ranked: {lower:?} is covered by {upper:?} but their longest-chain ranks are {lower_rank} and {upper_rank}")]
    NotRanked {
        lower: Shadow,
        upper: Shadow,
        lower_rank: u32,
        upper_rank: u32,
    },

    #[error("{0:?} is not a face of the lattice")]
    NotAFace(Shadow),

    #[error("faces {0:?} and {1:?} are not comparable")]
    NotComparable(Shadow, Shadow),

    #[error("the interval [{0:?}, {0:?}] has a single element")]
    DegenerateInterval(Shadow),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("the lattice is not proper: class {0:?} is not a face")]
    NotProper(Shadow),

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("infeasible size: {0}")]
    InfeasibleSize(String),

    #[error("diagram does not produce a cellular pseudomanifold: {0}")]
    DegenerateDiagram(String),

    #[error("shift blocked: rays {blocking:?} lie in the arc between the antipodes")]
    BlockedShift { blocking: Vec<u32> },

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
}

pub type Result<T> = std::result::Result<T, Error>;
