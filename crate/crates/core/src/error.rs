use thiserror::Error;

/// Errors raised by the tropical primitives, the cone updates, the oracles and the main loop.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("undefined difference of two equal infinities ({0} - {0})")]
    SameSignInfinity(&'static str),

    #[error("undefined sum of opposite infinities")]
    OppositeInfinities,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("tropical scaling needs a finite scalar")]
    InfiniteScalar,

    #[error("cannot normalize a point whose 0th coordinate is infinite")]
    InfiniteLeadingCoordinate,

    #[error("dimension must be at least 1")]
    ZeroDimension,

    #[error("expected a point with finite coordinates, found {0}")]
    NonFinitePoint(String),

    #[error("malformed apex {0}")]
    MalformedApex(String),

    #[error("malformed generator {0}")]
    MalformedGenerator(String),

    #[error("objective index {index} out of range 1..={dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("hybrid scalarization infeasible: no outcome lies below {0}")]
    InfeasibleHybrid(String),

    #[error("zero ideal has no irreducible decomposition here")]
    ZeroIdeal,

    #[error("negative exponent {0} in monomial generator")]
    NegativeExponent(String),

    #[error("iteration cap of {cap} reached before the apex set stabilised")]
    IterationCap { cap: u64 },

    #[error("invalid knapsack instance: {0}")]
    InvalidKnapsack(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("nondominated set must be nonempty")]
    EmptyNondominatedSet,
}

pub type Result<T> = std::result::Result<T, Error>;
