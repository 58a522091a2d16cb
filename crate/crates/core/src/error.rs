use thiserror::Error;

use crate::arrays::Violation;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("entries must be positive integers")]
    ZeroEntry,
    #[error("multiset containment violated: {0} has higher multiplicity in the subtrahend")]
    ContainmentViolation(String),
    #[error("minus part of a formal difference repeats the entry {0}")]
    MinusNotSet(u32),
    #[error("P and Q have different shapes")]
    ShapeMismatch,
    #[error("bitableau is not semistandard")]
    NotSemistandard,
    #[error("bitableau is not skew-symmetric")]
    NotSkewSymmetric,
    #[error("bitableau is vanishing")]
    Vanishing,
    #[error("bitableau is not a negative skew-symmetric bitableau")]
    NotNegativeSkewSymmetric,
    #[error("bounds must be a negative T and a positive W with repetition-free projections")]
    BadBounds,
    #[error("array rows have different lengths")]
    LengthMismatch,
    #[error("invalid skew pair: {}", join(.0))]
    InvalidPair(Vec<Violation>),
    #[error("column {0} has a_k = b_k")]
    VanishingColumn(usize),
    #[error("pair is not negative")]
    NotNegative,
    #[error("bounded step needs a < b, d < c, a < d, b < c (got a={a}, b={b}, c={c}, d={d})")]
    BoundViolation { a: u32, b: u32, c: u32, d: u32 },
    #[error("insertion path does not fit the tableau shape")]
    PathShapeMismatch,
    #[error("bitableau is empty")]
    EmptyBitableau,
    #[error("reverse step failed: {0}")]
    ReverseFailure(String),
    #[error("elements live in different dimensions")]
    DimensionMismatch,
    #[error("{0:?} is not in I({1})")]
    NotInId(Vec<u32>, u32),
    #[error("({0},{1}) is not a root of the grid")]
    NotARoot(u32, u32),
    #[error("chain part is empty")]
    EmptyChain,
    #[error("chain part mixes negative and positive roots")]
    MixedSigns,
    #[error("expected alpha <= beta <= gamma")]
    BoundsNotComparable,
    #[error("assertion failed: {0}")]
    Assertion(String),
}

fn join(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}
