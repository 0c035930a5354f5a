use thiserror::Error;

/// Errors raised by the combinatorial operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid signed permutation {0:?}: absolute values must permute 1..n")]
    InvalidPermutation(Vec<i32>),
    #[error("word {0} is not reduced")]
    NotReduced(String),
    #[error("position {index} out of range 1..={max}")]
    OutOfRange { index: usize, max: usize },
    #[error("type A operation received letter 0 in {0}")]
    ZeroLetter(String),
    #[error("invalid transposition ({0}, {1}): need nonzero i < j")]
    InvalidTransposition(i32, i32),
    #[error("wires ({0}, {1}) do not form an inversion")]
    NotAnInversion(i32, i32),
    #[error("length condition fails: l(w t_({0},{1})) != l(w) - 1")]
    LengthCondition(i32, i32),
    #[error("signed permutation {0} is increasing")]
    Increasing(String),
    #[error("invalid strict partition {0:?}")]
    InvalidPartition(Vec<usize>),
    #[error("sequence has repeated values")]
    DuplicateValues,
    #[error("not a permutation of 1..n: {0:?}")]
    NotAPermutation(Vec<u32>),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("cell ({0}, {1}) is not an inner corner")]
    NotInnerCorner(usize, usize),
    #[error("tableau is empty")]
    EmptyTableau,
    #[error("inadmissible peak set {peaks:?} for length {len}")]
    InadmissiblePeakSet { peaks: Vec<usize>, len: usize },
    #[error("invalid interval [{0}, {1}]")]
    InvalidInterval(usize, usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
