use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("t-arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },

    #[error("series is not a unit (constant coefficient {constant})")]
    NotAUnit { constant: String },

    #[error("numerator has x-order {numerator} but the denominator has x-order {denominator}")]
    NotDivisible {
        numerator: usize,
        denominator: usize,
    },

    #[error("division by a series that vanishes to the truncation order")]
    DivisionByZero,

    #[error("no power-series square root: constant coefficient is {constant}, expected 1")]
    NoSeriesRoot { constant: String },

    #[error("coefficient x^{index} requested but the series is truncated at order {order}")]
    OutOfRange { index: usize, order: usize },

    #[error("t-assignment has {got} values, expected {expected}")]
    AssignmentArity { expected: usize, got: usize },

    #[error("letter {letter:?} maps to a series with nonzero constant term")]
    NonAdmissibleHomomorphism { letter: String },

    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("invalid pattern set: {0}")]
    InvalidPattern(String),

    #[error("invalid marked word: {0}")]
    InvalidMarkedWord(String),

    #[error("enumeration needs {needed} items, budget is {budget}")]
    EnumerationTooLarge { needed: u128, budget: u128 },

    #[error("walk budget {budget} exhausted after completing depth {depth}")]
    WalkBudget { budget: usize, depth: usize },

    #[error("matrix entry ({row},{col}) has a nonzero constant term")]
    NotLocallyNilpotent { row: usize, col: usize },

    #[error("invalid network: {0}")]
    InvalidNetwork(String),

    #[error("no weight for letter {letter:?} on arc ({from},{to})")]
    MissingWeight {
        letter: String,
        from: usize,
        to: usize,
    },

    #[error("weights leaving vertex {vertex} sum to {sum}, not 1")]
    NotStochastic { vertex: usize, sum: String },

    #[error("continued fraction level {level}: {reason}")]
    ContinuedFraction { level: usize, reason: String },

    #[error("wrong branch of the quadratic: {reason}")]
    WrongBranch { reason: String },

    #[error("{0}")]
    Parse(String),
}
