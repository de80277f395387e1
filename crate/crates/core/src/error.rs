use thiserror::Error;

/// Errors raised while building functions, sequences and pairs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet size q={0} must be even and at least 2")]
    InvalidAlphabet(u32),

    #[error("variable count m={m} out of range 1..={max}")]
    InvalidVariableCount { m: usize, max: usize },

    #[error("variable index x{index} out of range 1..={m}")]
    VariableOutOfRange { index: usize, m: usize },

    #[error("assignment has {got} bits, expected {expected}")]
    AssignmentLength { got: usize, expected: usize },

    #[error("restriction: {0}")]
    InvalidRestriction(String),

    #[error("permutation: {0}")]
    InvalidPermutation(String),

    #[error("{0}")]
    InvalidParams(String),

    /// Ordering constraint `pi(m) > pi(alpha)` for every restricted position.
    #[error("order constraint violated: pi({m}) = {last} must exceed pi({alpha}) = {restricted}")]
    OrderConstraint {
        m: usize,
        last: usize,
        alpha: usize,
        restricted: usize,
    },

    /// Mate construction needs `pi(m-1) > pi(alpha)` for every restricted position.
    #[error("mate constraint violated: pi({m_minus_one}) = {second_last} must exceed pi({alpha}) = {restricted}")]
    MateOrderConstraint {
        m_minus_one: usize,
        second_last: usize,
        alpha: usize,
        restricted: usize,
    },

    #[error("mate construction needs t <= m-2, got t={t}, m={m}")]
    MateRestrictionTooLarge { t: usize, m: usize },

    #[error(
        "truncation bounds ({k0}, {k1}) do not land on non-zero entries of a length-{len} sequence"
    )]
    BoundaryZero { k0: usize, k1: usize, len: usize },

    #[error("sequence length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("alphabet mismatch: q={0} vs q={1}")]
    AlphabetMismatch(u32, u32),

    #[error("shift {shift} outside the range |u| < {len}")]
    ShiftOutOfRange { shift: i64, len: usize },

    #[error("exponent {exponent} not in Z_{q}")]
    ExponentOutOfRange { exponent: u32, q: u32 },

    #[error("empty sequence")]
    EmptySequence,

    #[error("malformed input: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
