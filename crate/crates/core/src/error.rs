use thiserror::Error;

use crate::model::Triple;

/// Everything that can go wrong while building, reading or analysing a system.
///
/// Each message starts with the variant name so that command-line users can
/// match on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("PointOutOfRange: point {point} is not below the order {n}")]
    PointOutOfRange { point: u32, n: u32 },
    #[error("RepeatedPoint: block {0:?} does not have three distinct points")]
    RepeatedPoint([u32; 3]),
    #[error("PairUncovered: pair {{{0}, {1}}} lies in no block")]
    PairUncovered(u32, u32),
    #[error("PairDoubled: pair {{{0}, {1}}} lies in more than one block")]
    PairDoubled(u32, u32),
    #[error("WrongBlockCount: order {n} needs {expected} blocks, got {found}")]
    WrongBlockCount { n: u32, expected: String, found: usize },
    #[error("OrderTooLarge: order {0} exceeds the supported maximum of 2^20")]
    OrderTooLarge(u32),
    #[error("NotAPermutation: {0}")]
    NotAPermutation(String),

    #[error("KTooSmall: projective dimension must be at least 2, got {0}")]
    KTooSmall(u32),
    #[error("MTooSmall: affine dimension must be at least 1, got {0}")]
    MTooSmall(u32),
    #[error("BadOrderModSix: order {0} has the wrong residue mod 6 for this construction")]
    BadOrderModSix(u32),
    #[error("UnsupportedField: {0}")]
    UnsupportedField(String),
    #[error("ZeroInC: the multiplier set contains zero")]
    ZeroInC,
    #[error("WrongCSize: the multiplier set needs {expected} elements, got {found}")]
    WrongCSize { expected: u32, found: usize },
    #[error("CosetCollision: elements {0} and {1} have discrete logs congruent mod t")]
    CosetCollision(u32, u32),
    #[error("ElementOutOfRange: {0} is not an element of the field of order {1}")]
    ElementOutOfRange(u32, u32),
    #[error("SDivisibleByT: log of 2 is {s}, divisible by t = {t}")]
    SDivisibleByT { s: u32, t: u32 },
    #[error("ZeroTarget: zero has no discrete logarithm")]
    ZeroTarget,

    #[error("BlockNotInSystem: {0} is not a block of the system")]
    BlockNotInSystem(Triple),
    #[error("NotANettoSystem: the system does not match the given multiplier construction")]
    NotANettoSystem,
    #[error("TooLargeForOracle: {what} = {size} exceeds the limit {limit}")]
    TooLargeForOracle { what: &'static str, size: u64, limit: u64 },

    #[error("Parse: line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("UnsupportedOrder: exhaustive generation supports orders 7, 9 and 13, not {0}")]
    UnsupportedOrder(u32),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
