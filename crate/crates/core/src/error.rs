use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at the given assignment")]
    DenominatorVanishes,
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("element is not homogeneous")]
    NotHomogeneous,
    #[error("window too small: need radius {needed}, table has {have}")]
    WindowTooSmall { needed: i64, have: i64 },
    #[error("degree mismatch between tables")]
    DegreeMismatch,
    #[error("parity mismatch between tables")]
    ParityMismatch,
    #[error("table is not a derivation")]
    NotDerivation,
    #[error("classification reconstruction differs from the input table")]
    ClassificationMismatch,
    #[error("even degree-0 table does not kill the central element")]
    CentralNotKilled,
    #[error("even inner recipe requires a gamma element with nonzero image")]
    ZeroGammaForEvenInner,
    #[error("multiplicative homomorphism values must be nonzero")]
    ZeroHomValue,
    #[error("no table entry for symbol {0}")]
    MissingEntry(String),
}

pub type Result<T> = std::result::Result<T, Error>;
