use thiserror::Error;

/// Errors produced by domain validation and mismatched inputs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element ({col},{row}) is outside the shape {shape}")]
    ElementOutsideShape { shape: String, col: u32, row: u32 },
    #[error("invalid shape parameters: {0}")]
    InvalidShape(String),
    #[error("invalid column profile {profile:?} for shape {shape}: {reason}")]
    InvalidProfile {
        shape: String,
        profile: Vec<u32>,
        reason: String,
    },
    #[error("element set is not an order ideal: {0}")]
    NotAnIdeal(String),
    #[error("not a permutation of {expected}: {got:?}")]
    InvalidPermutation { expected: String, got: Vec<i64> },
    #[error("index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("invalid sequence {entries:?}: {reason}")]
    InvalidSequence { entries: Vec<u32>, reason: String },
    #[error("invalid lower bounds {bounds:?}: {reason}")]
    InvalidBounds { bounds: Vec<u32>, reason: String },
    #[error("cell ({row},{col}) out of range for a {height}x{width} board")]
    CellOutOfRange {
        row: usize,
        col: usize,
        height: usize,
        width: usize,
    },
    #[error("invalid snake-map state {entries:?}: {reason}")]
    InvalidCrawlState { entries: Vec<u32>, reason: String },
    #[error("invalid necklace word: {0}")]
    InvalidWord(String),
    #[error("invalid necklace {positions:?} for bead count {m}")]
    InvalidNecklace { positions: Vec<u32>, m: u32 },
    #[error("action {action} does not act on space {space}")]
    SpaceMismatch { action: String, space: String },
    #[error("statistic {stat} is not defined on space {space}")]
    StatSpaceMismatch { stat: String, space: String },
    #[error("unknown statistic `{0}`")]
    UnknownStatistic(String),
    #[error("lifted statistic rejected: {0}")]
    LiftedTailCondition(String),
    #[error("cannot parse `{input}` as {what}: offending token `{token}`")]
    Parse {
        input: String,
        what: String,
        token: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
