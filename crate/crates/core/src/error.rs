use thiserror::Error;

/// Errors produced by parsing, meander construction, winding, and statistics.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition `{input}`: {reason}")]
    InvalidPartition { input: String, reason: String },

    #[error("invalid composition `{input}`: {reason}")]
    InvalidComposition { input: String, reason: String },

    #[error("invalid seaweed type `{input}`: {side} side: {reason}")]
    InvalidSeaweedSide {
        input: String,
        side: Side,
        reason: String,
    },

    #[error("invalid seaweed type `{input}`: {reason}")]
    InvalidSeaweed { input: String, reason: String },

    #[error("weight mismatch: top has weight {top}, bottom has weight {bottom}")]
    WeightMismatch { top: u64, bottom: u64 },

    #[error("the empty seaweed type has no index")]
    EmptyType,

    #[error("the empty partition has no index statistic")]
    EmptyPartition,

    #[error("three-part shape `{a}|{b}/{c}|..` needs 0 < c < a+b")]
    InvalidThreePartShape { a: u32, b: u32, c: u32 },

    #[error("winding did not terminate within {cap} steps from `{start}`")]
    StepCapExceeded { start: String, cap: usize },

    #[error("invalid winding trace at line {line}: {reason}")]
    InvalidTrace { line: usize, reason: String },

    #[error("c^{i}_n is not constant on n in [{from}, {to}]: saw {values:?}")]
    NotStabilized {
        i: u32,
        from: u32,
        to: u32,
        values: Vec<u64>,
    },

    #[error("series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// Which half of a seaweed type a parse error refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Top,
    Bottom,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Side::Top => f.write_str("top"),
            Side::Bottom => f.write_str("bottom"),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
