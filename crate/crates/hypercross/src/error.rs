use thiserror::Error;

/// Errors produced by construction and arithmetic operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("level mismatch: left operand has level {left}, right has level {right}")]
    LevelMismatch { left: usize, right: usize },

    #[error("level {level} out of range: supported levels are 0..={max}")]
    LevelOutOfRange { level: usize, max: usize },

    #[error("coefficient count {got} does not match 2^level = {expected}")]
    CoefficientCount { expected: usize, got: usize },

    #[error("basis index {index} out of range for dimension {dim}")]
    BasisIndex { index: usize, dim: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("unsupported dimension {got}: supported dimensions are {supported:?}")]
    UnsupportedDimension {
        got: usize,
        supported: &'static [usize],
    },

    #[error("table built for level {table}, operands have level {operand}")]
    TableLevelMismatch { table: usize, operand: usize },

    #[error("rotation axis must be nonzero")]
    ZeroAxis,

    #[error("search size {got} out of supported range {min}..={max}")]
    SearchSizeOutOfRange { got: usize, min: usize, max: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
