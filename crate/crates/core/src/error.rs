use thiserror::Error;

use crate::shapes::Cell;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a partition: {0:?} (parts must be positive and weakly decreasing)")]
    InvalidPartition(Vec<usize>),

    #[error("inner partition {inner} is not contained in outer partition {outer}")]
    NotContained { outer: String, inner: String },

    #[error("cannot parse `{token}`: {reason}")]
    Parse { token: String, reason: String },

    #[error("row {row} holds {got} entries but the shape needs {expected}")]
    RowLength {
        row: usize,
        expected: usize,
        got: usize,
    },

    #[error("tableau entries must be positive")]
    ZeroEntry,

    #[error("leftmost cell of row {row} is not an inside corner")]
    NoInsideCorner { row: usize },

    #[error("cell {cell} is not an outside corner")]
    NotOutsideCorner { cell: Cell },

    #[error("reverse insertion would produce an invalid tableau: {0}")]
    InvalidResult(String),

    #[error("inner strip is empty, so there is no upward path")]
    NoUpwardPath,

    #[error("tableau is not a fixed point of the involution")]
    NotFixedPoint,

    #[error("invalid slide context: {0}")]
    InvalidContext(String),

    #[error("componentwise difference has a negative entry at position {0}")]
    InvalidDifference(usize),

    #[error("monomial expansion is not symmetric: {0}")]
    NotSymmetric(String),
}
