use thiserror::Error;

use crate::dsl::EvalError;
use crate::space::Dims;
use crate::Point;

/// Errors raised while building or drawing into a virtual space.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid space dimensions {dims:?}: every dimension must be at least 1 and the space at most {max} cells", max = crate::space::MAX_CELLS)]
    InvalidDimension { dims: [usize; 3] },

    #[error("point {point} is out of bounds for a {dims} space")]
    OutOfBounds { point: Point, dims: Dims },

    #[error("empty box: lower corner {lo} exceeds upper corner {hi}")]
    EmptyBox { lo: Point, hi: Point },

    #[error("invalid brick: {0}")]
    InvalidBrick(&'static str),

    #[error("shape mismatch: {left} vs {right}")]
    ShapeMismatch { left: Dims, right: Dims },

    #[error(transparent)]
    Eval(#[from] EvalError),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("turtle symbol {index} (`{symbol}`) draws out of bounds at {point} in a {dims} space")]
    TurtleOutOfBounds {
        index: usize,
        symbol: char,
        point: Point,
        dims: Dims,
    },

    #[error("turtle symbol {index} (`]`) pops an empty state stack")]
    StackUnderflow { index: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
