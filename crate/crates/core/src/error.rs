use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot invert multi-term scalar {0}")]
    MultiTermInverse(String),
    #[error("malformed scalar literal {0:?}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("block shape requires m >= 1 and n >= 1, got ({m}, {n})")]
    InvalidShape { m: usize, n: usize },
    #[error("block shape ({0}, {0}) has equal dimensions; H_0 is undefined")]
    EqualDimensions(usize),
    #[error("operands have different shapes")]
    ShapeMismatch,
    #[error("operand is not homogeneous")]
    InhomogeneousOperand,
    #[error("declared parity disagrees with entry support")]
    ParityMismatch,
    #[error("dual pairing failed at ({i}, {j}): got {value}")]
    DualityValidationFailed { i: usize, j: usize, value: String },
    #[error("element does not lie in the double: supertraces {0} and {1}")]
    NotInDouble(String, String),
    #[error("truncation degrees differ: {0} vs {1}")]
    TruncationMismatch(u8, u8),
    #[error("tensor rank {tensor} does not match {ops} operators")]
    RankMismatch { tensor: usize, ops: usize },
    #[error("polynomial has nonzero counit {0}")]
    NotInKernel(String),
    #[error("configuration error: {0}")]
    Config(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
