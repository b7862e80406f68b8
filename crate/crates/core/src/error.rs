use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while building, analysing or transforming
/// seed wavelets.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("seed sequence needs at least 2 values, got {len}")]
    TooShort { len: usize },

    #[error("seed value at index {index} is not finite ({value})")]
    NonFiniteValue { index: usize, value: f64 },

    #[error("sampling period must be finite and > 0, got {0}")]
    InvalidDelta(f64),

    #[error("time origin must be finite, got {0}")]
    InvalidOrigin(f64),

    #[error("operation requires a centered seed (odd length, t0 = -l*delta)")]
    NotCentered,

    #[error("random seed length must be odd and >= 3, got {0}")]
    InvalidLength(usize),

    #[error("variance must be finite and > 0, got {0}")]
    InvalidVariance(f64),

    #[error("seed is not admissible: sum of values is {sum:e} (tolerance {tolerance:e})")]
    NotAdmissible { sum: f64, tolerance: f64 },

    #[error("degenerate input: {0}")]
    Degenerate(&'static str),

    #[error("argument `{name}` is not finite ({value})")]
    NonFiniteArgument { name: &'static str, value: f64 },

    #[error("moment order {order} outside supported range 0..={max}")]
    OrderOutOfRange { order: usize, max: usize },

    #[error("moment matrix needs l >= 1 and 1 <= p <= 2l+1, got l = {l}, p = {p}")]
    MatrixBounds { l: usize, p: usize },

    #[error("invalid construction parameters: {0}")]
    Parity(String),

    #[error("wing has length {got}, expected (n - p)/2 = {expected}")]
    WingLength { got: usize, expected: usize },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix is singular to working precision (pivot {pivot:e} at column {column})")]
    Singular { pivot: f64, column: usize },

    #[error("quadrature did not converge: estimate {estimate} with error {error:e}")]
    NonConvergence { estimate: f64, error: f64 },

    #[error("invalid quadrature configuration: {0}")]
    QuadratureConfig(String),

    #[error("invalid integration range [{a}, {b}]")]
    InvalidRange { a: f64, b: f64 },

    #[error("unsupported finite-difference order {0} (supported: 1..=6)")]
    UnsupportedOrder(usize),

    #[error("step must be finite and > 0, got {0}")]
    InvalidStep(f64),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("scale must be finite and > 0, got {0}")]
    InvalidScale(f64),

    #[error("empty signal")]
    EmptySignal,
}
