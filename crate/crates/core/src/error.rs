use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("dimension m = {0} is outside 1..=16")]
    InvalidDimension(usize),

    #[error("blade mask {bits:#b} is not valid for m = {m}")]
    InvalidBlade { bits: u32, m: usize },

    #[error("grade {grade} is out of range for m = {m}")]
    GradeOutOfRange { grade: usize, m: usize },

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("m = {0} is even; the Fueter transform requires odd m")]
    EvenDimension(usize),

    #[error("invalid P_k: {0}")]
    InvalidPk(String),

    #[error("unknown seed `{0}`")]
    UnknownSeed(String),

    #[error("seed `{0}` does not satisfy the Cauchy-Riemann equations")]
    NotHolomorphic(String),

    #[error("product leaves the axial term algebra: {0}")]
    UnsupportedProduct(String),

    #[error("pair is outside the polynomial image: {0}")]
    NotPolynomial(String),

    #[error("degree {degree} exceeds the configured cap {cap}")]
    DegreeCap { degree: u32, cap: u32 },

    #[error("empty grid")]
    EmptyGrid,

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}
