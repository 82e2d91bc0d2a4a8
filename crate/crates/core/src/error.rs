use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at the binding point: {0}")]
    DenominatorVanishes(String),
    #[error("linear system is inconsistent")]
    Inconsistent,
    #[error("operand is not homogeneous")]
    MixedParityInput,
    #[error("map is not an automorphism: {0}")]
    NotAnAutomorphism(String),
    #[error("representations are over different algebras")]
    AlgebraMismatch,
    #[error("product is not left-symmetric: {0}")]
    NotLeftSymmetric(String),
    #[error("base point has a nonzero odd component")]
    OddBasePoint,
    #[error("cocycle map is not bijective (rank {rank} < {dim})")]
    NotBijective { rank: usize, dim: usize },
    #[error("excluded parameter value: {0}")]
    ExcludedParameter(String),
    #[error("weight {0} is typical")]
    TypicalWeight(String),
    #[error("certification failed: {0}")]
    CertificationFailed(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("json: {0}")]
    Json(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
