use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at q^(1/2) = 1")]
    DenominatorVanishesAtOne,
    #[error("letter {letter} outside 1..={n}")]
    LetterOutOfRange { letter: usize, n: usize },
    #[error("braiding matrix must be square with nonzero entries: {0}")]
    InvalidBraiding(String),
    #[error("generator {index} needs at least {needed} strands, element has degree {degree}")]
    DegreeTooSmall { index: usize, needed: usize, degree: usize },
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("unknown operator name {0:?}")]
    UnknownName(String),
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("not a subspace: {0}")]
    NotSubspace(String),
    #[error("braiding entries must be pure powers of q^(1/2)")]
    NonMonomialBraiding,
    #[error("invalid generalized Cartan matrix: {0}")]
    InvalidCartan(String),
    #[error("coefficient {0} has a pole at q^(1/2) = 1")]
    NotInA1(String),
    #[error("braiding matrix is not symmetric")]
    NotSymmetric,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("input error: {0}")]
    Input(String),
    #[error("verification failed: {0}")]
    Verification(String),
}
