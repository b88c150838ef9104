use thiserror::Error;

/// Errors raised across the library.
///
/// Verdict-style operations (verification, simplicity checks) report
/// failures inside their return value instead; these variants are for
/// violated preconditions and failed constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("no primitive root of unity of order {order} in {field}")]
    NoSuchRoot { field: String, order: u64 },
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid scalar literal {literal:?}: {reason}")]
    BadLiteral { literal: String, reason: String },
    #[error("algebra is not commutative")]
    NotCommutative,
    #[error("no full idempotent decomposition found: {0}")]
    NonSplit(String),
    #[error("size() of the zero subspace is undefined")]
    EmptySubspace,
    #[error("subset search exceeded the cap of {cap} subsets")]
    SearchCapExceeded { cap: u64 },
    #[error("grading mismatch: {0}")]
    GradingMismatch(String),
    #[error("loop ideal decomposition failed: {0}")]
    DecompositionFailure(String),
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("subspace is not proper: {0}")]
    NotProper(String),
    #[error("ideal is already graded")]
    AlreadyGraded,
    #[error("not graded simple: {0}")]
    NotGradedSimple(String),
    #[error("verification failed: {0}")]
    VerificationFailure(String),
    #[error("not a group homomorphism: {0}")]
    NotHomomorphism(String),
    #[error("character does not factor through the quotient: {0}")]
    KernelMismatch(String),
    #[error("invalid witness: {0}")]
    WitnessInvalid(String),
    #[error("algebra is not semisimple: {0}")]
    NotSemisimple(String),
    #[error("no graded projection found: {0}")]
    NoProjectionFound(String),
    #[error("bad characteristic: {0}")]
    BadCharacteristic(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// Variant name, used as the certificate name in reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DivisionByZero",
            Error::NoSuchRoot { .. } => "NoSuchRoot",
            Error::FieldMismatch(_) => "FieldMismatch",
            Error::AmbientMismatch { .. } => "AmbientMismatch",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::BadLiteral { .. } => "BadLiteral",
            Error::NotCommutative => "NotCommutative",
            Error::NonSplit(_) => "NonSplit",
            Error::EmptySubspace => "EmptySubspace",
            Error::SearchCapExceeded { .. } => "SearchCapExceeded",
            Error::GradingMismatch(_) => "GradingMismatch",
            Error::DecompositionFailure(_) => "DecompositionFailure",
            Error::NotAnIdeal => "NotAnIdeal",
            Error::NotProper(_) => "NotProper",
            Error::AlreadyGraded => "AlreadyGraded",
            Error::NotGradedSimple(_) => "NotGradedSimple",
            Error::VerificationFailure(_) => "VerificationFailure",
            Error::NotHomomorphism(_) => "NotHomomorphism",
            Error::KernelMismatch(_) => "KernelMismatch",
            Error::WitnessInvalid(_) => "WitnessInvalid",
            Error::NotSemisimple(_) => "NotSemisimple",
            Error::NoProjectionFound(_) => "NoProjectionFound",
            Error::BadCharacteristic(_) => "BadCharacteristic",
            Error::InvalidInput(_) => "InvalidInput",
        }
    }
}
