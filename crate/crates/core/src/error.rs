use thiserror::Error;

/// Errors raised by the algebra engine and the objects built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("root subset mismatch: {0}")]
    SubsetMismatch(String),

    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),

    #[error("invalid lattice: {0}")]
    InvalidLattice(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("pole at q = 1")]
    PoleAtOne,

    #[error("value does not vanish at q = 1")]
    NonvanishingAtOne,

    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),

    #[error("presentation mismatch: `{0}` vs `{1}`")]
    PresentationMismatch(String, String),

    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),

    #[error("rewriting step budget of {0} exhausted")]
    StepBudgetExhausted(usize),

    #[error("presentation `{0}` carries no grading")]
    Ungraded(String),

    #[error("horizon {horizon} too small (need {needed})")]
    HorizonExceeded { horizon: usize, needed: usize },

    #[error("element is not central")]
    NotCentral,

    #[error("element is not invertible: {0}")]
    NotInvertible(String),

    #[error("element is not homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("antipode is not defined on `{0}`")]
    NoAntipode(String),

    #[error("filtration membership violated: {0}")]
    Membership(String),

    #[error("unsupported root subset: {0}")]
    UnsupportedSubset(String),

    #[error("ungenerated degree configuration: {0}")]
    UngeneratedDegree(String),

    #[error("map is not homogeneous: {0}")]
    MapNotHomogeneous(String),

    #[error("linear system has no solution: {0}")]
    Unsolvable(String),

    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("type error: {0}")]
    Type(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}

impl Error {
    /// Errors that indicate a defect in a shipped table or engine rather than bad user input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::StepBudgetExhausted(_) | Error::Unsolvable(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
