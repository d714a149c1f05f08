use thiserror::Error;

/// Errors raised by the Garside machinery, the order layer and the word front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element does not belong to this context")]
    ContextMismatch,
    #[error("unknown atom {0}")]
    UnknownAtom(usize),
    #[error("element is not unmovable")]
    NotUnmovable,
    #[error("element is not Ω-unmovable")]
    NotOmegaUnmovable,
    #[error("element is not in the monoid")]
    NotPositive,
    #[error("the identity has no first or last letter")]
    TrivialElement,
    #[error("atom set {0:?} is not parabolic in this model")]
    NotParabolic(Vec<usize>),
    #[error("the parabolic pair does not generate the monoid")]
    GenerationViolated,
    #[error("element does not lie in the parabolic subgroup")]
    NotInParabolic,
    #[error("trichotomy violated: {0}")]
    TrichotomyViolation(String),
    #[error("invalid Dehornoy structure: {0}")]
    InvalidStructure(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown generator `{0}` for this group")]
    UnknownGenerator(String),
    #[error("handle reduction exceeded {0} steps")]
    StepLimit(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
