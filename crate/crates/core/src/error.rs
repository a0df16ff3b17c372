use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,

    #[error("malformed {what} at position {position}: {reason}")]
    Parse {
        what: &'static str,
        position: usize,
        reason: String,
    },

    #[error("letter {0:?} is not in the alphabet")]
    LetterOutsideAlphabet(char),

    #[error("letter {0:?} is outside the morphism domain")]
    OutsideDomain(char),

    #[error("erasing morphism: image of {0:?} is empty")]
    ErasingMorphism(char),

    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),

    #[error("not a code: {0}")]
    NotACode(String),

    #[error("{0} is out of range")]
    OutOfRange(String),

    #[error("constraint violated: {0}")]
    Constraint(String),

    #[error("no unused letter left for {0}")]
    AlphabetExhausted(String),

    #[error("generator ended after {0} letters")]
    GeneratorExhausted(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
