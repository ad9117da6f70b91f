use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at token {token:?}: {reason}")]
    Syntax { token: String, reason: &'static str },

    #[error("generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },

    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("unsupported strand count {strands} (expected {min}..={max})")]
    UnsupportedStrands {
        strands: usize,
        min: usize,
        max: usize,
    },

    /// The word does not lie in the pure subgroup.
    #[error("word has nontrivial permutation image {permutation}")]
    NotPure { permutation: String },

    #[error("unknown Schreier generator {0}")]
    UnknownGenerator(String),

    #[error("letter {letter} is not allowed in {context}")]
    ForeignLetter {
        letter: String,
        context: &'static str,
    },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),
}
