use thiserror::Error;

/// Errors produced while parsing input or running a bounded computation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("point {point} is outside 1..={n}")]
    PointOutOfRange { point: usize, n: usize },
    #[error("malformed cycle notation {text:?}: {reason}")]
    MalformedCycle { text: String, reason: String },
    #[error("point {point} repeated within one cycle")]
    RepeatedPoint { point: usize },
    #[error("generators have mixed degrees {first} and {other}")]
    MixedDegrees { first: usize, other: usize },
    #[error("degree {n} exceeds the configured cap {cap}")]
    DegreeTooLarge { n: usize, cap: usize },
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("malformed word {text:?}: {reason}")]
    MalformedWord { text: String, reason: String },
    #[error("empty word where a nonempty word is required")]
    EmptyWord,
    #[error("{what} exceeded cap of {cap}")]
    CapExceeded { what: &'static str, cap: usize },
    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
