use thiserror::Error;

use crate::text::ParseError;

/// Errors raised by the semantic, splitting and metatheory operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("program is not positive: rule for `{head}` has negated subgoals")]
    NotPositive { head: String },

    #[error("program has {atoms} atoms, above the brute-force cap of {cap}")]
    TooLarge { atoms: usize, cap: usize },

    #[error("invalid splitting sequence: {0}")]
    InvalidSequence(String),

    #[error("program is not order-consistent (negative cycle through {})", .cycle.join(", "))]
    NotOrderConsistent { cycle: Vec<String> },

    #[error("internal decomposition failure: component {layer} is not signed")]
    InternalDecompositionFailure { layer: usize },

    #[error("generator gave up after {rejections} rejected programs")]
    GenerationExhausted { rejections: usize },

    #[error("invalid generator configuration: {0}")]
    InvalidConfig(String),

    #[error("unknown property `{0}`")]
    UnknownProperty(String),

    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
