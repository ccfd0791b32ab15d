use thiserror::Error;

/// Errors raised by the engine. Messages name the precondition that failed.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),

    #[error("parameter overflow: {0}")]
    ParameterOverflow(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid parameters: {0}")]
    Domain(String),

    #[error("pattern has {pattern} vertices but the host K_n has only {host}")]
    PatternTooLarge { pattern: usize, host: usize },

    #[error("pattern has isolated vertex {0}; copies are identified by their edges")]
    IsolatedVertex(usize),

    #[error("malformed colored copy: {0}")]
    MalformedCopy(String),

    #[error("not a permutation of the vertex set: {0}")]
    NotPermutation(String),

    #[error("graph order {order} exceeds the exact-solver cap {cap} and no constructive path applies")]
    OrderCap { order: usize, cap: usize },

    #[error("copy universe too large: more than {0} injective maps")]
    CopyUniverseTooLarge(u64),

    #[error("no witness present")]
    NoWitness,

    #[error("witness failed verification: {0}")]
    WitnessRejected(String),

    #[error("registry: {0}")]
    Registry(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
