use thiserror::Error;

/// Errors raised by the library. Each variant maps onto one CLI exit class:
/// input problems exit with 2, failed internal verifications with 3.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("group closure exceeded the cap of {cap} elements")]
    SizeLimit { cap: usize },

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("subgroup is not normal: conjugate of {element:?} by generator {generator} leaves it")]
    NotNormal { generator: usize, element: Vec<u32> },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("element has infinite order within cap {cap}")]
    InfiniteOrder { cap: usize },

    #[error("missing action entry for ({q_gen}, {k_gen})")]
    MissingAction { q_gen: String, k_gen: String },

    #[error("no inverse action supplied for {q_gen}^-1 crossing {k_gen}")]
    NonInvertibleAction { q_gen: String, k_gen: String },

    #[error("unknown generator {0}")]
    UnknownGenerator(String),

    #[error("generator {0} has no image")]
    UnmappedGenerator(String),

    #[error("no epimorphism: prime {missing} is absent from the source")]
    NoEpimorphism { missing: u64 },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("no exact integer preimage exists")]
    NoPreimage,

    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
