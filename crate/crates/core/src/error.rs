use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("malformed graph document: {0}")]
    Document(String),

    #[error("loop edge at vertex `{0}`")]
    LoopEdge(String),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("duplicate vertex `{0}` in vertex list")]
    DuplicateVertex(String),

    #[error("not a cycle: {0}")]
    NotACycle(String),

    #[error("cycle has a chord between `{0}` and `{1}`")]
    Chord(String, String),

    #[error("cycle length {0} is below the minimum of 4")]
    CycleTooShort(usize),

    #[error("adjacent cycle vertices `{0}` and `{1}` both have degree greater than 2")]
    HypothesisViolated(String, String),

    #[error("generator {0} could come from either endpoint of its cycle edge")]
    AmbiguousAssignment(String),

    #[error("generator {0} does not fit the A/B/C shapes")]
    UnclassifiedGenerator(String),

    #[error("the complement ideal is zero; a splitting needs two nonzero ideals")]
    ZeroComplement,

    #[error("no pair of generators has lcm equal to {0}")]
    NoCandidates(String),

    #[error("monomial `{0}` is not square-free")]
    NotSquareFree(String),

    #[error("malformed monomial `{0}`")]
    BadMonomial(String),

    #[error("{what}: {actual} exceeds the limit of {limit}")]
    CapExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// True for refusals caused by a size limit rather than bad input.
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}
