use thiserror::Error;

/// Errors raised by the polynomial engine and its input layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown index label `{0}`")]
    InvalidIndex(String),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("unknown element `{0}`")]
    UnknownElement(String),

    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),

    #[error("principal pivot transform undefined: submatrix on {{{0}}} is singular")]
    PivotNotDefined(String),

    #[error("pivot undefined: `{0}` and `{1}` are not adjacent")]
    NotAnEdge(String, String),

    #[error("pivot on looped endpoint `{0}` is not supported")]
    LoopedPivot(String),

    #[error("cannot read input: {0}")]
    Io(String),

    #[error("unsupported input: {0}")]
    UnsupportedInput(String),

    #[error("size cap exceeded: {what} is {actual}, cap is {cap}")]
    SizeCap {
        what: &'static str,
        actual: usize,
        cap: usize,
    },

    #[error("resource limit reached: {0}")]
    ResourceLimit(String),

    #[error("not a 4-regular graph: vertex {vertex} has degree {degree}")]
    NotFourRegular { vertex: usize, degree: usize },

    #[error("not a two-in two-out digraph: vertex {vertex} has indegree {indegree} and outdegree {outdegree}")]
    NotTwoInTwoOut {
        vertex: usize,
        indegree: usize,
        outdegree: usize,
    },

    #[error("host graph is disconnected")]
    Disconnected,

    #[error("malformed circuit: {0}")]
    MalformedCircuit(String),

    #[error("vertices `{0}` and `{1}` are not interlaced")]
    NotInterlaced(String, String),

    #[error("circuit and transition system belong to different hosts")]
    HostMismatch,

    #[error("Klein vector has a zero entry at `{0}`")]
    ZeroEntry(String),

    #[error("graphic presentation requires A_v != B_v, violated at `{0}`")]
    EqualPresentation(String),

    #[error("not an isotropic system: {0}")]
    NotIsotropic(String),

    #[error("invalid transition labelling at vertex {0}")]
    InvalidLabelling(usize),

    #[error("plane graph invalid: {0}")]
    InvalidEmbedding(String),

    #[error("plane graph has no edges")]
    Edgeless,

    #[error("empty feasible family")]
    EmptyFamily,

    #[error("distance undefined: loop complement by {{{0}}} has no feasible sets")]
    UndefinedDistance(String),

    #[error("not a matroid: {0}")]
    NotAMatroid(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
