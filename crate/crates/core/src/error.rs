use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("line {line}: loop edge at vertex {vertex}")]
    Loop { line: usize, vertex: usize },
    #[error("line {line}: vertex {vertex} outside 1..={n}")]
    OutOfRange { line: usize, vertex: usize, n: usize },
    #[error("edge {{{0}, {1}}} is not a valid simple-graph edge")]
    InvalidEdge(usize, usize),
    #[error("whisker of the empty graph is undefined")]
    EmptyWhisker,
    #[error("maximum degree is 0; Kwok's bound needs at least one edge")]
    NoEdges,
    #[error("radicand is negative")]
    NegativeRadicand,
    #[error("invalid family: {0}")]
    Family(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdealError {
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("power 0 would give the unit ideal, which is not represented")]
    ZeroPower,
    #[error("the unit ideal is not represented")]
    UnitIdeal,
    #[error("ideal is not Artinian: no pure power of {0}")]
    NotArtinian(String),
    #[error("duplicate variable name {0}")]
    DuplicateVariable(String),
    #[error("{0}")]
    Invalid(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("zero ideal has no resolution")]
    ZeroIdeal,
    #[error("lcm lattice exceeded the cap of {cap} elements")]
    LatticeCap { cap: usize },
    #[error("order complex exceeded the cap of {cap} faces")]
    ComplexCap { cap: usize },
    #[error("support of size {0} exceeds 64 variables")]
    TooManyVariables(usize),
    #[error("rank mod {p} = {modular} disagrees with rational rank {rational}")]
    FieldDisagreement { p: u64, modular: usize, rational: usize },
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

impl EngineError {
    /// Resource exhaustion rather than a mathematical failure.
    pub fn is_resource(&self) -> bool {
        matches!(
            self,
            EngineError::LatticeCap { .. } | EngineError::ComplexCap { .. } | EngineError::TooManyVariables(_)
        )
    }
}

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error("{graph_id} at s = {s}: {source}")]
    Engine {
        graph_id: String,
        s: u32,
        #[source]
        source: EngineError,
    },
    #[error("check requires a graph with at least one edge")]
    NoEdges,
    #[error("smax must be at least 1")]
    BadSmax,
    #[error("unknown check {0}")]
    UnknownCheck(String),
    #[error("bad corpus spec: {0}")]
    Corpus(String),
}
