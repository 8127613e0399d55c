use thiserror::Error;

/// Everything that can go wrong in the core library.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),

    #[error("invalid family descriptor `{descriptor}`: {reason}")]
    BadFamily { descriptor: String, reason: String },

    #[error("edge list parse error on line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("vertices {0} and {1} lie in different components")]
    Unreachable(usize, usize),

    #[error("more than {limit} geodesics between {u} and {v}")]
    GeodesicLimit { u: usize, v: usize, limit: usize },

    #[error("vertex sets must be nonempty and disjoint")]
    BadParallelSides,

    #[error("graph must be connected")]
    Disconnected,

    #[error("{0}")]
    Domain(String),

    #[error("graph has {n} vertices, above the configured cutoff of {cutoff}")]
    CutoffExceeded { n: usize, cutoff: usize },

    #[error("search budget exhausted after {nodes} nodes (best value so far {best})")]
    BudgetExhausted { nodes: u64, best: usize },

    #[error("cover part {0} is not an isometric subgraph")]
    NotIsometric(usize),

    #[error("cover does not contain vertex {0}")]
    IncompleteCover(usize),

    #[error("parts {0} and {1} overlap")]
    Overlap(usize, usize),

    #[error("parts {i} and {j} are at distance {dist:?}, below the required {required}")]
    TooClose { i: usize, j: usize, dist: Option<u32>, required: u32 },

    #[error("got {got} part values for {expected} parts")]
    PartValueCount { expected: usize, got: usize },

    #[error("lattice monotonicity violated at k={k}, d={d}")]
    Monotonicity { k: usize, d: u32 },

    #[error("graph is not a grid-family graph")]
    NotGrid,
}

pub type Result<T> = std::result::Result<T, Error>;
