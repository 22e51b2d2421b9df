use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("vertex {vertex} out of range for graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("label 0 on edge {{{0}, {1}}}; labels must be positive")]
    ZeroLabel(usize, usize),

    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix entry ({0}, {1}) is negative")]
    NegativeEntry(usize, usize),
    #[error("matrix is not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),
    #[error("matrix has nonzero diagonal entry at {0}")]
    NonzeroDiagonal(usize),
    #[error("matrix entry ({0}, {1}) exceeds the u32 range")]
    EntryTooLarge(usize, usize),

    #[error("matrix order {0} is below the minimum of 4")]
    OrderTooSmall(usize),
    #[error("row {row} out of range for order {order}")]
    RowOutOfRange { row: usize, order: usize },
    #[error("unknown fixed matrix `{0}`")]
    UnknownMatrix(String),
    #[error("direct sum of an empty list")]
    EmptyDirectSum,
    #[error("block orders {orders:?} do not add up to matrix order {order}")]
    BlockOrders { orders: Vec<usize>, order: usize },
    #[error("injection target ({0}, {1}) already holds a label")]
    InjectionOverwrite(usize, usize),
    #[error("invalid injection: {0}")]
    InvalidInjection(String),

    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("edge {{{0}, {1}}} is an isolated edge")]
    IsolatedEdge(usize, usize),
    #[error("graph is not connected")]
    Disconnected,
    #[error("strength {0} is not supported by the exact solver (max 22)")]
    StrengthTooLarge(u32),
    #[error("search budget of {budget} nodes exhausted")]
    BudgetExhausted { budget: u64 },

    #[error("clique cover must have {expected} parts, got {got}")]
    CoverParts { expected: String, got: usize },
    #[error("invalid clique cover: {0}")]
    InvalidCover(String),
    #[error("clique cover number exceeds 3; no construction available")]
    Unsupported,
    #[error("construction `{case}` failed verification; vertices {u} and {v} collide")]
    ConstructionFailed { case: String, u: usize, v: usize },
    #[error("fallback search found no labeling with strength <= {0}")]
    FallbackFailed(u32),
    #[error("internal error: {0}")]
    Internal(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
