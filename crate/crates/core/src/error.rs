use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("edge ({u}, {v}) closes a cycle")]
    Cycle { u: usize, v: usize },

    #[error("edge ({u}, {v}) appears more than once")]
    DuplicateEdge { u: usize, v: usize },

    #[error("edge ({u}, {v}) has non-positive weight {w}")]
    NonPositiveWeight { u: usize, v: usize, w: i64 },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: i64, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("vertex {vertex} is not pendant (degree {degree})")]
    NotPendant { vertex: usize, degree: usize },

    #[error("invalid parameters: {0}")]
    Parameter(String),

    #[error("size {size} exceeds the bound {bound}")]
    SizeBound { size: usize, bound: usize },

    #[error("cannot split {total} into {parts} positive parts")]
    Infeasible { total: u64, parts: usize },

    #[error("estimated {estimate} candidates exceeds the budget of {budget}")]
    BudgetExceeded { estimate: u128, budget: u128 },

    #[error("cannot compare graphs of different orders ({0} vs {1})")]
    OrderMismatch(usize, usize),

    #[error("eigensolver failed to converge after {sweeps} sweeps (off-diagonal norm {residual:e})")]
    Convergence { sweeps: usize, residual: f64 },

    #[error("quadrature did not reach tolerance: {0}")]
    Quadrature(String),

    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),

    #[error("monotonicity violated: {0}")]
    MonotonicityViolation(String),

    #[error("unresolved energy tie between {0} and {1}; needs manual review")]
    UnresolvedTie(String, String),

    #[error("class is empty: {0}")]
    EmptyClass(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("malformed graph json: {0}")]
    Json(String),

    #[error("i/o: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
