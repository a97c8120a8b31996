use thiserror::Error;

/// Errors raised by instance handling and the solvers.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("graph is not connected ({components} components)")]
    Disconnected { components: usize },

    #[error("duplicate edge between vertices {0} and {1}")]
    DuplicateEdge(usize, usize),

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate quadratic pair ({0}, {1})")]
    DuplicatePair(usize, usize),

    #[error("quadratic pair ({0}, {1}) does not name two distinct valid edges")]
    InvalidPair(usize, usize),

    #[error("rough offsets violate a3 <= a1 <= a2 <= a4: ({a1}, {a2}, {a3}, {a4})")]
    OffsetOrder { a1: f64, a2: f64, a3: f64, a4: f64 },

    #[error("triangular fuzzy variable violates u <= v <= w: ({u}, {v}, {w})")]
    FuzzyOrder { u: f64, v: f64, w: f64 },

    #[error("rough interval violates up1 <= lo1 <= lo2 <= up2: [{lo1}, {lo2}][{up1}, {up2}]")]
    RoughOrder {
        lo1: f64,
        lo2: f64,
        up1: f64,
        up2: f64,
    },

    #[error("negative coefficient {0} in affine fuzzy sum")]
    NegativeCoefficient(f64),

    #[error("confidence level {name} = {value} is outside [0, 1]")]
    InvalidLevel { name: &'static str, value: f64 },

    #[error("cannot build a simple connected graph with {vertices} vertices and {edges} edges")]
    InfeasibleSize { vertices: usize, edges: usize },

    #[error("genotype has {got} bits but the instance has {expected} edges")]
    LengthMismatch { expected: usize, got: usize },

    #[error("not a spanning tree: {0}")]
    NotSpanningTree(String),

    #[error("instance has {count} spanning trees, above the enumeration limit of {limit}")]
    BudgetExceeded { count: u128, limit: u128 },

    #[error("no spanning tree satisfies the epsilon bound {0}")]
    InfeasibleEpsilon(f64),

    #[error("invalid parameter: {0}")]
    InvalidParams(String),
}

pub type Result<T> = std::result::Result<T, Error>;
