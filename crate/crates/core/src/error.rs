use thiserror::Error;

/// Errors raised by the library. Validation problems are not errors: they are
/// collected into a [`crate::graph::ValidationReport`].
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid tolerance policy: {0}")]
    InvalidTolerance(String),
    #[error("degenerate segment: endpoints coincide")]
    DegenerateSegment,
    #[error("not a rhombus: {0}")]
    NotARhombus(String),
    #[error("vertex index {index} out of range for {len} vertices")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("unknown edge id {0}")]
    UnknownEdge(usize),
    #[error("edge ({0}, {1}) not present")]
    MissingEdge(usize, usize),
    #[error("non-finite coordinate at vertex {0}")]
    NonFiniteCoordinate(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("ambiguous angles at vertex {vertex}: two incident edges share a direction")]
    AmbiguousAngles { vertex: usize },
    #[error("face structure is inconsistent: {0}")]
    FaceStructure(String),
    #[error("radius must be positive, got {0}")]
    NonpositiveRadius(f64),
    #[error("radius {0} is infeasible: need r >= 2 so that floor(r) - 1 >= 1")]
    InfeasibleRadius(f64),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("could not place {0} padding vertices inside the disk")]
    PaddingFailed(usize),
    #[error("a disk radius is required for this operation")]
    MissingRadius,
    #[error("graph is not reduced: face {face} is a {kind}")]
    NotReduced { face: usize, kind: String },
    #[error("ambiguous hull: face {face} does not have 4 distinct x-coordinates")]
    AmbiguousHull { face: usize },
    #[error("path is not monotone")]
    NotMonotone,
    #[error("edges {0} and {1} lie in different components of the neighborhood graph")]
    Unreachable(usize, usize),
    #[error("sidedness violation: a rightsided edge follows a leftsided one at position {0}")]
    SidednessViolation(usize),
    #[error("invariant violated: {0}")]
    InvariantViolated(String),
    #[error("search budget exceeded after {nodes} nodes (best so far: {} edges)", best.best_e)]
    BudgetExceeded {
        nodes: u64,
        best: Box<crate::search::SearchResult>,
    },
    #[error("family {family} cannot realize n = {n}")]
    NotRealizable { family: String, n: usize },
    #[error("graph file: {0}")]
    Format(String),
    #[error("validation failed: {0}")]
    ValidationFailed(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
