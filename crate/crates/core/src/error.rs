use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeomError {
    #[error("invalid coordinate {text:?}: {reason}")]
    Coordinate { text: String, reason: &'static str },

    #[error("need more than 3 points, got {0}")]
    TooFewPoints(usize),

    #[error("general position needs at least 3 points, got {0}")]
    TooFewForTriples(usize),

    #[error("points {0}, {1} and {2} are collinear")]
    Collinear(usize, usize, usize),

    #[error("point {0} is not an internal point")]
    NotInternal(usize),

    #[error("order is not a permutation of 0..{0}")]
    NotPermutation(usize),

    #[error("order does not describe a simple polygon")]
    NotSimple,

    #[error("viewpoint lies inside the convex hull")]
    ViewpointInsideHull,

    #[error("viewpoint is degenerate: {0}")]
    DegenerateViewpoint(&'static str),

    #[error("internal inconsistency: {0}")]
    Internal(String),

    #[error("bound undefined for x = {x} >= n = {n}: the set is in convex position, use the hull")]
    ConvexPosition { n: usize, x: usize },

    #[error("no reflex vertex; theorem hypotheses not met (set is in convex position)")]
    NoReflexVertex,

    #[error("n = {n} exceeds the oracle limit {limit}; raise the limit explicitly to proceed")]
    OracleLimit { n: usize, limit: usize },

    #[error("unknown strategy {0:?}")]
    UnknownStrategy(String),
}

pub type Result<T> = std::result::Result<T, GeomError>;
