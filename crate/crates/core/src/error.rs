use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a terrain needs at least two vertices, got {0}")]
    TooFewVertices(usize),

    #[error("terrain x-coordinates must strictly increase: vertex {index} has x = {x}")]
    NotMonotone { index: usize, x: String },

    #[error("x = {x} lies outside the terrain range [{min}, {max}]")]
    OutOfRange { x: String, min: String, max: String },

    #[error("({x}, {y}) is not a point of the terrain")]
    OffTerrain { x: String, y: String },

    #[error("weight {weight} of guard at x = {x} must be positive")]
    NonPositiveWeight { x: String, weight: String },

    #[error("continuous instances derive their points and guards; got explicit lists")]
    ContinuousWithLists,

    #[error("matrix mixes columns of different sides")]
    MixedSides,

    #[error("column {0} belongs to neither the left nor the right guard group")]
    UnpartitionedColumn(usize),

    #[error("matrix shape mismatch: {0}")]
    Shape(String),

    #[error("covering row {0} has no nonzero entry")]
    EmptyRow(usize),

    #[error("objective coefficient {index} is negative ({value})")]
    NegativeCost { index: usize, value: String },

    #[error("point {index} at x = {x} cannot be seen by any admissible guard")]
    Infeasible { index: usize, x: String },

    #[error("basic optimal solution is not integral (variable {index} = {value})")]
    NotIntegral { index: usize, value: String },

    #[error("exhaustive search over {count} guard choices exceeds the cap of {cap}")]
    CapExceeded { count: usize, cap: usize },

    #[error("malformed LP text at line {line}: {message}")]
    LpText { line: usize, message: String },

    #[error("instance is not {expected}")]
    WrongMode { expected: &'static str },
}
