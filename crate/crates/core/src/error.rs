use thiserror::Error;

use crate::geometry::Point;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("coordinate ({x},{y}) exceeds the supported magnitude 2^30")]
    CoordinateOutOfRange { x: i64, y: i64 },
    #[error("segment endpoints coincide at {0}")]
    DegenerateSegment(Point),
    #[error("polyline needs at least 2 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("polyline repeats vertex {0} consecutively")]
    RepeatedVertex(Point),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("invalid drawing: {0}")]
    InvalidDrawing(String),
    #[error("{what} supports at most {max} vertices, got {n}")]
    TooLarge {
        what: &'static str,
        n: usize,
        max: usize,
    },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("bound hypothesis failed: {0}")]
    HypothesisFailed(String),
    #[error("generator failed: {0}")]
    Generator(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
