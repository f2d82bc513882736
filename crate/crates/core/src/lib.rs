//! String graphs of integer polylines and the separator/biclique machinery
//! that bounds their colouring, independence and edge counts.
//!
//! * [`geometry`]: exact orientation and intersection predicates.
//! * [`string_graph`]: curve families, drawings, intersection and crossing graphs.
//! * [`separators`]: balanced vertex separators (exact, spectral, BFS).
//! * [`decomposition`]: recursive independent sets, colouring, bicliques,
//!   edge-count bounds, and crossing statistics for drawings.
//! * [`generators`]: deterministic and seeded instance families.
//! * [`io`]: the plain-text file formats.

pub mod decomposition;
pub mod error;
pub mod generators;
pub mod geometry;
pub mod graph;
pub mod io;
pub mod mis;
pub mod params;
pub mod rng;
pub mod separators;
pub mod string_graph;

pub use error::{Error, GeometryError, Result};
pub use geometry::{Point, Polyline, Segment};
pub use graph::Graph;
pub use params::ParamSet;
pub use separators::SeparatorResult;
pub use string_graph::{CurveFamily, Drawing};
