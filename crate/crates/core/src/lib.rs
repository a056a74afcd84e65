//! Integer invariants of graph matrices: exact Smith forms and
//! characteristic polynomials, numeric spectra, sandpile groups of cone
//! graphs, and cospectral/coinvariant censuses over small graphs.

pub mod canon;
pub mod census;
pub mod closed_forms;
pub mod conductance;
pub mod distance;
pub mod error;
pub mod generate;
pub mod graph;
pub mod graph6;
pub mod linalg;
pub mod matrix;
pub mod sandpile;
pub mod spectra;
pub mod verify;

pub use census::{run_census, tree_census, CensusReport, Fingerprint, Mode};
pub use distance::{distance_profile, DistanceProfile};
pub use error::{Error, Graph6Error, GraphError, Result};
pub use graph::Graph;
pub use graph6::{parse_graph6, parse_graph6_lines, write_graph6};
pub use linalg::{charpoly, determinant, snf, AbelianGroup, IntPolynomial, SnfResult};
pub use matrix::{build, IntMatrix, MatrixKind};
