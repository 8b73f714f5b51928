//! Exact and constructive F-isolation numbers of graphs.
//!
//! A set `S` is F-isolating in `G` when `G - N[S]` contains no member of the
//! family `F` as a subgraph. This crate provides the graph substrate, exact
//! solvers, constructive algorithms with checkable certificates, extremal
//! graph families, closed-form bound tables and exhaustive verification
//! sweeps.

pub mod bounds;
pub mod constructive;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod patterns;
pub mod solvers;
pub mod verify;
pub mod vertex_set;

pub use error::{Error, Result};
pub use graph::{BfsTree, Graph};
pub use patterns::{check_certificate, is_f_free, Certificate, PatternFamily};
pub use vertex_set::{VertexSet, MAX_VERTICES};
