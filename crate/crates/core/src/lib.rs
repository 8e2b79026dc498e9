//! Matching number, independence number and Gallai-Edmonds structure of
//! graphs, with a structural test for `α(G) = μ(G)` on connected regular
//! graphs that is cross-checked against direct computation.

pub mod characterization;
pub mod gallai_edmonds;
pub mod graph;
pub mod graph6;
pub mod graphgen;
pub mod harness;
pub mod independence;
mod mask;
pub mod matching;

pub use graph::{Graph, GraphError, VertexSet};
pub use graph6::{parse_graph6, to_graph6, Graph6Error};
