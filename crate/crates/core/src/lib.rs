//! Neighborhood polynomials of chordal graphs.
//!
//! The neighborhood polynomial of a graph counts, by size, the vertex sets
//! that have a common neighbor. For chordal graphs [`compute`] builds it
//! incrementally along a perfect elimination order, keeping for every maximal
//! clique the family of anchor sets (the sub-cliques that occur as common
//! neighborhoods of periphery vertex sets). The running time is governed by
//! the largest such family, the anchor width.
//!
//! [`oracle`] holds slow, independent reference implementations used to
//! check the engine.

pub mod chordal;
pub mod engine;
pub mod error;
pub mod generators;
pub mod graph;
pub mod oracle;
pub mod polynomial;

pub use chordal::{connected_components, find_peo, is_peo, lex_bfs, EliminationOrder, NotChordal};
pub use engine::{anchor_width, compute, compute_seeded, compute_with_order, ComputationResult, OrderError, StepStats};
pub use error::{GraphError, OracleError, ParseError};
pub use graph::{parse_edge_list, Graph, Vertex, VertexSet};
pub use polynomial::Polynomial;
