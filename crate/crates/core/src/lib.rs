//! Efficient dominating sets on bipartite graphs.
//!
//! A set `D` is an efficient dominating set (e.d.s.) when every vertex has
//! exactly one member of `D` in its closed neighborhood. This crate holds
//! the graph type, induced-subgraph recognition, an exact-cover oracle and a
//! forced-vertex branch-and-reduce solver for `(S_{1,2,5}, S_{3,3,3})`-free
//! chordal bipartite graphs.

pub mod families;
pub mod format;
pub mod graph;
pub mod oracle;
pub mod recognition;
pub mod solver;
pub mod vertex_set;

pub use graph::{BipartiteGraph, DistanceLevels, GraphError, Side, Subgraph};
pub use recognition::{classify, ClassReport, Pattern, SubgraphWitness};
pub use vertex_set::VertexSet;
pub use oracle::{solve_exact, verify_eds, EdsSolution, Mode, OracleError};
pub use solver::{check_lemmas, solve, solve_with, EdsResult, LemmaReport, SolveOptions, SolveOutcome};
