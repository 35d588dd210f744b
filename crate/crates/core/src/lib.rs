//! Vertex-partition decompositions of finite graphs.
//!
//! A decomposition with parameter `p` splits the vertex set into parts so
//! that every union of `p` parts induces a graph accepted by a hereditary
//! [`checkers::PropertyChecker`]. The crate provides:
//!
//! - [`graph`]: the simple-graph carrier, edge-list I/O, generators and the
//!   elementary transformations (powers, subdivisions, subset complementation).
//! - [`decomposition`]: verification, composition, intersection and the
//!   exact bound arithmetic that goes with them.
//! - [`checkers`]: exact hereditary oracles (treedepth, degree, bicliques,
//!   excluded induced subgraphs, clique subdivisions).
//! - [`patterns`] and [`extremal`]: miners for half-graphs, shattered sets
//!   and bicliques, Kővári–Sós–Turán arithmetic and pigeonhole extraction.
//! - [`baker`]: BFS layering, the shifting strategy and exact independent sets.
//! - [`coloring`]: greedy colorings of graph powers as decompositions.
//! - [`experiments`]: seeded sweeps over random partitions.
//! - [`witness`]: certificate validators that share no code with the miners.

pub mod baker;
mod bits;
pub mod checkers;
pub mod coloring;
pub mod decimal;
pub mod decomposition;
mod error;
pub mod experiments;
pub mod extremal;
pub mod graph;
pub mod patterns;
pub mod subsets;
pub mod witness;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSubset};
pub use decomposition::Decomposition;
