//! Zero forcing and connected forcing on simple undirected graphs.
//!
//! A colored vertex with exactly one uncolored neighbor forces that neighbor.
//! A forcing set colors the whole graph; a connected forcing set additionally
//! induces a connected subgraph. This crate provides the forcing process,
//! exhaustive solvers for `F(G)` and `F_c(G)`, closed-form solvers for trees
//! and graphs with a single clique of size at least 3, graph family
//! generators, and the verification suites behind `cforce verify`.

pub mod error;
pub mod exact;
pub mod explore;
pub mod forcing;
pub mod generators;
pub mod graph;
pub mod structural;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
