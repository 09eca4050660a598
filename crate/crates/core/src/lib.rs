//! Clique-anchored colouring of (P3+P2)-free, (P4+P2)-free and related
//! diamond-free graph classes, with exact oracles to check the results.

pub mod bitset;
pub mod cli;
pub mod colouring;
pub mod error;
pub mod graph;
pub mod harness;
pub mod partition;
pub mod recognition;

pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use graph::Graph;
