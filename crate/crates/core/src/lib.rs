//! Product-irregular edge labelings of graphs covered by few cliques.
//!
//! A labeling assigns a positive integer to every edge; the product degree of
//! a vertex is the product of its incident labels, and the labeling is
//! product-irregular when all product degrees differ. The crate builds such
//! labelings with strength 3 from weighted adjacency matrices, verifies them,
//! and computes the product irregularity strength of small graphs exactly.

pub mod constructions;
pub mod engine;
pub mod error;
pub mod graph;
pub mod io;
pub mod report;
pub mod solver;
pub mod verifier;

pub use error::{Error, Result};
