//! Splitting cycles of edge ideals.
//!
//! Graphs, square-free monomial ideals, splitting functions along induced
//! chordless cycles, exact simplicial homology and graded Betti numbers via
//! Hochster's formula.

pub mod betti;
pub mod error;
pub mod graph;
pub mod homology;
pub mod monomial;
pub mod report;
pub mod splitting;

#[cfg(test)]
mod testutil;

pub use error::{Error, Result};
