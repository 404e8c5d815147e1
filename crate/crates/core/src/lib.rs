//! Exact engine for geometric realizations of paths, cycles and complete
//! graphs, and for the geometric homomorphism order between them.
//!
//! The crate is `no_std` (it needs `alloc`). File formats, the verification
//! suite and the command line live in the `geoposet` crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
#[macro_use]
extern crate std;

pub mod geometry;
pub mod construct;
pub mod filters;
pub mod graph;
pub mod kernel;
pub mod poset;
pub mod realizer;

pub use geometry::{Drawing, Orientation, Point2, Rational};
pub use graph::{CrossingPair, CrossingSet, EdgeId, FamilyKind, GraphFamily, VertexPermutation};
