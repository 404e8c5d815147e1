//! File formats, published fixtures, thread partitioning and the
//! verification suite on top of `geoposet-core`.

pub mod catalog;
pub mod dot;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod parallel;
pub mod verify;

pub use error::{Error, Result};
