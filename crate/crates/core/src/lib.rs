//! Exact enumeration of words and lattice paths by pattern occurrences.

pub mod cluster;
pub mod contfrac;
pub mod error;
pub mod network;
pub mod paths;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
