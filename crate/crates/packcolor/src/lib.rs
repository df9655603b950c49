//! Files, reports and the scan harness on top of `packcolor-core`.

pub mod coloring;
pub mod error;
pub mod harness;
pub mod input;
pub mod report;

pub use error::Error;
