//! Packing colorings of subcubic graphs: graph primitives, maximum average
//! degree, discharging, an exact packing-coloring solver and a local
//! reducibility checker.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod canon;
pub mod density;
pub mod discharge;
pub mod enumerate;
pub mod flow;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod oracle;
pub mod packing;
pub mod reducibility;
pub mod rational;
pub mod solver;

pub use graph::{Graph, GraphError, Vertex};
pub use rational::Rational;
