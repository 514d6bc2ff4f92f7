//! Exact discrete Ricci curvature on finite simple graphs.
//!
//! Curvature values are computed as exact rationals via optimal transport
//! and bipartite assignment. See the crate examples for typical use.

pub mod cli;
pub mod curvature;
pub mod error;
pub mod families;
pub mod graph;
pub mod rational;
pub mod transport;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Dist, Graph};
pub use rational::Rational;
