//! Exact oriented and pushable homomorphism tools for small oriented graphs.

pub mod bits;
pub mod bounds;
pub mod configs;
pub mod corpus;
pub mod degeneracy;
pub mod discharge;
pub mod error;
pub mod graph;
pub mod hom;
pub mod io;
pub mod mad;
pub mod par;
pub mod rational;
pub mod reducibility;
pub mod suites;
pub mod tournament;

pub use error::{Error, Result};
pub use graph::{OrientedGraph, PushSet};
pub use par::Exec;
pub use rational::Rational;
pub use tournament::{PropertySpec, Sign, Tournament};
