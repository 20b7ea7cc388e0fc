//! Random-graph Ramsey threshold laboratory.
//!
//! Graphs, `G(N, p)` sampling and random halving live in [`graph`];
//! containment of `K_{m,n}` and of books `K_m + \bar K_n` in [`witness`];
//! the arrow relation in [`arrows`]; closed-form thresholds, tail bounds and
//! exact small-case laws in [`analytic`]; Monte Carlo experiments in
//! [`harness`]. All randomness flows through [`RngStream`].

pub mod analytic;
pub mod arrows;
pub mod error;
pub mod graph;
pub mod harness;
pub mod rng;
pub mod witness;

pub use error::{LabError, Result};
pub use graph::{ColoredSplit, Graph};
pub use rng::RngStream;
pub use witness::{PatternKind, PatternSpec, Witness};
