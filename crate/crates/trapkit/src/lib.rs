//! Decision problems for trap spaces of Boolean networks.
//!
//! A trap space is a sub-hypercube closed under the network function; this
//! crate decides the trap-space property, its minimality, and configuration
//! membership in a minimal trap space, across five local-function encodings
//! (formula, DNF, truth table, free BDD, double DNF) and for networks given
//! as explicit functional graphs. It also ships a brute-force oracle and
//! generators for the classic hardness reductions, used as test-instance
//! factories.

pub mod deciders;
pub mod error;
pub mod funcgraph;
pub mod kernels;
pub mod model;
pub mod oracle;
pub mod reductions;
mod rng;

pub use deciders::{Limits, TrapVerdict, Witness};
pub use error::{Error, Result};
pub use model::{BooleanNetwork, Configuration, FunctionalGraph, Hypercube, LocalFunction};

// Model values are immutable after construction and shareable across
// concurrent readers.
const _: () = {
    const fn shareable<T: Send + Sync>() {}
    shareable::<BooleanNetwork>();
    shareable::<FunctionalGraph>();
    shareable::<Configuration>();
    shareable::<Hypercube>();
    shareable::<LocalFunction>();
    shareable::<TrapVerdict>();
    shareable::<Error>();
};
