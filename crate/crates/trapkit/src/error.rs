//! Crate-wide error type.
//!
//! Component numbers and variable indices in messages are 1-based, matching
//! every textual format of the crate.

/// Errors produced by parsing, validation, kernels and deciders.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("empty network")]
    EmptyNetwork,

    /// `component` is 0 for standalone (single-function) queries.
    #[error("variable index {index} is out of range for dimension {n}{}", component_note(.component))]
    IndexOutOfRange {
        component: usize,
        index: usize,
        n: usize,
    },

    #[error("invalid instance: {message}")]
    InvalidInstance { message: String },

    #[error("component {component}: {message}")]
    InvalidFunction { component: usize, message: String },

    /// A double-DNF pair answered the same on both covers at `config`.
    #[error("inconsistent double DNF at {config}: phi0 and phi1 agree")]
    Dnf01Inconsistent { config: String },

    #[error("search budget of {budget} assignments exceeded")]
    BudgetExceeded { budget: u64 },

    /// `component` is 0 for standalone (single-function) queries.
    #[error("support of size {size} exceeds the guard of {limit}{}", component_note(.component))]
    SupportGuard {
        component: usize,
        size: usize,
        limit: usize,
    },

    #[error(
        "hypercube has {free} free cells, the enumeration guard is {limit}; \
         try the graph or oracle engine"
    )]
    EnumerationGuard { free: usize, limit: usize },

    #[error("dimension {n} exceeds the {what} guard of {limit}")]
    DimensionGuard {
        what: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("expected dimension {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("empty vertex set")]
    EmptyVertexSet,

    #[error("hypercube {cube} is not closed; terminal SCCs are only defined inside a trap space")]
    NotATrapSpace { cube: String },

    #[error("clause {clause} has {width} literals; the chain construction allows at most 3")]
    ClauseWidth { clause: usize, width: usize },
}

fn component_note(component: &usize) -> String {
    if *component == 0 {
        String::new()
    } else {
        format!(" (component {component})")
    }
}

pub type Result<T> = std::result::Result<T, Error>;
