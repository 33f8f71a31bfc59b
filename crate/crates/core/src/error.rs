//! Error types shared across the crate.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Errors reported by library operations.
///
/// Contract violations (width mismatches, out-of-range vertices) panic
/// instead; everything here is reachable from well-typed caller input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Input outside the operation's domain (e.g. a non-bipartite graph
    /// passed to a bipartite-only routine).
    Domain(String),
    /// Instance exceeds a documented size cap of an exact routine.
    Capability { what: &'static str, limit: usize, got: usize },
    /// A precondition asserted by the caller turned out to be false and the
    /// routine found an induced path witnessing it.
    PathWitness { what: &'static str, path: Vec<usize> },
    /// An internal invariant backed by a theorem failed; indicates a bug in
    /// this crate rather than in the input.
    InvariantViolation(String),
    /// The supplied bag family cannot tile the graph.
    InfeasibleFamily(String),
}

impl core::error::Error for Error {}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {}", msg),
            Error::Capability { what, limit, got } => {
                write!(f, "{} supports at most {} vertices, got {}", what, limit, got)
            }
            Error::PathWitness { what, path } => {
                write!(f, "{}: induced path witness {:?}", what, path)
            }
            Error::InvariantViolation(msg) => write!(f, "invariant violation: {}", msg),
            Error::InfeasibleFamily(msg) => write!(f, "infeasible bag family: {}", msg),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
