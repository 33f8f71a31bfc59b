//! Minimal separators, potential maximal cliques, treedepth structures and
//! exact solvers for maximum-weight sparse induced subgraph problems on
//! small graphs, with a focus on `P7`-free graphs of bounded clique number.
//!
//! The crate is organized around a bitset [`graph::Graph`] and a handful of
//! enumeration engines:
//!
//! * [`separators`] / [`pmc`] — the minimal-separator / potential-maximal-
//!   clique machinery and covers of PMCs by component neighborhoods;
//! * [`recognition`] — `P_t`-free, chordal, (chordal) bipartite tests and
//!   induced C6 enumeration;
//! * [`coloring`] — a constructive chi-bounding coloring of `P_t`-free
//!   graphs;
//! * [`treedepth`] — treedepth-`d` structures, aligned completions and exact
//!   width parameters at small sizes;
//! * [`lemmas`] — constructive structural helpers on minimal separators of
//!   `P7`-free graphs (cograph dominators, bounded covers, two-orders
//!   minima, `(K, D, L)` triple verification);
//! * [`bipartite`] — the chordal-bipartite completion loop and the bad-C6
//!   structure theory around it;
//! * [`solver`] — dynamic programming over bag families ("blocks") for
//!   MWIS, maximum induced forest and bounded-degree subgraphs;
//! * [`oracle`] — independent brute-force ground truth and seeded instance
//!   generators, kept free of solver internals.
//!
//! Everything is deterministic; enumerations are canonically ordered.

#![cfg_attr(not(test), no_std)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bipartite;
pub mod coloring;
pub mod error;
pub mod graph;
pub mod lemmas;
pub mod modules;
pub mod oracle;
pub mod pmc;
pub mod recognition;
pub mod separators;
pub mod set;
pub mod solver;
pub mod treedepth;

pub use error::{Error, Result};
pub use graph::{Graph, GraphBuilder, Weight};
pub use set::VertexSet;
