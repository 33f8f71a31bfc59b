//! Minimal separators and full components.
//!
//! A set `S` is a minimal separator iff `G - S` has at least two full
//! components (components `C` with `N(C) = S`). Enumeration follows the
//! classic neighborhood-expansion closure: seed with `N(C)` for components
//! `C` of `G - N[v]`, then repeatedly expand every known separator `S`
//! around each of its vertices. Every candidate is filtered through the
//! definition, and the whole enumeration is cross-checked against a
//! subset oracle in the test suite.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::graph::Graph;
use crate::set::VertexSet;

/// A minimal separator together with its full components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalSeparator {
    pub vertices: VertexSet,
    /// Components `C` of `G - vertices` with `N(C) = vertices`; at least two.
    pub full_components: Vec<VertexSet>,
}

/// Components `C` of `g - s` with `N(C) = s`, in canonical order.
pub fn full_components(g: &Graph, s: &VertexSet) -> Vec<VertexSet> {
    let rest = s.complement();
    g.components(&rest)
        .into_iter()
        .filter(|c| g.neighborhood(c, false) == *s)
        .collect()
}

/// True iff `s` has at least two full components.
///
/// `s` must be a nonempty proper subset of the vertices.
pub fn is_minimal_separator(g: &Graph, s: &VertexSet) -> bool {
    assert!(!s.is_empty() && s.len() < g.n(), "s must be nonempty and proper");
    full_components(g, s).len() >= 2
}

/// Complete, duplicate-free list of the nonempty minimal separators of
/// `g`, sorted canonically.
pub fn enumerate_minimal_separators(g: &Graph) -> Vec<MinimalSeparator> {
    let n = g.n();
    let mut known: BTreeSet<VertexSet> = BTreeSet::new();
    let mut queue: Vec<VertexSet> = Vec::new();

    let offer = |s: VertexSet, known: &mut BTreeSet<VertexSet>, queue: &mut Vec<VertexSet>| {
        if s.is_empty() || s.len() >= n || known.contains(&s) {
            return;
        }
        if full_components(g, &s).len() >= 2 {
            known.insert(s.clone());
            queue.push(s);
        }
    };

    // Seeds: neighborhoods of components of G - N[v].
    for v in 0..n {
        let closed = g.neighborhood(&VertexSet::singleton(n, v), true);
        for comp in g.components(&closed.complement()) {
            offer(g.neighborhood(&comp, false), &mut known, &mut queue);
        }
    }

    // Closure: expand each separator around each of its vertices.
    while let Some(s) = queue.pop() {
        for x in s.iter() {
            let mut blocked = s.union(g.neighbors(x));
            blocked.insert(x);
            for comp in g.components(&blocked.complement()) {
                offer(g.neighborhood(&comp, false), &mut known, &mut queue);
            }
        }
    }

    known
        .into_iter()
        .map(|s| {
            let full = full_components(g, &s);
            MinimalSeparator { vertices: s, full_components: full }
        })
        .collect()
}
