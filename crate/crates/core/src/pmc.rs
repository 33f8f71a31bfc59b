//! Potential maximal cliques: the predicate, enumeration from minimal
//! separators, and covers by component neighborhoods.
//!
//! `Ω` is a PMC iff (1) no component of `G - Ω` sees all of `Ω`, and
//! (2) every non-edge inside `Ω` is covered by the neighborhood of some
//! component of `G - Ω`. Enumeration generates candidates from the minimal
//! separators — `N[v]`, `S ∪ {v}`, and `S ∪ (S' ∩ C)` for separators
//! crossing a component — and filters them through the predicate; the test
//! suite pins the result against a full subset scan.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::graph::Graph;
use crate::separators::enumerate_minimal_separators;
use crate::set::VertexSet;

/// A potential maximal clique.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Pmc {
    pub vertices: VertexSet,
}

/// Witness that a PMC is covered by few component neighborhoods.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PmcCover {
    /// `Ω = N[v]`.
    ClosedNeighborhood(usize),
    /// `Ω = ⋃_{D} N(D)` over the listed components of `G - Ω`.
    ComponentFamily(Vec<VertexSet>),
}

/// The two-condition PMC predicate. `omega` must be nonempty.
pub fn is_pmc(g: &Graph, omega: &VertexSet) -> bool {
    assert!(!omega.is_empty(), "PMCs are nonempty");
    let comps = g.components(&omega.complement());
    let neighborhoods: Vec<VertexSet> =
        comps.iter().map(|d| g.neighborhood(d, false)).collect();
    // (1) Every component neighborhood is a proper subset of omega.
    if neighborhoods.iter().any(|nd| nd == omega) {
        return false;
    }
    debug_assert!(neighborhoods.iter().all(|nd| nd.is_subset(omega)));
    // (2) Every non-edge of omega is covered by some component.
    let verts = omega.to_vec();
    for (i, &u) in verts.iter().enumerate() {
        for &v in &verts[i + 1..] {
            if g.has_edge(u, v) {
                continue;
            }
            if !neighborhoods.iter().any(|nd| nd.contains(u) && nd.contains(v)) {
                return false;
            }
        }
    }
    true
}

/// All PMCs of `g`, duplicate-free and canonically sorted.
///
/// Vertex-incremental enumeration: for each prefix graph, new PMCs are
/// either inherited from the previous prefix (optionally extended by the
/// new vertex), a separator plus the new vertex, a closed neighborhood,
/// or a separator merged with another separator's trace on one of its
/// components. Every candidate passes through [`is_pmc`]; completeness is
/// pinned against the full subset oracle in the test and acceptance
/// suites.
pub fn enumerate_pmcs(g: &Graph) -> Vec<Pmc> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let all_edges = g.edges();
    let mut pmcs: BTreeSet<VertexSet> = BTreeSet::new();
    let mut prev_seps: Vec<VertexSet> = Vec::new();
    for i in 0..n {
        // Prefix graph on vertices 0..=i, kept at full width.
        let gi = if i + 1 == n {
            g.clone()
        } else {
            let keep: Vec<(usize, usize)> =
                all_edges.iter().copied().filter(|&(u, v)| u <= i && v <= i).collect();
            Graph::from_edges(n, &keep)
        };
        let seps: Vec<VertexSet> = enumerate_minimal_separators(&gi)
            .into_iter()
            .map(|s| s.vertices)
            .collect();

        let mut candidates: BTreeSet<VertexSet> = BTreeSet::new();
        for v in 0..=i {
            candidates.insert(gi.neighborhood(&VertexSet::singleton(n, v), true));
        }
        for old in &pmcs {
            let mut ext = old.clone();
            ext.insert(i);
            candidates.insert(ext);
        }
        candidates.extend(pmcs.iter().cloned());
        for s in &seps {
            if !s.contains(i) {
                let mut ext = s.clone();
                ext.insert(i);
                candidates.insert(ext);
            }
        }
        for s in &seps {
            let comps = gi.components(&s.complement());
            for t in seps.iter().chain(&prev_seps) {
                if t == s {
                    continue;
                }
                for c in &comps {
                    let inside = t.intersection(c);
                    if !inside.is_empty() {
                        candidates.insert(s.union(&inside));
                    }
                }
            }
        }

        pmcs = candidates
            .into_iter()
            .filter(|cand| !cand.is_empty() && is_pmc(&gi, cand))
            .collect();
        prev_seps = seps;
    }
    pmcs.into_iter().map(|vertices| Pmc { vertices }).collect()
}

/// Checks the count bounds relating `a` minimal separators and `b` PMCs:
/// `b <= n(a^2 + a + 1)` and `a <= n b`.
pub fn check_count_bounds(n: usize, a: usize, b: usize) -> bool {
    b <= n * (a * a + a + 1) && a <= n * b
}

/// Smallest cover witness for a PMC: either a vertex `v` with `Ω = N[v]`
/// (checked first) or a minimum-cardinality family `D` of components of
/// `G - Ω` with `Ω = ⋃ N(D)`, capped at `cap` components.
pub fn pmc_cover(g: &Graph, omega: &Pmc, cap: usize) -> Option<PmcCover> {
    let omega = &omega.vertices;
    debug_assert!(is_pmc(g, omega));
    for v in omega.iter() {
        let closed = g.neighborhood(&VertexSet::singleton(g.n(), v), true);
        if closed == *omega {
            return Some(PmcCover::ClosedNeighborhood(v));
        }
    }
    let comps = g.components(&omega.complement());
    let neighborhoods: Vec<VertexSet> =
        comps.iter().map(|d| g.neighborhood(d, false)).collect();
    // Exact minimum set cover by branch and bound over components, best-
    // first on the uncovered overlap. The cap keeps it tiny.
    let mut best: Option<Vec<usize>> = None;
    let mut chosen = Vec::new();
    cover_rec(&neighborhoods, omega.clone(), &mut chosen, &mut best, cap);
    best.map(|idx| PmcCover::ComponentFamily(idx.into_iter().map(|i| comps[i].clone()).collect()))
}

fn cover_rec(
    sets: &[VertexSet],
    uncovered: VertexSet,
    chosen: &mut Vec<usize>,
    best: &mut Option<Vec<usize>>,
    cap: usize,
) {
    if uncovered.is_empty() {
        if best.as_ref().is_none_or(|b| chosen.len() < b.len()) {
            *best = Some(chosen.clone());
        }
        return;
    }
    let budget = best.as_ref().map_or(cap, |b| b.len().saturating_sub(1).min(cap));
    if chosen.len() >= budget {
        return;
    }
    // Pick an uncovered vertex and branch on the sets containing it.
    let pivot = uncovered.min_vertex().unwrap();
    let mut order: Vec<usize> = (0..sets.len())
        .filter(|&i| !chosen.contains(&i) && sets[i].contains(pivot))
        .collect();
    order.sort_by_key(|&i| core::cmp::Reverse(sets[i].intersection(&uncovered).len()));
    for i in order {
        chosen.push(i);
        cover_rec(sets, uncovered.minus(&sets[i]), chosen, best, cap);
        chosen.pop();
    }
}
