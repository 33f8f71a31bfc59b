//! Chordal-bipartite completion of `P7`-free bipartite graphs and the
//! structure theory around bad six-cycles.
//!
//! The completion loop: while some minimal separator fails to induce a
//! biclique (equivalently, an induced C6 exists), pick the canonical least
//! induced C6, take the minimal separator around its `(c1, c4)` pair, and
//! complete that separator into a biclique. On `P7`-free inputs each step
//! preserves `P7`-freeness and introduces no new induced C6, so the loop
//! terminates in a chordal bipartite supergraph whose PMC family is a
//! valid bag family for the original graph.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::recognition::{enumerate_induced_c6, InducedCycle};
use crate::separators::MinimalSeparator;
use crate::set::VertexSet;
use crate::solver::{BagFamily, Problem, SolveResult};
use crate::treedepth::TreedepthStructure;

/// A graph with a fixed ordered bipartition.
#[derive(Clone, Debug)]
pub struct BipartiteGraph {
    pub g: Graph,
    pub side1: VertexSet,
    pub side2: VertexSet,
}

impl BipartiteGraph {
    /// Wraps a graph with an explicit side-one set; every edge must cross.
    pub fn new(g: Graph, side1: VertexSet) -> Result<Self> {
        crate::recognition::check_bipartition(&g, &side1)?;
        let side2 = side1.complement();
        Ok(BipartiteGraph { g, side1, side2 })
    }

    /// Infers the bipartition by 2-coloring.
    pub fn from_graph(g: Graph) -> Result<Self> {
        let side1 = crate::recognition::bipartition(&g)
            .ok_or_else(|| Error::Domain("graph is not bipartite".into()))?;
        Ok(BipartiteGraph { g, side2: side1.complement(), side1 })
    }

    fn with_extra_edges(&self, extra: &[(usize, usize)]) -> BipartiteGraph {
        BipartiteGraph {
            g: self.g.with_edges(extra),
            side1: self.side1.clone(),
            side2: self.side2.clone(),
        }
    }
}

/// The least minimal separator whose two sides are not complete to each
/// other; `None` iff the graph is chordal bipartite.
pub fn separator_biclique_criterion(bg: &BipartiteGraph) -> Option<MinimalSeparator> {
    crate::separators::enumerate_minimal_separators(&bg.g)
        .into_iter()
        .find(|s| {
            let s1 = s.vertices.intersection(&bg.side1);
            let s2 = s.vertices.intersection(&bg.side2);
            !bg.g.is_complete_between(&s1, &s2)
        })
}

/// Completes the separator into a biclique; returns the new graph and the
/// added cross edges.
pub fn complete_separator(
    bg: &BipartiteGraph,
    sep: &VertexSet,
) -> (BipartiteGraph, Vec<(usize, usize)>) {
    let mut added = Vec::new();
    for u in sep.intersection(&bg.side1).iter() {
        for v in sep.intersection(&bg.side2).iter() {
            if !bg.g.has_edge(u, v) {
                added.push((u, v));
            }
        }
    }
    (bg.with_extra_edges(&added), added)
}

/// One step of the completion loop.
#[derive(Clone, Debug)]
pub struct CompletionStep {
    pub cycle: InducedCycle,
    /// The opposite pair whose separator was completed.
    pub pair: (usize, usize),
    pub separator: VertexSet,
    pub added: Vec<(usize, usize)>,
}

/// The canonical minimal separator through the opposite pair
/// `(c[0], c[3])` of an induced C6: the neighborhood of the component of
/// `G - N[{c2, c3}]` containing the far arc. It contains both pair
/// vertices and has the two arcs' components full.
fn separator_for_cycle(g: &Graph, cycle: &InducedCycle) -> (usize, usize, VertexSet) {
    let c = &cycle.vertices;
    let near = g.vertex_set([c[1], c[2]]);
    let blocked = g.neighborhood(&near, true);
    let far_comp = g
        .components(&blocked.complement())
        .into_iter()
        .find(|comp| comp.contains(c[4]))
        .expect("the far arc avoids N[{c2,c3}]");
    let sep = g.neighborhood(&far_comp, false);
    debug_assert!(sep.contains(c[0]) && sep.contains(c[3]));
    debug_assert!(crate::separators::is_minimal_separator(g, &sep));
    (c[0], c[3], sep)
}

/// Runs the completion loop to a chordal bipartite supergraph. Each step
/// picks the canonical least induced C6 and completes the separator around
/// its `(c1, c4)` pair; every step adds at least the pair edge, so the
/// loop terminates.
pub fn complete_to_chordal_bipartite(
    bg: &BipartiteGraph,
) -> (BipartiteGraph, Vec<CompletionStep>) {
    let mut current = bg.clone();
    let mut trace = Vec::new();
    loop {
        let cycles = enumerate_induced_c6(&current.g);
        let Some(cycle) = cycles.into_iter().next() else {
            return (current, trace);
        };
        let (x, y, sep) = separator_for_cycle(&current.g, &cycle);
        let (next, added) = complete_separator(&current, &sep);
        debug_assert!(!added.is_empty());
        trace.push(CompletionStep { cycle, pair: (x, y), separator: sep, added });
        current = next;
    }
}

/// Per-step invariant replay of the checked completion loop.
#[derive(Clone, Debug, Default)]
pub struct CompletionInvariantReport {
    pub steps: usize,
    pub p7_free_every_step: bool,
    pub no_new_c6_every_step: bool,
    pub final_chordal_bipartite: bool,
}

/// As [`complete_to_chordal_bipartite`], but replays the two step
/// invariants — `P7`-freeness is preserved and the induced-C6 set never
/// grows — and verifies the final graph. A violated invariant is an
/// implementation bug and reported as such.
pub fn complete_to_chordal_bipartite_checked(
    bg: &BipartiteGraph,
) -> Result<(BipartiteGraph, Vec<CompletionStep>, CompletionInvariantReport)> {
    if !crate::recognition::is_pt_free(&bg.g, 7) {
        return Err(Error::Domain("completion requires a P7-free input".into()));
    }
    let mut current = bg.clone();
    let mut trace = Vec::new();
    let mut report = CompletionInvariantReport {
        steps: 0,
        p7_free_every_step: true,
        no_new_c6_every_step: true,
        final_chordal_bipartite: false,
    };
    loop {
        let cycles = enumerate_induced_c6(&current.g);
        let Some(cycle) = cycles.clone().into_iter().next() else {
            break;
        };
        let (x, y, sep) = separator_for_cycle(&current.g, &cycle);
        let (next, added) = complete_separator(&current, &sep);
        if crate::recognition::find_induced_path(&next.g, 7).is_some() {
            return Err(Error::InvariantViolation(
                "completion step created an induced P7".into(),
            ));
        }
        let after = enumerate_induced_c6(&next.g);
        if !after.iter().all(|c| cycles.contains(c)) {
            return Err(Error::InvariantViolation(
                "completion step created a new induced C6".into(),
            ));
        }
        trace.push(CompletionStep { cycle, pair: (x, y), separator: sep, added });
        report.steps += 1;
        current = next;
    }
    report.final_chordal_bipartite = separator_biclique_criterion(&current).is_none();
    if !report.final_chordal_bipartite {
        return Err(Error::InvariantViolation(
            "loop ended C6-free but a separator still violates the biclique criterion".into(),
        ));
    }
    Ok((current, trace, report))
}

/// A bad C6: an induced six-cycle with an opposite pair that sits on both
/// bipartition sides and is incomparable in the treedepth structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BadC6 {
    pub cycle: InducedCycle,
    /// Side-one member of the pair.
    pub x: usize,
    /// Side-two member of the pair.
    pub y: usize,
}

/// All bad C6 tuples of `bg` with respect to `t`, cycles canonical,
/// `x` on side one.
pub fn find_bad_c6(bg: &BipartiteGraph, t: &TreedepthStructure) -> Vec<BadC6> {
    let mut out = Vec::new();
    for cycle in enumerate_induced_c6(&bg.g) {
        let c = &cycle.vertices;
        for (a, b) in [(c[0], c[3]), (c[1], c[4]), (c[2], c[5])] {
            if !t.contains(a) || !t.contains(b) || t.comparable(a, b) {
                continue;
            }
            let (x, y) = if bg.side1.contains(a) { (a, b) } else { (b, a) };
            debug_assert!(bg.side1.contains(x) && bg.side2.contains(y));
            out.push(BadC6 { cycle: cycle.clone(), x, y });
        }
    }
    out
}

/// Depth of a bad C6: the pair `(depth(x), depth(y))`.
pub fn bad_c6_depth(t: &TreedepthStructure, bad: &BadC6) -> (usize, usize) {
    (t.depth[bad.x], t.depth[bad.y])
}

/// The total order on depth pairs: lexicographic on
/// `(depth(x) + depth(y), depth(x))`, so `(1,1) < (1,2) < (2,1) < (1,3)`.
pub fn depth_order_less(a: (usize, usize), b: (usize, usize)) -> bool {
    (a.0 + a.1, a.0) < (b.0 + b.1, b.0)
}

/// Whether some depth level of `t` meets `set` at least twice.
pub fn is_t_rich(set: &VertexSet, t: &TreedepthStructure) -> bool {
    let mut seen = alloc::vec![false; t.d + 1];
    for v in set.intersection(&t.vertices).iter() {
        let d = t.depth[v];
        if seen[d] {
            return true;
        }
        seen[d] = true;
    }
    false
}

/// The structural context of an induced C6: the vertices seeing exactly
/// the odd or even triple of the cycle, and the union of the large
/// components away from its closed neighborhood.
#[derive(Clone, Debug)]
pub struct C6Context {
    /// Sees exactly `{c1, c3, c5}` (cycle positions 0, 2, 4).
    pub s1: VertexSet,
    /// Sees exactly `{c2, c4, c6}` (cycle positions 1, 3, 5).
    pub s2: VertexSet,
    /// Union of the components of `G - N[V(C)]` with at least 2 vertices.
    pub main_remainder: VertexSet,
}

/// Computes the context and asserts that the neighbors of the main
/// remainder land in `S1 ∪ S2` — a consequence of `P7`-freeness whose
/// failure signals a precondition violation.
pub fn c6_context(bg: &BipartiteGraph, cycle: &InducedCycle) -> Result<C6Context> {
    let g = &bg.g;
    let c = &cycle.vertices;
    let cycle_set = cycle.vertex_set(g);
    let odd = g.vertex_set([c[0], c[2], c[4]]);
    let even = g.vertex_set([c[1], c[3], c[5]]);
    let around = g.neighborhood(&cycle_set, false);
    let mut s1 = g.empty_set();
    let mut s2 = g.empty_set();
    for v in around.iter() {
        let on_cycle = g.neighbors(v).intersection(&cycle_set);
        if on_cycle == odd {
            s1.insert(v);
        } else if on_cycle == even {
            s2.insert(v);
        }
    }
    let closed = g.neighborhood(&cycle_set, true);
    let mut main_remainder = g.empty_set();
    for comp in g.components(&closed.complement()) {
        if comp.len() >= 2 {
            main_remainder.union_in_place(&comp);
        }
    }
    let nr = g.neighborhood(&main_remainder, false);
    if !nr.is_subset(&s1.union(&s2)) {
        return Err(Error::InvariantViolation(
            "main-remainder neighbors escape S1 ∪ S2; input was not P7-free".into(),
        ));
    }
    Ok(C6Context { s1, s2, main_remainder })
}

/// Whether `(a, b, c)` admits no pair of anticomplete induced paths of the
/// form `A - B - C`.
pub fn is_vv_free(g: &Graph, a: &VertexSet, b: &VertexSet, c: &VertexSet) -> bool {
    // Collect the A-B-C paths, then look for an anticomplete pair.
    let mut paths: Vec<[usize; 3]> = Vec::new();
    for y in b.iter() {
        for x in g.neighbors(y).intersection(a).iter() {
            for z in g.neighbors(y).intersection(c).iter() {
                if !g.has_edge(x, z) {
                    paths.push([x, y, z]);
                }
            }
        }
    }
    for (i, p) in paths.iter().enumerate() {
        let pset = g.vertex_set(p.iter().copied());
        let closed = g.neighborhood(&pset, true);
        for q in paths.iter().skip(i + 1) {
            if q.iter().all(|&v| !closed.contains(v)) {
                return false;
            }
        }
    }
    true
}

/// Neighborhood partition with respect to `z`: the classes of
/// `V(G) \ z` keyed by bipartition side and exact neighborhood in `z`,
/// in canonical order.
pub fn neighborhood_partition(bg: &BipartiteGraph, z: &VertexSet) -> Vec<VertexSet> {
    let mut classes: alloc::collections::BTreeMap<(bool, VertexSet), VertexSet> =
        alloc::collections::BTreeMap::new();
    for v in z.complement().iter() {
        let key = (bg.side1.contains(v), bg.g.neighbors(v).intersection(z));
        classes
            .entry(key)
            .or_insert_with(|| bg.g.empty_set())
            .insert(v);
    }
    classes.into_values().collect()
}

/// Summary of the completion run behind a solved instance.
#[derive(Clone, Debug)]
pub struct CompletionOutcome {
    pub steps: usize,
    pub added_edges: usize,
    pub final_minsep_count: usize,
    pub final_pmc_count: usize,
}

/// Solves a catalog problem on a `P7`-free bipartite graph by completing
/// it to chordal bipartite and running the block DP over the completed
/// graph's PMCs, which are a valid bag family for the original graph.
///
/// Boundary states are tracked exactly, so results are exact for every
/// catalog problem whenever no bag is truncated by `state_cap`
/// (`state_cap = None` never truncates); truncation is surfaced through
/// the result's `conditional` field.
pub fn solve_on_completed(
    bg: &BipartiteGraph,
    problem: Problem,
    state_cap: Option<usize>,
) -> Result<(SolveResult, CompletionOutcome)> {
    if !crate::recognition::is_pt_free(&bg.g, 7) {
        return Err(Error::Domain("solve_on_completed requires a P7-free input".into()));
    }
    let (completed, trace) = complete_to_chordal_bipartite(bg);
    let seps = crate::separators::enumerate_minimal_separators(&completed.g);
    let pmcs = crate::pmc::enumerate_pmcs(&completed.g);
    let outcome = CompletionOutcome {
        steps: trace.len(),
        added_edges: trace.iter().map(|s| s.added.len()).sum(),
        final_minsep_count: seps.len(),
        final_pmc_count: pmcs.len(),
    };
    let bags = BagFamily::new(pmcs.into_iter().map(|p| p.vertices).collect());
    let cap = state_cap.unwrap_or(bg.g.n());
    let result = match problem {
        Problem::Mwis => crate::solver::solve_mwis(&bg.g, &bags)?,
        Problem::InducedForest => crate::solver::solve_induced_forest(&bg.g, &bags, cap)?,
        Problem::MaxDegree(k) => crate::solver::solve_max_degree(&bg.g, &bags, k, cap)?,
    };
    Ok((result, outcome))
}
