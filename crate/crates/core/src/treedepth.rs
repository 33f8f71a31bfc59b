//! Treedepth-`d` structures, tree decompositions, aligned completions and
//! exact width parameters at small sizes.
//!
//! A treedepth-`d` structure is a rooted forest of height at most `d` over
//! a subset of the vertices that is an elimination forest of the induced
//! subgraph: every edge inside it joins an ancestor-descendant pair.

use alloc::vec;
use alloc::vec::Vec;
use hashbrown::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

/// Rooted forest of height at most `d` over a vertex subset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreedepthStructure {
    pub vertices: VertexSet,
    /// Parent per member vertex; `None` for roots. Entries of non-members
    /// are meaningless.
    pub parent: Vec<Option<usize>>,
    /// Depth per member vertex, roots at depth 1. Zero for non-members.
    pub depth: Vec<usize>,
    /// Height bound.
    pub d: usize,
}

impl TreedepthStructure {
    pub fn empty(n: usize, d: usize) -> Self {
        TreedepthStructure {
            vertices: VertexSet::empty(n),
            parent: vec![None; n],
            depth: vec![0; n],
            d,
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(v)
    }

    /// Vertices of depth exactly `alpha`.
    pub fn depth_level(&self, alpha: usize) -> VertexSet {
        VertexSet::from_indices(
            self.parent.len(),
            self.vertices.iter().filter(|&v| self.depth[v] == alpha),
        )
    }

    /// `v` and all its proper ancestors, bottom-up.
    pub fn chain_to_root(&self, v: usize) -> Vec<usize> {
        let mut out = vec![v];
        let mut cur = v;
        while let Some(p) = self.parent[cur] {
            out.push(p);
            cur = p;
        }
        out
    }

    /// Whether two member vertices lie on a common root-to-leaf path.
    pub fn comparable(&self, u: usize, v: usize) -> bool {
        debug_assert!(self.contains(u) && self.contains(v));
        if u == v {
            return true;
        }
        let (mut deep, shallow) = if self.depth[u] >= self.depth[v] { (u, v) } else { (v, u) };
        while self.depth[deep] > self.depth[shallow] {
            match self.parent[deep] {
                Some(p) => deep = p,
                None => return false,
            }
        }
        deep == shallow
    }

    pub fn add_root(&mut self, v: usize) {
        self.vertices.insert(v);
        self.parent[v] = None;
        self.depth[v] = 1;
    }

    pub fn add_leaf(&mut self, v: usize, parent: usize) {
        debug_assert!(self.contains(parent));
        self.vertices.insert(v);
        self.parent[v] = Some(parent);
        self.depth[v] = self.depth[parent] + 1;
    }

    pub fn remove_leaf(&mut self, v: usize) {
        self.vertices.remove(v);
        self.parent[v] = None;
        self.depth[v] = 0;
    }
}

/// Validity: parent/depth bookkeeping consistent, height within bound, and
/// the elimination property for every edge inside the structure.
pub fn is_treedepth_structure(g: &Graph, t: &TreedepthStructure) -> bool {
    if t.vertices.width() != g.n() {
        return false;
    }
    for v in t.vertices.iter() {
        let ok = match t.parent[v] {
            None => t.depth[v] == 1,
            Some(p) => t.contains(p) && t.depth[v] == t.depth[p] + 1,
        };
        if !ok || t.depth[v] > t.d {
            return false;
        }
    }
    for u in t.vertices.iter() {
        for v in g.neighbors(u).intersection(&t.vertices).iter() {
            if v > u && !t.comparable(u, v) {
                return false;
            }
        }
    }
    true
}

/// Positions where a vertex outside the structure could be attached.
fn extensions_of(g: &Graph, t: &TreedepthStructure, u: usize) -> bool {
    let nbrs_in_t = g.neighbors(u).intersection(&t.vertices);
    if nbrs_in_t.is_empty() {
        return t.d >= 1;
    }
    // Attaching u as a leaf under p keeps the elimination property iff all
    // of u's structure neighbors lie on the chain from p to its root.
    for p in t.vertices.iter() {
        if t.depth[p] + 1 > t.d {
            continue;
        }
        let chain = VertexSet::from_indices(g.n(), t.chain_to_root(p));
        if nbrs_in_t.is_subset(&chain) {
            return true;
        }
    }
    false
}

/// Whether no leaf can be added without exceeding the height bound.
pub fn is_maximal(g: &Graph, t: &TreedepthStructure) -> bool {
    debug_assert!(is_treedepth_structure(g, t));
    t.vertices.complement().iter().all(|u| !extensions_of(g, t, u))
}

/// Streams every treedepth-`d` structure of `g` (including the empty one)
/// exactly once; stops early when the visitor returns `false`. Returns the
/// number of structures visited.
///
/// Construction order: root subtrees with ascending roots, children with
/// ascending indices; availability masks enforce the elimination property,
/// so no emitted structure needs re-validation.
pub fn for_each_treedepth_structure<F>(g: &Graph, d: usize, mut visit: F) -> usize
where
    F: FnMut(&TreedepthStructure) -> bool,
{
    let mut state = TreedepthStructure::empty(g.n(), d);
    let mut count = 0usize;
    let full = g.full_set();
    let mut cont = |s: &mut TreedepthStructure, _rem: &VertexSet| {
        count += 1;
        visit(s)
    };
    let top = Slot { parent: None, depth: 1, min_root: 0 };
    forests(g, &full, top, d, &mut state, &mut cont);
    count
}

/// Where new forest roots hang: under a parent at the given depth, with
/// roots ascending from `min_root`.
#[derive(Clone, Copy)]
struct Slot {
    parent: Option<usize>,
    depth: usize,
    min_root: usize,
}

/// Enumerates forests over `avail` rooted at `slot`. `cont` fires once per
/// complete forest with the still-available vertex set.
fn forests(
    g: &Graph,
    avail: &VertexSet,
    slot: Slot,
    d: usize,
    state: &mut TreedepthStructure,
    cont: &mut dyn FnMut(&mut TreedepthStructure, &VertexSet) -> bool,
) -> bool {
    if !cont(state, avail) {
        return false;
    }
    if slot.depth > d {
        return true;
    }
    for r in avail.iter() {
        if r < slot.min_root {
            continue;
        }
        match slot.parent {
            None => state.add_root(r),
            Some(p) => state.add_leaf(r, p),
        }
        let mut child_avail = avail.clone();
        child_avail.remove(r);
        let ok = {
            // After r's subtree completes, the siblings to the right must
            // avoid the subtree and its neighborhood.
            let mut after = |s: &mut TreedepthStructure, rem: &VertexSet| {
                let remaining = rem.minus(g.neighbors(r));
                forests(g, &remaining, Slot { min_root: r + 1, ..slot }, d, s, cont)
            };
            let child_slot = Slot { parent: Some(r), depth: slot.depth + 1, min_root: 0 };
            forests(g, &child_avail, child_slot, d, state, &mut after)
        };
        state.remove_leaf(r);
        if !ok {
            return false;
        }
    }
    true
}

/// Collects all (or the first `max_count`) treedepth-`d` structures in
/// canonical order: vertex set by (size, lexicographic), then depth vector.
/// Each structure carries its maximality flag.
pub fn enumerate_treedepth_structures(
    g: &Graph,
    d: usize,
    max_count: Option<usize>,
) -> Vec<(TreedepthStructure, bool)> {
    let mut out: Vec<TreedepthStructure> = Vec::new();
    for_each_treedepth_structure(g, d, |t| {
        out.push(t.clone());
        max_count.is_none_or(|cap| out.len() < cap)
    });
    out.sort_by(|a, b| {
        (a.vertices.len(), &a.vertices, &a.depth, &a.parent)
            .cmp(&(b.vertices.len(), &b.vertices, &b.depth, &b.parent))
    });
    out.into_iter().map(|t| { let m = is_maximal(g, &t); (t, m) }).collect()
}

/// Whether the chordal completion `g + fill_edges` is aligned with `t`:
/// no fill edge touches a depth-`d` vertex of `t`, and fill edges with
/// both ends in `t` join comparable vertices.
///
/// The completion must actually be chordal.
pub fn is_t_aligned(g: &Graph, t: &TreedepthStructure, fill_edges: &[(usize, usize)]) -> Result<bool> {
    let completed = g.with_edges(fill_edges);
    if !crate::recognition::is_chordal(&completed) {
        return Err(Error::Domain("fill edges do not give a chordal completion".into()));
    }
    for &(u, v) in fill_edges {
        if (t.contains(u) && t.depth[u] == t.d) || (t.contains(v) && t.depth[v] == t.d) {
            return Ok(false);
        }
        if t.contains(u) && t.contains(v) && !t.comparable(u, v) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A superset of some target set that adds a bounded number of structure
/// vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Container {
    pub set: VertexSet,
    pub defect: usize,
}

impl Container {
    /// Certifies `cand` as a container for `s` with respect to `t`.
    pub fn certify(s: &VertexSet, cand: &VertexSet, t: &TreedepthStructure) -> Option<Container> {
        container_defect(s, cand, t).map(|defect| Container { set: cand.clone(), defect })
    }
}

/// Defect of `cand` as a container for `s` with respect to `t`: the number
/// of extra structure vertices, or `None` when `cand` does not contain `s`.
pub fn container_defect(s: &VertexSet, cand: &VertexSet, t: &TreedepthStructure) -> Option<usize> {
    if !s.is_subset(cand) {
        return None;
    }
    Some(cand.intersection(&t.vertices).len() - s.intersection(&t.vertices).len())
}

/// Conclusion of the maximality lemma: every vertex of `omega` outside the
/// structure has a neighbor in the structure outside `omega`.
pub fn check_maximality_neighbor_property(
    g: &Graph,
    t: &TreedepthStructure,
    omega: &VertexSet,
) -> bool {
    let t_minus_omega = t.vertices.minus(omega);
    omega.minus(&t.vertices).iter().all(|v| g.neighbors(v).intersects(&t_minus_omega))
}

/// Exact treedepth by recursion over components with memoization.
/// Capped at 14 vertices.
pub fn treedepth(g: &Graph) -> Result<usize> {
    const CAP: usize = 14;
    if g.n() > CAP {
        return Err(Error::Capability { what: "treedepth", limit: CAP, got: g.n() });
    }
    let mut memo: HashMap<VertexSet, usize> = HashMap::new();
    Ok(td_rec(g, &g.full_set(), &mut memo))
}

fn td_rec(g: &Graph, s: &VertexSet, memo: &mut HashMap<VertexSet, usize>) -> usize {
    if s.is_empty() {
        return 0;
    }
    if let Some(&v) = memo.get(s) {
        return v;
    }
    let comps = g.components(s);
    let result = if comps.len() > 1 {
        comps.iter().map(|c| td_rec(g, c, memo)).max().unwrap()
    } else {
        let mut best = usize::MAX;
        for v in s.iter() {
            let mut rest = s.clone();
            rest.remove(v);
            best = best.min(1 + td_rec(g, &rest, memo));
            if best == 1 {
                break;
            }
        }
        best
    };
    memo.insert(s.clone(), result);
    result
}

/// Exact treewidth through the block dynamic program over all PMCs.
pub fn treewidth(g: &Graph) -> Result<usize> {
    crate::solver::treewidth_via_blocks(g)
}

/// Degeneracy by min-degree peeling; any size.
pub fn degeneracy(g: &Graph) -> usize {
    let mut alive = g.full_set();
    let mut best = 0usize;
    while !alive.is_empty() {
        let v = alive
            .iter()
            .min_by_key(|&v| (g.neighbors(v).intersection(&alive).len(), v))
            .unwrap();
        best = best.max(g.neighbors(v).intersection(&alive).len());
        alive.remove(v);
    }
    best
}

/// An explicit tree decomposition: nodes with parent pointers and bags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    /// Parent per node; exactly one root per tree component.
    pub node_parent: Vec<Option<usize>>,
    pub bags: Vec<VertexSet>,
}

impl TreeDecomposition {
    pub fn width(&self) -> usize {
        self.bags.iter().map(|b| b.len()).max().unwrap_or(1).saturating_sub(1)
    }

    /// Checks the three decomposition conditions against `g`.
    pub fn is_valid(&self, g: &Graph) -> bool {
        if self.bags.is_empty() || self.node_parent.len() != self.bags.len() {
            return g.n() == 0;
        }
        // Every vertex in at least one bag, with a connected bag set.
        for v in 0..g.n() {
            let holders: Vec<usize> =
                (0..self.bags.len()).filter(|&i| self.bags[i].contains(v)).collect();
            if holders.is_empty() {
                return false;
            }
            // Connectivity in the tree: every non-least holder must reach
            // the holder set by its parent edge within the holder set.
            let set: alloc::collections::BTreeSet<usize> = holders.iter().copied().collect();
            let mut reached = alloc::collections::BTreeSet::new();
            reached.insert(holders[0]);
            let mut changed = true;
            while changed {
                changed = false;
                for &h in &set {
                    if reached.contains(&h) {
                        continue;
                    }
                    if let Some(p) = self.node_parent[h] {
                        if reached.contains(&p) && set.contains(&p) {
                            reached.insert(h);
                            changed = true;
                        }
                    }
                    if self
                        .node_parent
                        .iter()
                        .enumerate()
                        .any(|(c, &p)| p == Some(h) && reached.contains(&c) && set.contains(&c))
                    {
                        reached.insert(h);
                        changed = true;
                    }
                }
            }
            if reached.len() != set.len() {
                return false;
            }
        }
        // Every edge inside some bag.
        g.edges().iter().all(|&(u, v)| {
            self.bags.iter().any(|b| b.contains(u) && b.contains(v))
        })
    }
}

/// Clique tree of a chordal graph: bags are the maximal cliques, linked
/// along a perfect elimination ordering. Errors if `g` is not chordal.
pub fn clique_tree(g: &Graph) -> Result<TreeDecomposition> {
    if !crate::recognition::is_chordal(g) {
        return Err(Error::Domain("clique_tree needs a chordal graph".into()));
    }
    if g.n() == 0 {
        return Ok(TreeDecomposition { node_parent: vec![], bags: vec![] });
    }
    // Bags: for each vertex in PEO, its closed later-neighborhood; keep
    // inclusion-maximal ones and wire each bag to a bag containing its
    // "later" part.
    let pmcs = crate::pmc::enumerate_pmcs(g);
    let cliques: Vec<VertexSet> = pmcs
        .into_iter()
        .map(|p| p.vertices)
        .filter(|c| g.is_clique(c))
        .collect();
    // Maximal cliques of a chordal graph are exactly its PMCs that are
    // cliques; link them greedily along shared separators.
    let k = cliques.len();
    let mut node_parent = vec![None; k];
    let mut in_tree = vec![false; k];
    in_tree[0] = true;
    for _ in 1..k {
        // Attach the clique with the largest intersection with the tree.
        let mut best: Option<(usize, usize, usize)> = None; // (overlap, node, host)
        for i in 0..k {
            if in_tree[i] {
                continue;
            }
            for j in 0..k {
                if !in_tree[j] {
                    continue;
                }
                let ov = cliques[i].intersection(&cliques[j]).len();
                if best.is_none_or(|(b, ..)| ov > b) {
                    best = Some((ov, i, j));
                }
            }
        }
        let (_, node, host) = best.unwrap();
        node_parent[node] = Some(host);
        in_tree[node] = true;
    }
    Ok(TreeDecomposition { node_parent, bags: cliques })
}
