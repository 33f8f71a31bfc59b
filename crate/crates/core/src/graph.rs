//! Immutable weighted graphs with bit-row adjacency.
//!
//! Vertices are dense `0..n` indices, adjacency is one [`VertexSet`] per
//! vertex, and all set algebra runs on 64-bit words. Graphs are immutable
//! after construction; edge additions return new graphs. Everything is
//! `Send + Sync` and all operations are pure.

use alloc::vec;
use alloc::vec::Vec;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::set::VertexSet;

/// Hard cap on the supported vertex count.
pub const MAX_VERTICES: usize = 512;

/// Exact rational vertex weight.
pub type Weight = BigRational;

/// An immutable undirected graph with optional positive rational weights.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    weights: Vec<Weight>,
}

impl core::fmt::Debug for Graph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.edge_count())
    }
}

/// Mutable construction façade for [`Graph`].
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    n: usize,
    adj: Vec<VertexSet>,
    weights: Vec<Weight>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "at most {} vertices supported, got {}", MAX_VERTICES, n);
        GraphBuilder {
            n,
            adj: vec![VertexSet::empty(n); n],
            weights: vec![Weight::one(); n],
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> &mut Self {
        assert!(u < self.n && v < self.n && u != v, "bad edge ({}, {})", u, v);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        self
    }

    /// Sets a vertex weight; must be strictly positive.
    pub fn set_weight(&mut self, v: usize, w: Weight) -> Result<&mut Self> {
        if w <= Weight::zero() {
            return Err(Error::Domain(alloc::format!("weight of vertex {} must be positive", v)));
        }
        self.weights[v] = w;
        Ok(self)
    }

    pub fn build(self) -> Graph {
        Graph { n: self.n, adj: self.adj, weights: self.weights }
    }
}

impl Graph {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Graph {
        let mut b = GraphBuilder::new(n);
        for &(u, v) in edges {
            b.add_edge(u, v);
        }
        b.build()
    }

    pub fn empty(n: usize) -> Graph {
        GraphBuilder::new(n).build()
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges)
    }

    pub fn complete(n: usize) -> Graph {
        let mut b = GraphBuilder::new(n);
        for u in 0..n {
            for v in u + 1..n {
                b.add_edge(u, v);
            }
        }
        b.build()
    }

    /// Complete bipartite graph; side one is `0..a`, side two is `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut g = GraphBuilder::new(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v);
            }
        }
        g.build()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.len()).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Adjacency row of `v` (its open neighborhood).
    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn weight(&self, v: usize) -> &Weight {
        &self.weights[v]
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn set_weight_sum(&self, s: &VertexSet) -> Weight {
        s.iter().map(|v| self.weights[v].clone()).fold(Weight::zero(), |a, b| a + b)
    }

    pub fn is_unit_weighted(&self) -> bool {
        self.weights.iter().all(|w| w.is_one())
    }

    pub fn full_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::empty(self.n)
    }

    pub fn vertex_set<I: IntoIterator<Item = usize>>(&self, iter: I) -> VertexSet {
        VertexSet::from_indices(self.n, iter)
    }

    /// Returns a copy of this graph with the given extra edges.
    pub fn with_edges(&self, extra: &[(usize, usize)]) -> Graph {
        let mut g = self.clone();
        for &(u, v) in extra {
            assert!(u < g.n && v < g.n && u != v, "bad edge ({}, {})", u, v);
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        g
    }

    /// Open (`closed = false`) or closed neighborhood of a vertex set.
    ///
    /// Open: `(⋃_{v∈s} N(v)) \ s`; closed: `⋃_{v∈s} N[v]`.
    pub fn neighborhood(&self, s: &VertexSet, closed: bool) -> VertexSet {
        assert_eq!(s.width(), self.n, "vertex-set width mismatch");
        let mut acc = self.empty_set();
        for v in s.iter() {
            acc.union_in_place(&self.adj[v]);
        }
        if closed {
            acc.union_in_place(s);
        } else {
            acc.minus_in_place(s);
        }
        acc
    }

    /// Connected components of the subgraph induced by `within`, ordered by
    /// minimum vertex index.
    pub fn components(&self, within: &VertexSet) -> Vec<VertexSet> {
        assert_eq!(within.width(), self.n, "vertex-set width mismatch");
        let mut out = Vec::new();
        let mut unseen = within.clone();
        while let Some(start) = unseen.min_vertex() {
            let mut comp = self.empty_set();
            let mut frontier = VertexSet::singleton(self.n, start);
            while !frontier.is_empty() {
                comp.union_in_place(&frontier);
                let mut next = self.neighborhood(&frontier, false);
                next.intersect_in_place(within);
                next.minus_in_place(&comp);
                frontier = next;
            }
            unseen.minus_in_place(&comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self, within: &VertexSet) -> bool {
        if within.is_empty() {
            return true;
        }
        self.components(within).len() == 1
    }

    /// Components of the complement of `g[within]`, ordered by minimum
    /// vertex index. The complement is never materialized.
    pub fn anticomponents(&self, within: &VertexSet) -> Vec<VertexSet> {
        assert_eq!(within.width(), self.n, "vertex-set width mismatch");
        let mut out = Vec::new();
        let mut unseen = within.clone();
        while let Some(start) = unseen.min_vertex() {
            let mut comp = self.empty_set();
            let mut frontier = VertexSet::singleton(self.n, start);
            while !frontier.is_empty() {
                comp.union_in_place(&frontier);
                // Complement-neighbors of the frontier inside `within`.
                let mut next = self.empty_set();
                for v in frontier.iter() {
                    let mut non = self.adj[v].complement();
                    non.remove(v);
                    next.union_in_place(&non);
                }
                next.intersect_in_place(within);
                next.minus_in_place(&comp);
                frontier = next;
            }
            unseen.minus_in_place(&comp);
            out.push(comp);
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let mut adj = Vec::with_capacity(self.n);
        for v in 0..self.n {
            let mut row = self.adj[v].complement();
            row.remove(v);
            adj.push(row);
        }
        Graph { n: self.n, adj, weights: self.weights.clone() }
    }

    /// Whether `a` is complete to `b`: every `a`-vertex adjacent to every
    /// `b`-vertex. Overlapping vertices are not allowed.
    pub fn is_complete_between(&self, a: &VertexSet, b: &VertexSet) -> bool {
        debug_assert!(a.is_disjoint(b));
        a.iter().all(|v| b.is_subset(&self.adj[v]))
    }

    pub fn is_anticomplete_between(&self, a: &VertexSet, b: &VertexSet) -> bool {
        a.iter().all(|v| !self.adj[v].intersects(b))
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| {
            let mut rest = s.clone();
            rest.remove(v);
            rest.is_subset(&self.adj[v])
        })
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| !self.adj[v].intersects(s))
    }

    /// Exact clique number by branch and bound with a greedy coloring
    /// bound. Capped at 64 vertices.
    pub fn clique_number(&self) -> Result<usize> {
        const CAP: usize = 64;
        if self.n > CAP {
            return Err(Error::Capability { what: "clique_number", limit: CAP, got: self.n });
        }
        if self.n == 0 {
            return Ok(0);
        }
        let mut best = 0usize;
        let mut current = Vec::new();
        self.max_clique_rec(&self.full_set(), &mut current, &mut best);
        Ok(best)
    }

    fn max_clique_rec(&self, cand: &VertexSet, current: &mut Vec<usize>, best: &mut usize) {
        if cand.is_empty() {
            *best = (*best).max(current.len());
            return;
        }
        // Greedy coloring of the candidates; color count bounds the clique.
        let verts = cand.to_vec();
        let mut color = vec![0usize; verts.len()];
        let mut color_masks: Vec<VertexSet> = Vec::new();
        for (i, &v) in verts.iter().enumerate() {
            let mut c = 0;
            while c < color_masks.len() && color_masks[c].intersects(&self.adj[v]) {
                c += 1;
            }
            if c == color_masks.len() {
                color_masks.push(self.empty_set());
            }
            color_masks[c].insert(v);
            color[i] = c + 1;
        }
        if current.len() + color_masks.len() <= *best {
            return;
        }
        // Branch in decreasing color order.
        let mut order: Vec<usize> = (0..verts.len()).collect();
        order.sort_by_key(|&i| core::cmp::Reverse(color[i]));
        let mut remaining = cand.clone();
        for i in order {
            let v = verts[i];
            if !remaining.contains(v) {
                continue;
            }
            if current.len() + color[i] <= *best {
                break;
            }
            current.push(v);
            let next = remaining.intersection(&self.adj[v]);
            self.max_clique_rec(&next, current, best);
            current.pop();
            remaining.remove(v);
        }
        *best = (*best).max(current.len());
    }

    /// Whether `g[within]` is a cograph, i.e. free of induced `P4`.
    pub fn is_cograph(&self, within: &VertexSet) -> bool {
        crate::recognition::find_induced_path_within(self, within, 4).is_none()
    }

    /// Induced subgraph on `within` with dense re-indexing; returns the
    /// new graph and the new-index-to-old-index map.
    pub fn induced(&self, within: &VertexSet) -> (Graph, Vec<usize>) {
        let map = within.to_vec();
        let mut b = GraphBuilder::new(map.len());
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    b.add_edge(i, j);
                }
            }
            b.set_weight(i, self.weights[u].clone()).expect("weights stay positive");
        }
        (b.build(), map)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn neighborhood_open_and_closed() {
        let g = Graph::path(3);
        let s = g.vertex_set([1]);
        assert_eq!(g.neighborhood(&s, false).to_vec(), vec![0, 2]);
        assert_eq!(g.neighborhood(&s, true).to_vec(), vec![0, 1, 2]);
        let empty = g.empty_set();
        assert!(g.neighborhood(&empty, false).is_empty());
    }

    #[test]
    fn components_small_cases() {
        let g = Graph::empty(3);
        assert_eq!(g.components(&g.full_set()).len(), 3);

        let c6 = Graph::cycle(6);
        let mut within = c6.full_set();
        within.remove(0);
        let comps = c6.components(&within);
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].len(), 5);
    }

    #[test]
    fn clique_numbers() {
        assert_eq!(Graph::complete(3).clique_number().unwrap(), 3);
        assert_eq!(Graph::cycle(5).clique_number().unwrap(), 2);
        assert_eq!(Graph::empty(4).clique_number().unwrap(), 1);
        assert_eq!(Graph::empty(0).clique_number().unwrap(), 0);
        assert!(Graph::empty(65).clique_number().is_err());
    }

    #[test]
    fn cograph_examples() {
        let p4 = Graph::path(4);
        assert!(!p4.is_cograph(&p4.full_set()));
        let k4 = Graph::complete(4);
        assert!(k4.is_cograph(&k4.full_set()));
    }

    fn arbitrary_graph(n: usize) -> impl Strategy<Value = Graph> {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        proptest::collection::vec(proptest::bool::ANY, pairs.len()).prop_map(move |mask| {
            let edges: Vec<_> =
                pairs.iter().zip(&mask).filter(|(_, &m)| m).map(|(&e, _)| e).collect();
            Graph::from_edges(n, &edges)
        })
    }

    proptest! {
        #[test]
        fn neighborhood_agrees_with_naive_loop(g in arbitrary_graph(10), bits in proptest::collection::vec(proptest::bool::ANY, 10)) {
            let s = g.vertex_set((0..10).filter(|&v| bits[v]));
            let open = g.neighborhood(&s, false);
            // Naive double loop.
            let mut naive = g.empty_set();
            for v in s.iter() {
                for u in 0..10 {
                    if g.has_edge(v, u) {
                        naive.insert(u);
                    }
                }
            }
            naive.minus_in_place(&s);
            prop_assert_eq!(open.clone(), naive);
            prop_assert!(!open.intersects(&s));
        }

        #[test]
        fn components_agree_with_union_find(g in arbitrary_graph(12)) {
            let comps = g.components(&g.full_set());
            // Union-find oracle.
            let mut parent: Vec<usize> = (0..12).collect();
            fn find(p: &mut Vec<usize>, x: usize) -> usize {
                if p[x] != x { let r = find(p, p[x]); p[x] = r; }
                p[x]
            }
            for (u, v) in g.edges() {
                let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                if ru != rv { parent[ru] = rv; }
            }
            let mut roots: Vec<usize> = (0..12).map(|v| find(&mut parent, v)).collect();
            roots.sort_unstable();
            roots.dedup();
            prop_assert_eq!(comps.len(), roots.len());
            // Blocks are pairwise anticomplete and internally connected.
            for (i, a) in comps.iter().enumerate() {
                prop_assert!(g.is_connected(a));
                for b in comps.iter().skip(i + 1) {
                    prop_assert!(g.is_anticomplete_between(a, b));
                }
            }
        }

        #[test]
        fn complement_involution(g in arbitrary_graph(9)) {
            prop_assert_eq!(g.complement().complement(), g);
        }

        #[test]
        fn clique_number_agrees_with_subset_oracle(g in arbitrary_graph(12)) {
            let exact = g.clique_number().unwrap();
            let mut best = 0usize;
            for mask in 0u32..(1 << 12) {
                let s = g.vertex_set((0..12).filter(|&v| mask >> v & 1 == 1));
                if g.is_clique(&s) {
                    best = best.max(s.len());
                }
            }
            prop_assert_eq!(exact, best);
        }
    }
}
