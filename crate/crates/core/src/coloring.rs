//! Constructive chi-bounding coloring for `P_t`-free graphs.
//!
//! The construction walks an induced path `v_1 - v_2 - ...` into the graph:
//! bag `i` collects `N(v_i)` inside the active component, the walk recurses
//! into the components left over, and every bag has clique number strictly
//! below the whole graph, so bags are colored recursively with disjoined
//! palettes per path position. A `P_t`-free graph never lets the path reach
//! `t` vertices, which caps the palette count at
//! `(t-1)^(omega-1)`. If the input was not `P_t`-free after all, the walk
//! itself may produce an induced `P_t`, which is returned as a witness.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

/// A proper coloring; colors are `0..num_colors`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    pub color_of: Vec<usize>,
    pub num_colors: usize,
}

impl Coloring {
    pub fn is_proper(&self, g: &Graph) -> bool {
        g.edges().iter().all(|&(u, v)| self.color_of[u] != self.color_of[v])
    }
}

/// Color classes in palette order; they partition `V(G)` and each one is
/// an independent set.
pub fn color_classes(g: &Graph, c: &Coloring) -> Vec<VertexSet> {
    let mut classes = vec![g.empty_set(); c.num_colors];
    for (v, &col) in c.color_of.iter().enumerate() {
        classes[col].insert(v);
    }
    classes
}

/// Proper coloring of a `P_t`-free graph with at most `(t-1)^(omega-1)`
/// colors. If the walk uncovers an induced `P_t`, the input violated the
/// precondition and the path is returned as a witness instead.
pub fn gyarfas_coloring(g: &Graph, t: usize) -> Result<Coloring> {
    assert!(t >= 2, "path length bound must be at least 2");
    let mut color_of = vec![usize::MAX; g.n()];
    let num_colors = color_within(g, &g.full_set(), t, &mut color_of)?;
    debug_assert!(color_of.iter().all(|&c| c < num_colors));
    Ok(Coloring { color_of, num_colors })
}

/// Colors `g[within]` into `color_of`, returning the number of colors used
/// (colors are `0..returned` within this call).
fn color_within(g: &Graph, within: &VertexSet, t: usize, color_of: &mut [usize]) -> Result<usize> {
    if within.is_empty() {
        return Ok(0);
    }
    // One bag per path position, shared by all branches: bags of equal
    // position are pairwise anticomplete, so a joint recursive coloring is
    // proper, and every bag component sits inside some N(v), dropping the
    // clique number.
    let mut bags: Vec<VertexSet> = Vec::new();
    let mut roots: Vec<usize> = Vec::new();
    // Branch: the active component, the component it split from, and the
    // induced path walked so far.
    struct Branch {
        active: VertexSet,
        parent_active: VertexSet,
        path: Vec<usize>,
    }
    let mut queue: Vec<Branch> = Vec::new();

    for comp in g.components(within) {
        let v1 = comp.min_vertex().unwrap();
        roots.push(v1);
        let w1 = g.neighbors(v1).intersection(&comp);
        if w1.is_empty() {
            continue; // isolated vertex
        }
        push_bag(&mut bags, 1, &w1);
        let mut rest = comp.clone();
        rest.minus_in_place(&w1);
        rest.remove(v1);
        for active in g.components(&rest) {
            queue.push(Branch { active, parent_active: comp.clone(), path: vec![v1] });
        }
    }

    while let Some(Branch { active, parent_active, path }) = queue.pop() {
        // The next path vertex: a neighbor of the active component inside
        // the parent component; it is automatically adjacent to the last
        // path vertex and non-adjacent to all earlier ones.
        let attach = g.neighborhood(&active, false).intersection(&parent_active);
        let u = attach.min_vertex().expect("active component must touch its parent");
        let mut new_path = path;
        new_path.push(u);
        if new_path.len() == t {
            debug_assert!(
                crate::recognition::InducedPath { vertices: new_path.clone() }.is_valid(g)
            );
            return Err(Error::PathWitness { what: "gyarfas_coloring on a non-P_t-free graph", path: new_path });
        }
        let w = g.neighbors(u).intersection(&active);
        push_bag(&mut bags, new_path.len(), &w);
        let rest = active.minus(&w);
        for next_active in g.components(&rest) {
            queue.push(Branch {
                active: next_active,
                parent_active: active.clone(),
                path: new_path.clone(),
            });
        }
    }

    // Color each bag recursively with its own palette slice.
    let mut total = 0usize;
    let mut offsets = Vec::with_capacity(bags.len());
    for bag in &bags {
        offsets.push(total);
        let used = color_within(g, bag, t, color_of)?;
        for v in bag.iter() {
            color_of[v] += total;
        }
        total += used;
    }
    // Roots: anticomplete to everything past their own first bag, so they
    // reuse the first color of bag 2 when it exists.
    if bags.len() >= 2 {
        for &r in &roots {
            color_of[r] = offsets[1];
        }
    } else {
        for &r in &roots {
            color_of[r] = total;
        }
        total += 1;
    }
    Ok(total)
}

fn push_bag(bags: &mut Vec<VertexSet>, position: usize, w: &VertexSet) {
    while bags.len() < position {
        bags.push(VertexSet::empty(w.width()));
    }
    bags[position - 1].union_in_place(w);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bound(t: usize, omega: usize) -> usize {
        (t - 1).pow(omega.saturating_sub(1) as u32)
    }

    #[test]
    fn edgeless_gets_one_color() {
        let g = Graph::empty(5);
        let c = gyarfas_coloring(&g, 7).unwrap();
        assert_eq!(c.num_colors, 1);
        assert!(c.is_proper(&g));
        let classes = color_classes(&g, &c);
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0], g.full_set());
    }

    #[test]
    fn proper_and_within_bound_on_small_zoo() {
        let zoo = [
            Graph::cycle(6),
            Graph::cycle(4),
            Graph::complete(4),
            Graph::complete_bipartite(3, 4),
            Graph::path(6),
            Graph::from_edges(7, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6)]),
        ];
        for g in zoo {
            let omega = g.clique_number().unwrap();
            for t in [6, 7] {
                if crate::recognition::find_induced_path(&g, t).is_some() {
                    continue;
                }
                let c = gyarfas_coloring(&g, t).unwrap();
                assert!(c.is_proper(&g), "{:?}", g.edges());
                assert!(c.num_colors <= bound(t, omega), "{} > {}", c.num_colors, bound(t, omega));
                // Classes partition V and are independent.
                let classes = color_classes(&g, &c);
                let mut cover = g.empty_set();
                for class in &classes {
                    assert!(g.is_independent(class));
                    assert!(!class.intersects(&cover));
                    cover.union_in_place(class);
                }
                assert_eq!(cover, g.full_set());
            }
        }
    }

    #[test]
    fn witness_on_p_t_containing_input() {
        let p8 = Graph::path(8);
        match gyarfas_coloring(&p8, 7) {
            Err(Error::PathWitness { path, .. }) => {
                assert_eq!(path.len(), 7);
                assert!(crate::recognition::InducedPath { vertices: path }.is_valid(&p8));
            }
            other => panic!("expected witness, got {:?}", other),
        }
    }

    #[test]
    fn triangle_free_p7_free_uses_at_most_six() {
        // C6 blowup: independent blobs on a C6 quotient stay P7-free and
        // triangle-free.
        let mut b = crate::graph::GraphBuilder::new(9);
        // blobs: {0,1} {2} {3,4} {5} {6,7} {8} around a hexagon
        let blobs: [&[usize]; 6] = [&[0, 1], &[2], &[3, 4], &[5], &[6, 7], &[8]];
        for i in 0..6 {
            for &x in blobs[i] {
                for &y in blobs[(i + 1) % 6] {
                    b.add_edge(x, y);
                }
            }
        }
        let g = b.build();
        assert!(crate::recognition::is_pt_free(&g, 7));
        assert_eq!(g.clique_number().unwrap(), 2);
        let c = gyarfas_coloring(&g, 7).unwrap();
        assert!(c.is_proper(&g));
        assert!(c.num_colors <= 6);
    }
}
