//! Modules, the maximal-modules partition and quotient graphs.
//!
//! A module is a nonempty vertex set whose members are indistinguishable
//! from outside: every other vertex is complete or anticomplete to it. For
//! any graph on at least two vertices the maximal proper strong modules
//! partition the vertex set; the quotient by that partition is edgeless,
//! complete, or prime (Gallai). Computation here is the simple cubic-ish
//! closure, which is all the instance sizes in this crate call for.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};
use crate::set::VertexSet;

/// Disjoint modules covering `V(G)`; produced by [`maximal_modules`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModulePartition {
    pub blocks: Vec<VertexSet>,
}

/// Whether `m` is a module of `g`: every outside vertex is complete or
/// anticomplete to `m`. `m` must be nonempty.
pub fn is_module(g: &Graph, m: &VertexSet) -> bool {
    assert!(!m.is_empty(), "modules are nonempty");
    let outside = m.complement();
    outside.iter().all(|v| {
        let hits = g.neighbors(v).intersection(m).len();
        hits == 0 || hits == m.len()
    })
}

/// Smallest module of `g` containing `seed`: closes `seed` under splitters.
pub fn module_closure(g: &Graph, seed: &VertexSet) -> VertexSet {
    let mut m = seed.clone();
    loop {
        let outside = m.complement();
        let splitter = outside.iter().find(|&v| {
            let hits = g.neighbors(v).intersection(&m).len();
            hits != 0 && hits != m.len()
        });
        match splitter {
            Some(v) => m.insert(v),
            None => return m,
        }
    }
}

/// The unique partition of `V(G)` into maximal proper strong modules.
///
/// Requires `n >= 2`. For a disconnected graph these are the components,
/// for a co-disconnected graph the anticomponents; otherwise Gallai's
/// theorem makes "the maximal proper module containing v" well defined and
/// it is recovered from pairwise module closures.
pub fn maximal_modules(g: &Graph) -> Result<ModulePartition> {
    let n = g.n();
    if n < 2 {
        return Err(Error::Domain(alloc::format!(
            "maximal modules need at least 2 vertices, got {}",
            n
        )));
    }
    let everything = g.full_set();
    let comps = g.components(&everything);
    if comps.len() > 1 {
        return Ok(ModulePartition { blocks: comps });
    }
    let anticomps = g.anticomponents(&everything);
    if anticomps.len() > 1 {
        return Ok(ModulePartition { blocks: anticomps });
    }
    // Prime case: every proper module containing v lies inside the unique
    // maximal one, so u belongs to it iff closure({v,u}) stays proper.
    let mut blocks = Vec::new();
    let mut assigned = g.empty_set();
    for v in 0..n {
        if assigned.contains(v) {
            continue;
        }
        let mut block = VertexSet::singleton(n, v);
        for u in 0..n {
            if u == v || assigned.contains(u) {
                continue;
            }
            let closure = module_closure(g, &g.vertex_set([v, u]));
            if closure.len() < n {
                block.insert(u);
            }
        }
        assigned.union_in_place(&block);
        blocks.push(block);
    }
    Ok(ModulePartition { blocks })
}

/// Quotient of `g` by disjoint modules: one vertex per block, blocks
/// adjacent iff complete in `g`; a quotient vertex weighs the block sum.
///
/// Blocks must be pairwise disjoint modules covering `V(G)`.
pub fn quotient(g: &Graph, parts: &ModulePartition) -> Result<Graph> {
    let mut covered = g.empty_set();
    for block in &parts.blocks {
        if block.intersects(&covered) {
            return Err(Error::Domain("quotient blocks overlap".into()));
        }
        if !is_module(g, block) {
            return Err(Error::Domain(alloc::format!(
                "quotient block {:?} is not a module",
                block
            )));
        }
        covered.union_in_place(block);
    }
    if covered.len() != g.n() {
        return Err(Error::Domain("quotient blocks do not cover the graph".into()));
    }

    let k = parts.blocks.len();
    let mut b = GraphBuilder::new(k);
    for i in 0..k {
        for j in i + 1..k {
            let u = parts.blocks[i].min_vertex().unwrap();
            let v = parts.blocks[j].min_vertex().unwrap();
            // Modules are complete or anticomplete to each other, so one
            // representative edge decides the block adjacency.
            if g.has_edge(u, v) {
                b.add_edge(i, j);
            }
        }
    }
    for (i, block) in parts.blocks.iter().enumerate() {
        b.set_weight(i, g.set_weight_sum(block))?;
    }
    Ok(b.build())
}
