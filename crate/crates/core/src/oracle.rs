//! Independent brute-force ground truth and seeded instance generators.
//!
//! Everything here is deliberately naive: subset scans, branch and bound
//! with a trivial bound, elimination-order fill-ins. Oracles certify the
//! real enumerators and solvers, so they share nothing with them beyond
//! the graph primitives.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, Weight};
use crate::set::VertexSet;

fn cap(what: &'static str, limit: usize, n: usize) -> Result<()> {
    if n > limit {
        return Err(Error::Capability { what, limit, got: n });
    }
    Ok(())
}

fn scaled_weights(g: &Graph) -> (Vec<BigInt>, BigInt) {
    let mut denom = BigInt::one();
    for w in g.weights() {
        denom = denom.lcm(w.denom());
    }
    (g.weights().iter().map(|w| w.numer() * (&denom / w.denom())).collect(), denom)
}

/// Exact MWIS by branch and bound with the remaining-weight bound.
/// Supports up to 20 vertices.
pub fn oracle_mwis(g: &Graph) -> Result<(Weight, VertexSet)> {
    cap("oracle_mwis", 20, g.n())?;
    let (ws, denom) = scaled_weights(g);
    let mut best = (BigInt::zero() - BigInt::one(), g.empty_set());
    let mut current = g.empty_set();
    fn rec(
        g: &Graph,
        ws: &[BigInt],
        pool: VertexSet,
        acc: BigInt,
        current: &mut VertexSet,
        best: &mut (BigInt, VertexSet),
    ) {
        let rest: BigInt = pool.iter().map(|v| ws[v].clone()).sum();
        if &acc + &rest <= best.0 {
            return;
        }
        // Max-degree pivot, ties by least index.
        let pivot = pool
            .iter()
            .max_by_key(|&v| (g.neighbors(v).intersection(&pool).len(), core::cmp::Reverse(v)));
        match pivot {
            None => {
                if acc > best.0 {
                    *best = (acc, current.clone());
                }
            }
            Some(v) => {
                // include v
                current.insert(v);
                let mut without_nv = pool.clone();
                without_nv.minus_in_place(g.neighbors(v));
                without_nv.remove(v);
                rec(g, ws, without_nv, acc.clone() + ws[v].clone(), current, best);
                current.remove(v);
                // exclude v
                let mut without_v = pool;
                without_v.remove(v);
                rec(g, ws, without_v, acc, current, best);
            }
        }
    }
    rec(g, &ws, g.full_set(), BigInt::zero(), &mut current, &mut best);
    Ok((Weight::new(best.0, denom), best.1))
}

fn best_subset_by(
    g: &Graph,
    keep: impl Fn(&VertexSet) -> bool,
) -> (Weight, VertexSet) {
    let n = g.n();
    let (ws, denom) = scaled_weights(g);
    let mut best: Option<(BigInt, VertexSet)> = None;
    for mask in 0u32..(1u32 << n) {
        let s = g.vertex_set((0..n).filter(|&v| mask >> v & 1 == 1));
        if !keep(&s) {
            continue;
        }
        let w: BigInt = s.iter().map(|v| ws[v].clone()).sum();
        let replace = match &best {
            None => true,
            Some((bw, bwit)) => w > *bw || (w == *bw && s < *bwit),
        };
        if replace {
            best = Some((w, s));
        }
    }
    let (w, s) = best.unwrap();
    (Weight::new(w, denom), s)
}

/// Exact maximum-weight induced forest by a full subset scan; up to 14
/// vertices.
pub fn oracle_induced_forest(g: &Graph) -> Result<(Weight, VertexSet)> {
    cap("oracle_induced_forest", 14, g.n())?;
    Ok(best_subset_by(g, |s| {
        let m: usize = s.iter().map(|v| g.neighbors(v).intersection(s).len()).sum::<usize>() / 2;
        m + g.components(s).len() == s.len()
    }))
}

/// Exact maximum-weight degree-at-most-`k` induced subgraph; up to 14
/// vertices.
pub fn oracle_max_degree(g: &Graph, k: usize) -> Result<(Weight, VertexSet)> {
    cap("oracle_max_degree", 14, g.n())?;
    Ok(best_subset_by(g, |s| {
        s.iter().all(|v| g.neighbors(v).intersection(s).len() <= k)
    }))
}

/// Definitional PMC list: the two-condition predicate over all nonempty
/// subsets; up to 14 vertices.
pub fn oracle_pmcs(g: &Graph) -> Result<Vec<VertexSet>> {
    cap("oracle_pmcs", 14, g.n())?;
    let n = g.n();
    let mut out = Vec::new();
    for mask in 1u32..(1u32 << n) {
        let s = g.vertex_set((0..n).filter(|&v| mask >> v & 1 == 1));
        if crate::pmc::is_pmc(g, &s) {
            out.push(s);
        }
    }
    out.sort();
    Ok(out)
}

/// Definitional minimal-separator list: the full-component count replayed
/// over all nonempty proper subsets; up to 14 vertices.
pub fn oracle_minseps(g: &Graph) -> Result<Vec<VertexSet>> {
    cap("oracle_minseps", 14, g.n())?;
    let n = g.n();
    let mut out = Vec::new();
    for mask in 1u32..(1u32 << n) {
        if mask == (1u32 << n) - 1 {
            continue;
        }
        let s = g.vertex_set((0..n).filter(|&v| mask >> v & 1 == 1));
        let full = g
            .components(&s.complement())
            .into_iter()
            .filter(|c| g.neighborhood(c, false) == s)
            .count();
        if full >= 2 {
            out.push(s);
        }
    }
    out.sort();
    Ok(out)
}

/// Exact treewidth by the elimination-order subset DP; up to 14 vertices.
pub fn oracle_treewidth(g: &Graph) -> Result<usize> {
    cap("oracle_treewidth", 14, g.n())?;
    let n = g.n();
    if n == 0 {
        return Ok(0);
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, u| m | 1 << u))
        .collect();
    // q(x_mask, v): neighbors of the component of v in x_mask ∪ {v},
    // outside x_mask and v.
    let q = |x: u32, v: usize| -> u32 {
        let mut reach = 1u32 << v;
        loop {
            let mut grow = reach;
            let mut scan = reach;
            while scan != 0 {
                let u = scan.trailing_zeros() as usize;
                scan &= scan - 1;
                grow |= adj[u] & (x | 1 << v);
            }
            if grow == reach {
                break;
            }
            reach = grow;
        }
        let mut nb = 0u32;
        let mut scan = reach;
        while scan != 0 {
            let u = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            nb |= adj[u];
        }
        (nb & !x) & !(1 << v)
    };
    let full = (1u32 << n) - 1;
    let mut f = vec![u8::MAX; 1 << n];
    f[0] = 0;
    for mask in 1u32..=full {
        let mut bestv = u8::MAX;
        let mut scan = mask;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            let prev = mask & !(1 << v);
            let width = q(prev, v).count_ones() as u8;
            bestv = bestv.min(f[prev as usize].max(width));
        }
        f[mask as usize] = bestv;
    }
    Ok(f[full as usize] as usize)
}

/// Maximal cliques by Bron–Kerbosch with pivoting.
pub fn maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    fn bk(g: &Graph, r: &mut VertexSet, p: VertexSet, x: VertexSet, out: &mut Vec<VertexSet>) {
        if p.is_empty() && x.is_empty() {
            out.push(r.clone());
            return;
        }
        let pivot = p
            .union(&x)
            .iter()
            .max_by_key(|&u| (g.neighbors(u).intersection(&p).len(), core::cmp::Reverse(u)))
            .unwrap();
        let mut candidates = p.minus(g.neighbors(pivot));
        let mut p = p;
        let mut x = x;
        while let Some(v) = candidates.min_vertex() {
            candidates.remove(v);
            r.insert(v);
            bk(
                g,
                r,
                p.intersection(g.neighbors(v)),
                x.intersection(g.neighbors(v)),
                out,
            );
            r.remove(v);
            p.remove(v);
            x.insert(v);
        }
    }
    bk(g, &mut g.empty_set(), g.full_set(), g.empty_set(), &mut out);
    out.sort();
    out
}

/// All minimal chordal completions as sorted fill-edge lists; up to 8
/// vertices.
///
/// Every minimal triangulation is the fill-in of some elimination
/// ordering, so scanning all orderings and keeping the inclusion-minimal
/// fills is exhaustive.
pub fn minimal_chordal_completions(g: &Graph) -> Result<Vec<Vec<(usize, usize)>>> {
    cap("minimal_chordal_completions", 8, g.n())?;
    let n = g.n();
    let mut fills: BTreeSet<Vec<(usize, usize)>> = BTreeSet::new();
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, &mut |order| {
        let mut adj: Vec<VertexSet> = (0..n).map(|v| g.neighbors(v).clone()).collect();
        let mut fill: Vec<(usize, usize)> = Vec::new();
        let mut gone = g.empty_set();
        for &v in order {
            let later = adj[v].minus(&gone);
            let verts = later.to_vec();
            for (i, &a) in verts.iter().enumerate() {
                for &b in &verts[i + 1..] {
                    if !adj[a].contains(b) {
                        adj[a].insert(b);
                        adj[b].insert(a);
                        fill.push((a.min(b), a.max(b)));
                    }
                }
            }
            gone.insert(v);
        }
        fill.sort_unstable();
        fills.insert(fill);
    });
    let all: Vec<Vec<(usize, usize)>> = fills.into_iter().collect();
    let minimal: Vec<Vec<(usize, usize)>> = all
        .iter()
        .filter(|f| {
            all.iter().all(|other| {
                other == *f || !other.iter().all(|e| f.contains(e))
            })
        })
        .cloned()
        .collect();
    Ok(minimal)
}

fn permute(perm: &mut Vec<usize>, i: usize, f: &mut impl FnMut(&[usize])) {
    if i == perm.len() {
        f(perm);
        return;
    }
    for j in i..perm.len() {
        perm.swap(i, j);
        permute(perm, i + 1, f);
        perm.swap(i, j);
    }
}

/// PMCs through their definition: maximal cliques over all minimal
/// chordal completions; up to 8 vertices.
pub fn oracle_pmcs_via_triangulations(g: &Graph) -> Result<Vec<VertexSet>> {
    let mut out: BTreeSet<VertexSet> = BTreeSet::new();
    for fill in minimal_chordal_completions(g)? {
        let h = g.with_edges(&fill);
        debug_assert!(crate::recognition::is_chordal(&h));
        for c in maximal_cliques(&h) {
            out.insert(c);
        }
    }
    Ok(out.into_iter().collect())
}

// ---------------------------------------------------------------------------
// generators
// ---------------------------------------------------------------------------

/// Instance kinds produced by [`gen_fixture`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FixtureKind {
    Random,
    ChordalBipartite,
    P7FreeBipartite,
    /// `P7`-free with clique number at most the given bound (>= 2).
    P7FreeBoundedOmega(usize),
}

/// A generated instance with verified class tags.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub graph: Graph,
    /// One side of a bipartition for the bipartite kinds.
    pub side1: Option<VertexSet>,
    pub kind: FixtureKind,
    pub seed: u64,
}

/// Seed-deterministic instance generation with class membership verified
/// by the recognizers (rejection sampling where needed).
pub fn gen_fixture(kind: FixtureKind, n: usize, seed: u64) -> Result<Fixture> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    match kind {
        FixtureKind::Random => {
            let p = [0.2, 0.35, 0.5, 0.7][(seed % 4) as usize];
            let mut b = GraphBuilder::new(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.random_bool(p) {
                        b.add_edge(u, v);
                    }
                }
            }
            Ok(Fixture { graph: b.build(), side1: None, kind, seed })
        }
        FixtureKind::ChordalBipartite => {
            let g = gen_interval_bigraph(n, &mut rng);
            let side1 = crate::recognition::bipartition(&g)
                .ok_or_else(|| Error::InvariantViolation("interval bigraph not bipartite".into()))?;
            if n <= 20 && !crate::recognition::is_chordal_bipartite_direct(&g, &side1)? {
                return Err(Error::InvariantViolation(
                    "interval bigraph failed the chordal-bipartite check".into(),
                ));
            }
            Ok(Fixture { graph: g, side1: Some(side1), kind, seed })
        }
        FixtureKind::P7FreeBipartite => {
            let (g, side1) = gen_p7free_bipartite(n, &mut rng)?;
            debug_assert!(crate::recognition::is_pt_free(&g, 7));
            Ok(Fixture { graph: g, side1: Some(side1), kind, seed })
        }
        FixtureKind::P7FreeBoundedOmega(k) => {
            if k < 2 {
                return Err(Error::Domain("clique bound below 2".into()));
            }
            let apexes = k - 2;
            if n < apexes + 2 {
                return Err(Error::Domain("too few vertices for the clique bound".into()));
            }
            let base_n = n - apexes;
            let (base, _) = gen_p7free_bipartite(base_n, &mut rng)?;
            let mut b = GraphBuilder::new(n);
            for (u, v) in base.edges() {
                b.add_edge(u, v);
            }
            // Apexes are complete to everything: induced paths through one
            // have at most three vertices, so P7-freeness is preserved.
            for a in base_n..n {
                for v in 0..a {
                    b.add_edge(a, v);
                }
            }
            let g = b.build();
            if !crate::recognition::is_pt_free(&g, 7) {
                return Err(Error::InvariantViolation("apexed fixture lost P7-freeness".into()));
            }
            if n <= 64 && g.clique_number()? > k {
                return Err(Error::InvariantViolation("apexed fixture exceeded clique bound".into()));
            }
            Ok(Fixture { graph: g, side1: None, kind, seed })
        }
    }
}

/// Interval bigraph: side-one vertices carry intervals over side two;
/// adjacency is containment of the point in the interval. Interval
/// bigraphs are chordal bipartite.
fn gen_interval_bigraph(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let a = n / 2;
    let b = n - a;
    let mut builder = GraphBuilder::new(n);
    if a == 0 || b == 0 {
        return builder.build();
    }
    let max_len = 1 + rng.random_range(0..4usize);
    for u in 0..a {
        let l = rng.random_range(0..b);
        let r = (l + rng.random_range(0..=max_len)).min(b - 1);
        for j in l..=r {
            builder.add_edge(u, a + j);
        }
    }
    builder.build()
}

/// `P7`-free bipartite instance: structured recipes (independent-set
/// blowups of a hexagon, crown graphs, dominated unions, interval
/// bigraphs) with random edge deletions, re-verified and retried under a
/// rejection budget.
fn gen_p7free_bipartite(n: usize, rng: &mut ChaCha8Rng) -> Result<(Graph, VertexSet)> {
    const BUDGET: usize = 64;
    let mut rejected = 0usize;
    for attempt in 0..BUDGET {
        // The tail of the budget falls back to a plain hexagon blowup
        // without deletions, which is always P7-free and bipartite.
        let fallback = attempt + 4 >= BUDGET;
        let recipe = if n < 6 {
            3
        } else if fallback {
            0
        } else {
            rng.random_range(0..4u32)
        };
        let g = match recipe {
            0 => gen_hexagon_blowup(n, rng),
            1 => gen_crown_plus(n, rng),
            2 => gen_dominated_union(n, rng),
            _ => gen_interval_bigraph(n, rng),
        };
        // Random deletions shake the structure loose; they can create long
        // induced paths, hence the re-check.
        let g = if fallback { g } else { drop_random_edges(&g, rng) };
        if !crate::recognition::is_pt_free(&g, 7) {
            rejected += 1;
            continue;
        }
        match crate::recognition::bipartition(&g) {
            Some(side1) => return Ok((g, side1)),
            None => rejected += 1,
        }
    }
    Err(Error::Domain(alloc::format!(
        "p7-free bipartite generation exhausted its budget ({} rejections)",
        rejected
    )))
}

fn drop_random_edges(g: &Graph, rng: &mut ChaCha8Rng) -> Graph {
    let edges = g.edges();
    if edges.is_empty() {
        return g.clone();
    }
    let keep: Vec<(usize, usize)> = edges
        .into_iter()
        .filter(|_| !rng.random_bool(0.08))
        .collect();
    Graph::from_edges(g.n(), &keep)
}

/// Independent-set blowup of a hexagon: `P7`-free because the quotient
/// C6 is `P6`-free, and rich in induced C6s.
fn gen_hexagon_blowup(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    if n < 6 {
        return gen_interval_bigraph(n, rng);
    }
    let mut sizes = [1usize; 6];
    let mut rest = n.saturating_sub(6);
    while rest > 0 {
        sizes[rng.random_range(0..6usize)] += 1;
        rest -= 1;
    }
    let mut start = [0usize; 6];
    for i in 1..6 {
        start[i] = start[i - 1] + sizes[i - 1];
    }
    let total: usize = sizes.iter().sum();
    let mut b = GraphBuilder::new(total.max(n));
    for i in 0..6 {
        let j = (i + 1) % 6;
        for x in start[i]..start[i] + sizes[i] {
            for y in start[j]..start[j] + sizes[j] {
                b.add_edge(x, y);
            }
        }
    }
    b.build()
}

/// Crown graph (complete bipartite minus a perfect matching) padded with
/// pendant vertices on one host; crowns are `P7`-free and full of induced
/// C6s, and a single pendant host cannot extend an induced path past six
/// vertices.
fn gen_crown_plus(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let k = (n / 2).clamp(1, 8);
    let mut b = GraphBuilder::new(n);
    for i in 0..k {
        for j in 0..k {
            if i != j && k + j < n {
                b.add_edge(i, k + j);
            }
        }
    }
    let host = rng.random_range(0..k);
    for v in (2 * k).min(n)..n {
        b.add_edge(v, host);
    }
    b.build()
}

/// Union of two smaller recipes plus one vertex complete to the opposite
/// side, which keeps the whole thing connected and `P7`-free.
fn gen_dominated_union(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    if n < 8 {
        return gen_hexagon_blowup(n, rng);
    }
    let half = n / 2;
    let g1 = gen_hexagon_blowup(half, rng);
    let g2 = gen_hexagon_blowup(n - half - 1, rng);
    let mut b = GraphBuilder::new(n);
    for (u, v) in g1.edges() {
        b.add_edge(u, v);
    }
    for (u, v) in g2.edges() {
        b.add_edge(half + u, half + v);
    }
    let g_tmp = b.build();
    // The apex joins every vertex on the side opposite to it.
    let side1 = match crate::recognition::bipartition(&g_tmp) {
        Some(s) => s,
        None => return g_tmp,
    };
    let apex = n - 1;
    let mut b = GraphBuilder::new(n);
    for (u, v) in g_tmp.edges() {
        b.add_edge(u, v);
    }
    for v in side1.iter() {
        if v != apex {
            b.add_edge(apex, v);
        }
    }
    b.build()
}

/// The Petersen graph; a handy named non-bipartite fixture.
pub fn petersen() -> Graph {
    let mut b = GraphBuilder::new(10);
    for i in 0..5 {
        b.add_edge(i, (i + 1) % 5); // outer cycle
        b.add_edge(5 + i, 5 + (i + 2) % 5); // inner pentagram
        b.add_edge(i, 5 + i); // spokes
    }
    b.build()
}
