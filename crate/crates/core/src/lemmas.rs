//! Constructive structural helpers on minimal separators of `P7`-free
//! graphs: cograph dominators, small sets whose non-neighbors start long
//! paths into a full component, bounded neighborhood covers around a
//! connected cograph, minima of double partial orders, and verification of
//! `(K, D, L)` almost-container triples.
//!
//! Each constructor follows the combinatorial argument it implements, and
//! each carries a postcondition that the test suite replays on generated
//! separator fixtures. When a comparability step that is guaranteed by
//! `P7`-freeness fails, the input violated the precondition: the routines
//! then hunt for an induced `P7` and return it as a witness.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::separators::MinimalSeparator;
use crate::set::VertexSet;
use crate::treedepth::TreedepthStructure;

/// Two partial orders on `0..len` given as boolean matrices, with every
/// pair comparable in at least one of them.
#[derive(Clone, Debug)]
pub struct TwoOrders {
    pub len: usize,
    pub leq1: Vec<Vec<bool>>,
    pub leq2: Vec<Vec<bool>>,
}

impl TwoOrders {
    pub fn new(len: usize, leq1: Vec<Vec<bool>>, leq2: Vec<Vec<bool>>) -> Self {
        TwoOrders { len, leq1, leq2 }
    }

    fn validate_partial_order(rel: &[Vec<bool>], len: usize, name: &str) -> Result<()> {
        for i in 0..len {
            if !rel[i][i] {
                return Err(Error::Domain(alloc::format!("{} is not reflexive at {}", name, i)));
            }
            for j in 0..len {
                if i != j && rel[i][j] && rel[j][i] {
                    return Err(Error::Domain(alloc::format!(
                        "{} violates antisymmetry on ({}, {})",
                        name, i, j
                    )));
                }
                for k in 0..len {
                    if rel[i][j] && rel[j][k] && !rel[i][k] {
                        return Err(Error::Domain(alloc::format!(
                            "{} violates transitivity on ({}, {}, {})",
                            name, i, j, k
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        Self::validate_partial_order(&self.leq1, self.len, "leq1")?;
        Self::validate_partial_order(&self.leq2, self.len, "leq2")?;
        for i in 0..self.len {
            for j in i + 1..self.len {
                let cmp1 = self.leq1[i][j] || self.leq1[j][i];
                let cmp2 = self.leq2[i][j] || self.leq2[j][i];
                if !cmp1 && !cmp2 {
                    return Err(Error::Domain(alloc::format!(
                        "elements {} and {} are comparable in neither order",
                        i, j
                    )));
                }
            }
        }
        Ok(())
    }
}

/// An element `v` with `v <=1 x` or `v <=2 x` for every `x`; the least
/// index among the valid ones. Such an element exists whenever every pair
/// is comparable in one of the two partial orders.
pub fn two_orders_min(t: &TwoOrders) -> Result<usize> {
    t.validate()?;
    for v in 0..t.len {
        if (0..t.len).all(|x| t.leq1[v][x] || t.leq2[v][x]) {
            return Ok(v);
        }
    }
    Err(Error::InvariantViolation(
        "no double minimum despite pairwise comparability".into(),
    ))
}

/// When a guaranteed comparability step fails, the graph was not
/// `P7`-free: find the path and report it, or flag the internal bug.
fn p7_witness_error(g: &Graph, what: &'static str) -> Error {
    match crate::recognition::find_induced_path(g, 7) {
        Some(p) => Error::PathWitness { what, path: p.vertices },
        None => Error::InvariantViolation(alloc::format!(
            "{}: comparability failed on a P7-free input",
            what
        )),
    }
}

/// Inclusion-minimal connected `Z ⊆ A` with `S \ F ⊆ N(Z)`, where `F` is
/// the set of separator vertices complete to `B`. On a `P7`-free graph
/// the result is a cograph and `S \ N(Z)` is complete to `B`.
pub fn find_cograph_dominator(g: &Graph, sep: &MinimalSeparator) -> Result<VertexSet> {
    let (a, b) = designated_sides(sep)?;
    find_cograph_dominator_in(g, &sep.vertices, a, b)
}

pub fn find_cograph_dominator_in(
    g: &Graph,
    s: &VertexSet,
    a: &VertexSet,
    b: &VertexSet,
) -> Result<VertexSet> {
    let complete_to_b: VertexSet =
        VertexSet::from_indices(g.n(), s.iter().filter(|&v| b.is_subset(g.neighbors(v))));
    let target = s.minus(&complete_to_b);
    if target.is_empty() {
        return Ok(VertexSet::singleton(g.n(), a.min_vertex().expect("full component nonempty")));
    }
    // Start from all of A (connected, dominates S) and prune in reverse
    // BFS discovery order until inclusion-minimal.
    let order = bfs_order(g, a);
    let mut z = a.clone();
    loop {
        let mut removed = false;
        for &v in order.iter().rev() {
            if !z.contains(v) || z.len() == 1 {
                continue;
            }
            let mut smaller = z.clone();
            smaller.remove(v);
            if g.is_connected(&smaller) && target.is_subset(&g.neighborhood(&smaller, false)) {
                z = smaller;
                removed = true;
            }
        }
        if !removed {
            break;
        }
    }
    if !g.is_cograph(&z) {
        return Err(p7_witness_error(g, "find_cograph_dominator"));
    }
    Ok(z)
}

fn bfs_order(g: &Graph, within: &VertexSet) -> Vec<usize> {
    let mut order = Vec::with_capacity(within.len());
    let mut seen = g.empty_set();
    let mut frontier = match within.min_vertex() {
        Some(v) => VertexSet::singleton(g.n(), v),
        None => return order,
    };
    while !frontier.is_empty() {
        seen.union_in_place(&frontier);
        order.extend(frontier.iter());
        let mut next = g.neighborhood(&frontier, false);
        next.intersect_in_place(within);
        next.minus_in_place(&seen);
        frontier = next;
    }
    // `within` is connected in every caller, but stay safe.
    for v in within.iter() {
        if !seen.contains(v) {
            order.push(v);
        }
    }
    order
}

/// Which full component plays `A` and which plays `B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    A,
    B,
}

fn designated_sides(sep: &MinimalSeparator) -> Result<(&VertexSet, &VertexSet)> {
    if sep.full_components.len() < 2 {
        return Err(Error::Domain("separator lacks two full components".into()));
    }
    Ok((&sep.full_components[0], &sep.full_components[1]))
}

/// A set `X` inside the chosen full component with `|X| <= omega(G)` such
/// that every `v ∈ S \ N(X)` starts an induced path `v-A-A-A`.
///
/// Construction: the whole component when it is a single vertex; one
/// representative per anticomponent when the component's complement is
/// disconnected; otherwise two vertices from adjacent maximal modules.
pub fn find_x_set(g: &Graph, sep: &MinimalSeparator, side: Side) -> Result<VertexSet> {
    let (a, b) = designated_sides(sep)?;
    let chosen = match side {
        Side::A => a,
        Side::B => b,
    };
    find_x_set_in(g, chosen)
}

pub fn find_x_set_in(g: &Graph, a: &VertexSet) -> Result<VertexSet> {
    if a.len() < 2 {
        return Ok(a.clone());
    }
    let anticomps = g.anticomponents(a);
    if anticomps.len() > 1 {
        return Ok(VertexSet::from_indices(
            g.n(),
            anticomps.iter().map(|c| c.min_vertex().unwrap()),
        ));
    }
    // G[A] is connected (full component) and co-connected: the maximal
    // modules quotient is prime, hence has an edge; pick the least
    // adjacent block pair.
    let (sub, map) = g.induced(a);
    let parts = crate::modules::maximal_modules(&sub)?;
    for (i, bi) in parts.blocks.iter().enumerate() {
        for bj in parts.blocks.iter().skip(i + 1) {
            let u = bi.min_vertex().unwrap();
            let v = bj.min_vertex().unwrap();
            if sub.has_edge(u, v) {
                return Ok(g.vertex_set([map[u], map[v]]));
            }
        }
    }
    Err(Error::InvariantViolation(
        "prime quotient of a connected co-connected component has no edge".into(),
    ))
}

/// Does `v` start an induced four-vertex path `v-A-A-A`? Used to replay
/// the postcondition of [`find_x_set`].
pub fn starts_induced_p4_into(g: &Graph, v: usize, a: &VertexSet) -> bool {
    let mut within = a.clone();
    within.insert(v);
    // Fix v as the first vertex and search for three extenders in A.
    for x in g.neighbors(v).intersection(a).iter() {
        for y in g.neighbors(x).intersection(a).iter() {
            if y == v || g.has_edge(y, v) {
                continue;
            }
            let mut last = g.neighbors(y).intersection(a);
            last.minus_in_place(g.neighbors(v));
            last.minus_in_place(g.neighbors(x));
            last.remove(v);
            last.remove(x);
            if !last.is_empty() {
                return true;
            }
        }
    }
    false
}

/// Output of [`cograph_neighborhood_cover`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CographCover {
    pub q_z: VertexSet,
    pub q_i: VertexSet,
}

/// Covers `J` by the neighborhoods of at most `(omega(Z)+1)!` vertices of
/// the connected cograph `Z` plus at most `(omega(Z)+1)!` vertices of the
/// independent set `I`.
///
/// Preconditions checked: `g[z]` connected cograph; `i_set` independent
/// and disjoint from `N[Z]`; `j_set ⊆ N(Z) ∩ N(I)` independent.
pub fn cograph_neighborhood_cover(
    g: &Graph,
    z: &VertexSet,
    i_set: &VertexSet,
    j_set: &VertexSet,
) -> Result<CographCover> {
    if z.is_empty() || !g.is_connected(z) || !g.is_cograph(z) {
        return Err(Error::Domain("z is not a nonempty connected cograph".into()));
    }
    if !g.is_independent(i_set) {
        return Err(Error::Domain("i_set is not independent".into()));
    }
    if i_set.intersects(&g.neighborhood(z, true)) {
        return Err(Error::Domain("i_set meets the closed neighborhood of z".into()));
    }
    if !g.is_independent(j_set) {
        return Err(Error::Domain("j_set is not independent".into()));
    }
    let nz = g.neighborhood(z, false);
    let ni = g.neighborhood(i_set, false);
    if !j_set.is_subset(&nz.intersection(&ni)) {
        return Err(Error::Domain("j_set is not inside N(z) ∩ N(i_set)".into()));
    }
    cover_rec(g, z, i_set, j_set)
}

fn cover_rec(g: &Graph, z: &VertexSet, i_set: &VertexSet, j: &VertexSet) -> Result<CographCover> {
    let n = g.n();
    if j.is_empty() {
        return Ok(CographCover { q_z: VertexSet::empty(n), q_i: VertexSet::empty(n) });
    }
    if z.len() == 1 {
        return Ok(CographCover { q_z: z.clone(), q_i: VertexSet::empty(n) });
    }
    let anticomps = g.anticomponents(z);
    debug_assert!(anticomps.len() >= 2, "connected cograph on 2+ vertices is co-disconnected");
    let reps: Vec<usize> = anticomps.iter().map(|c| c.min_vertex().unwrap()).collect();
    let rep_set = VertexSet::from_indices(n, reps.iter().copied());
    let j_prime = j.minus(&g.neighborhood(&rep_set, false));

    let mut q_z = rep_set;
    let mut q_i = VertexSet::empty(n);

    let mut earlier = VertexSet::empty(n);
    for (idx, zi) in anticomps.iter().enumerate() {
        let rep = reps[idx];
        let mut ji = j_prime.intersection(&g.neighborhood(zi, false));
        ji.minus_in_place(&g.neighborhood(&earlier, false));
        earlier.union_in_place(zi);
        if ji.is_empty() {
            continue;
        }
        let mut zi_rest = zi.clone();
        zi_rest.remove(rep);
        let pieces = g.components(&zi_rest);
        match pieces.len() {
            0 => {
                // z_i is a single vertex, so j' avoids its neighborhood.
                return Err(Error::InvariantViolation(
                    "nonempty J' piece next to a singleton anticomponent".into(),
                ));
            }
            1 => {
                let sub = cover_into(g, &pieces[0], i_set, &ji)?;
                q_z.union_in_place(&sub.q_z);
                q_i.union_in_place(&sub.q_i);
            }
            _ => {
                // Two orders on ji: by neighborhood in I, and by the set of
                // pieces seen. P7-freeness makes every pair comparable in
                // one of them.
                let jv = ji.to_vec();
                let len = jv.len();
                let ni: Vec<VertexSet> =
                    jv.iter().map(|&u| g.neighbors(u).intersection(i_set)).collect();
                let seen: Vec<Vec<bool>> = jv
                    .iter()
                    .map(|&u| pieces.iter().map(|p| g.neighbors(u).intersects(p)).collect())
                    .collect();
                let leq1: Vec<Vec<bool>> = (0..len)
                    .map(|x| (0..len).map(|y| ni[x].is_subset(&ni[y])).collect())
                    .collect();
                let leq2: Vec<Vec<bool>> = (0..len)
                    .map(|x| {
                        (0..len)
                            .map(|y| {
                                seen[x]
                                    .iter()
                                    .zip(&seen[y])
                                    .all(|(&sx, &sy)| !sx || sy)
                            })
                            .collect()
                    })
                    .collect();
                let w = match two_orders_min(&TwoOrders::new(len, leq1, leq2)) {
                    Ok(w) => jv[w],
                    Err(Error::Domain(_)) => {
                        return Err(p7_witness_error(g, "cograph_neighborhood_cover"))
                    }
                    Err(e) => return Err(e),
                };
                let u_w = g
                    .neighbors(w)
                    .intersection(i_set)
                    .min_vertex()
                    .ok_or_else(|| Error::Domain("a J vertex has no neighbor in I".into()))?;
                let piece = pieces
                    .iter()
                    .find(|p| g.neighbors(w).intersects(p))
                    .ok_or_else(|| Error::InvariantViolation("J' vertex sees no piece".into()))?;
                let mut rest = ji.clone();
                rest.minus_in_place(g.neighbors(u_w));
                let sub = cover_into(g, piece, i_set, &rest)?;
                q_z.union_in_place(&sub.q_z);
                q_i.union_in_place(&sub.q_i);
                q_i.insert(u_w);
            }
        }
    }
    Ok(CographCover { q_z, q_i })
}

/// Recursion step with the theory-guaranteed precondition re-checked.
fn cover_into(g: &Graph, z_sub: &VertexSet, i_set: &VertexSet, j: &VertexSet) -> Result<CographCover> {
    if !j.is_subset(&g.neighborhood(z_sub, false)) {
        return Err(p7_witness_error(g, "cograph_neighborhood_cover"));
    }
    cover_rec(g, z_sub, i_set, j)
}

/// An almost-container triple: a vertex set `K`, special components `D`,
/// and a split `L(D)` per special component.
#[derive(Clone, Debug)]
pub struct KdlTriple {
    pub k: VertexSet,
    pub d_list: Vec<VertexSet>,
    /// Parallel to `d_list`.
    pub l_map: Vec<VertexSet>,
}

/// Verification report for a `(K, D, L)` triple; one flag per contract
/// bullet. Never errors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KdlReport {
    /// `S ∩ T ⊆ K` and `|K ∩ T|` within budget.
    pub trace_contained: bool,
    /// Every listed `D` is a connected component of `G - K`.
    pub components_listed: bool,
    /// Every `L(D)` is a proper nonempty split into module components.
    pub module_split: bool,
    /// Every component of `G - K` sits inside one component of `G - S` or
    /// is listed in `D`.
    pub components_covered: bool,
}

impl KdlReport {
    pub fn all(&self) -> bool {
        self.trace_contained && self.components_listed && self.module_split && self.components_covered
    }
}

pub fn check_kdl_triple(
    g: &Graph,
    triple: &KdlTriple,
    sep: &MinimalSeparator,
    t: &TreedepthStructure,
    td_budget: usize,
) -> KdlReport {
    let s = &sep.vertices;
    let trace_contained = s.intersection(&t.vertices).is_subset(&triple.k)
        && triple.k.intersection(&t.vertices).len() <= td_budget;

    let comps_of_g_minus_k = g.components(&triple.k.complement());
    let components_listed = triple
        .d_list
        .iter()
        .all(|d| comps_of_g_minus_k.contains(d));

    let module_split = triple.d_list.len() == triple.l_map.len()
        && triple.d_list.iter().zip(&triple.l_map).all(|(d, l)| {
            if l.is_empty() || !l.is_subset(d) || *l == *d {
                return false;
            }
            let rest = d.minus(l);
            g.components(l)
                .into_iter()
                .chain(g.components(&rest))
                .all(|c| is_module_within(g, d, &c))
        });

    let comps_of_g_minus_s = g.components(&s.complement());
    let components_covered = comps_of_g_minus_k.iter().all(|d| {
        comps_of_g_minus_s.iter().any(|c| d.is_subset(c)) || triple.d_list.contains(d)
    });

    KdlReport { trace_contained, components_listed, module_split, components_covered }
}

/// Module check relative to an induced subgraph: every vertex of
/// `within \ m` is complete or anticomplete to `m`.
fn is_module_within(g: &Graph, within: &VertexSet, m: &VertexSet) -> bool {
    within.minus(m).iter().all(|v| {
        let hits = g.neighbors(v).intersection(m).len();
        hits == 0 || hits == m.len()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::separators::enumerate_minimal_separators;
    use alloc::vec;

    #[test]
    fn two_orders_basics() {
        // Total order in leq1: its minimum qualifies.
        let len = 3;
        let total: Vec<Vec<bool>> = (0..len)
            .map(|i| (0..len).map(|j| i <= j).collect())
            .collect();
        let id: Vec<Vec<bool>> = (0..len)
            .map(|i| (0..len).map(|j| i == j).collect())
            .collect();
        let t = TwoOrders::new(len, total.clone(), id.clone());
        assert_eq!(two_orders_min(&t).unwrap(), 0);

        // Singleton universe.
        let t1 = TwoOrders::new(1, vec![vec![true]], vec![vec![true]]);
        assert_eq!(two_orders_min(&t1).unwrap(), 0);

        // Two interleaved chains: 0 <1 2, 1 <2 0 — element 1 beats all in
        // some order iff... verified against the exhaustive check below.
        let mut leq1 = id.clone();
        leq1[0][2] = true;
        let mut leq2 = id.clone();
        leq2[1][0] = true;
        leq2[1][2] = true;
        let t2 = TwoOrders::new(len, leq1.clone(), leq2.clone());
        let got = two_orders_min(&t2).unwrap();
        // exhaustive: the least v with all x covered
        let want = (0..len)
            .find(|&v| (0..len).all(|x| leq1[v][x] || leq2[v][x]))
            .unwrap();
        assert_eq!(got, want);

        // Incomparable pair in both orders is a domain error.
        let t3 = TwoOrders::new(2, vec![vec![true, false], vec![false, true]], vec![vec![true, false], vec![false, true]]);
        assert!(matches!(two_orders_min(&t3), Err(Error::Domain(_))));
    }

    #[test]
    fn cograph_dominator_on_c6() {
        let c6 = Graph::cycle(6);
        let seps = enumerate_minimal_separators(&c6);
        for sep in &seps {
            let z = find_cograph_dominator(&c6, sep).unwrap();
            let (a, b) = (&sep.full_components[0], &sep.full_components[1]);
            assert!(z.is_subset(a));
            assert!(c6.is_connected(&z));
            assert!(c6.is_cograph(&z));
            // S \ N(Z) complete to B.
            for v in sep.vertices.minus(&c6.neighborhood(&z, false)).iter() {
                assert!(b.is_subset(c6.neighbors(v)), "sep {:?} z {:?}", sep.vertices, z);
            }
        }
    }

    #[test]
    fn dominator_single_vertex_when_separator_complete_to_b() {
        // P3: S = {1}, A = {0}, B = {2}; S is complete to B.
        let p3 = Graph::path(3);
        let seps = enumerate_minimal_separators(&p3);
        assert_eq!(seps.len(), 1);
        let z = find_cograph_dominator(&p3, &seps[0]).unwrap();
        assert_eq!(z.len(), 1);
    }

    #[test]
    fn x_set_postcondition_on_fixtures() {
        for seed in 0..10u64 {
            let f = crate::oracle::gen_fixture(crate::oracle::FixtureKind::P7FreeBipartite, 14, seed)
                .unwrap();
            let g = &f.graph;
            let omega = g.clique_number().unwrap();
            for sep in enumerate_minimal_separators(g) {
                for side in [Side::A, Side::B] {
                    let x = find_x_set(g, &sep, side).unwrap();
                    assert!(x.len() <= omega, "x {:?} omega {}", x, omega);
                    let a = match side {
                        Side::A => &sep.full_components[0],
                        Side::B => &sep.full_components[1],
                    };
                    assert!(x.is_subset(a));
                    for v in sep.vertices.minus(&g.neighborhood(&x, false)).iter() {
                        assert!(
                            starts_induced_p4_into(g, v, a),
                            "v {} sep {:?} x {:?}",
                            v, sep.vertices, x
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn x_set_tiny_component_is_itself() {
        let p3 = Graph::path(3);
        let seps = enumerate_minimal_separators(&p3);
        let x = find_x_set(&p3, &seps[0], Side::A).unwrap();
        assert_eq!(x, seps[0].full_components[0]);
    }

    #[test]
    fn cover_base_cases() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        // z = {1}: singleton; i = {3}; j = {2} ⊆ N(z) ∩ N(i).
        let z = g.vertex_set([1]);
        let i = g.vertex_set([3]);
        let j = g.vertex_set([2]);
        let c = cograph_neighborhood_cover(&g, &z, &i, &j).unwrap();
        assert_eq!(c.q_z, z);
        assert!(c.q_i.is_empty());

        // Empty J gives empty covers.
        let c = cograph_neighborhood_cover(&g, &z, &i, &g.empty_set()).unwrap();
        assert!(c.q_z.is_empty() && c.q_i.is_empty());

        // Precondition violations are domain errors.
        let not_connected = g.vertex_set([0, 2]);
        assert!(matches!(
            cograph_neighborhood_cover(&g, &not_connected, &i, &j),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn cover_respects_factorial_bound_on_fixture() {
        // A connected cograph z (a 4-cycle: P4-free), an independent set I
        // beyond it, and J between them.
        // z = {0,1,2,3} as C4; J attaches to z and I.
        let mut b = crate::graph::GraphBuilder::new(10);
        b.add_edge(0, 1).add_edge(1, 2).add_edge(2, 3).add_edge(3, 0);
        // J = {4,5,6}, each adjacent into z and into I = {7,8,9}.
        b.add_edge(4, 0).add_edge(5, 1).add_edge(6, 2);
        b.add_edge(4, 7).add_edge(5, 8).add_edge(6, 9);
        let g = b.build();
        let z = g.vertex_set([0, 1, 2, 3]);
        let i = g.vertex_set([7, 8, 9]);
        let j = g.vertex_set([4, 5, 6]);
        let omega_z = 2usize; // C4
        let c = cograph_neighborhood_cover(&g, &z, &i, &j).unwrap();
        // Coverage and the (omega+1)! bound.
        let covered = g
            .neighborhood(&c.q_z, false)
            .union(&g.neighborhood(&c.q_i, false));
        assert!(j.is_subset(&covered));
        let bound = (1..=omega_z + 1).product::<usize>();
        assert!(c.q_z.len() <= bound && c.q_i.len() <= bound);
        assert!(c.q_z.is_subset(&z) && c.q_i.is_subset(&i));
    }

    #[test]
    fn kdl_report_flags() {
        // P5 with S = {2}: A = {0,1}, B = {3,4}.
        let p5 = Graph::path(5);
        let seps = enumerate_minimal_separators(&p5);
        let sep = seps.iter().find(|s| s.vertices == p5.vertex_set([2])).unwrap();
        let t = TreedepthStructure::empty(5, 2);

        // K = S, D empty: all bullets hold.
        let triple = KdlTriple { k: sep.vertices.clone(), d_list: vec![], l_map: vec![] };
        let report = check_kdl_triple(&p5, &triple, sep, &t, 0);
        assert!(report.all(), "{:?}", report);

        // Empty L(D) breaks the module-split bullet.
        let d = p5.vertex_set([0, 1]);
        let triple = KdlTriple {
            k: sep.vertices.clone(),
            d_list: vec![d.clone()],
            l_map: vec![p5.empty_set()],
        };
        let report = check_kdl_triple(&p5, &triple, sep, &t, 0);
        assert!(!report.module_split);
        assert!(report.trace_contained && report.components_listed && report.components_covered);

        // A proper split of D = {0,1} into {0} | {1}: both are modules of
        // G[D].
        let triple = KdlTriple {
            k: sep.vertices.clone(),
            d_list: vec![d],
            l_map: vec![p5.vertex_set([0])],
        };
        assert!(check_kdl_triple(&p5, &triple, sep, &t, 0).all());
    }
}
