//! Dynamic programming over bag families: assemble an optimal block
//! decomposition from minimal separators and candidate bags, and solve the
//! problem catalog (max-weight independent set, max-weight induced forest,
//! max-weight bounded-degree subgraph) plus exact treewidth.
//!
//! A *block* is a pair `(S, C)` of a separator and one component of
//! `G - S` with `N(C) = S`. The value of a block is computed by choosing a
//! bag `Ω ⊇ S` meeting `C`, choosing the solution part inside
//! `Ω ∩ (S ∪ C)`, and recursing into the components of `C \ Ω`. The bag
//! family is sufficient whenever it contains all bags of some tree
//! decomposition of the graph (all PMCs always qualify); sufficiency is
//! not assumed, an untileable block surfaces as an error.
//!
//! Solution vertices are tracked per separator boundary, so correctness
//! does not depend on any bound on `|bag ∩ solution|`; the optional
//! `state_cap` trades exactness for time and flags results conditional.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use hashbrown::HashMap;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{Graph, Weight};
use crate::set::VertexSet;

/// A deduplicated, canonically sorted collection of candidate bags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BagFamily {
    pub bags: Vec<VertexSet>,
}

impl BagFamily {
    pub fn new(mut bags: Vec<VertexSet>) -> Self {
        bags.sort();
        bags.dedup();
        BagFamily { bags }
    }

    /// All potential maximal cliques of `g`.
    pub fn all_pmcs(g: &Graph) -> Self {
        BagFamily::new(crate::pmc::enumerate_pmcs(g).into_iter().map(|p| p.vertices).collect())
    }

    pub fn len(&self) -> usize {
        self.bags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bags.is_empty()
    }
}

/// A DP subproblem: a separator together with one full component of its
/// removal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub separator: VertexSet,
    pub component: VertexSet,
}

impl Block {
    /// Wraps a component with its neighborhood as the separator.
    pub fn around(g: &Graph, component: VertexSet) -> Block {
        Block { separator: g.neighborhood(&component, false), component }
    }
}

/// All full blocks of `g`: for every minimal separator, each component
/// whose neighborhood is the whole separator.
pub fn full_blocks(g: &Graph) -> Vec<Block> {
    let mut out = Vec::new();
    for sep in crate::separators::enumerate_minimal_separators(g) {
        for c in sep.full_components {
            out.push(Block { separator: sep.vertices.clone(), component: c });
        }
    }
    out
}

/// Which catalog problem a result answers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Problem {
    Mwis,
    InducedForest,
    MaxDegree(usize),
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Problem::Mwis => write!(f, "mwis"),
            Problem::InducedForest => write!(f, "induced-forest"),
            Problem::MaxDegree(k) => write!(f, "max-degree<={}", k),
        }
    }
}

/// Optimal weight, witness and exactness metadata.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub problem: Problem,
    pub optimum: Weight,
    pub witness: VertexSet,
    /// `Some(reason)` when the result is only a lower bound.
    pub conditional: Option<String>,
}

/// Independent feasibility re-check for a witness set.
pub fn witness_feasible(g: &Graph, problem: Problem, witness: &VertexSet) -> bool {
    match problem {
        Problem::Mwis => g.is_independent(witness),
        Problem::InducedForest => is_acyclic(g, witness),
        Problem::MaxDegree(k) => witness
            .iter()
            .all(|v| g.neighbors(v).intersection(witness).len() <= k),
    }
}

fn is_acyclic(g: &Graph, s: &VertexSet) -> bool {
    // |E(G[s])| = |s| - #components characterizes forests.
    let m: usize = s.iter().map(|v| g.neighbors(v).intersection(s).len()).sum::<usize>() / 2;
    m + g.components(s).len() == s.len()
}

// ---------------------------------------------------------------------------
// shared machinery
// ---------------------------------------------------------------------------

/// Vertex weights scaled to integers by the common denominator.
fn scaled_weights(g: &Graph) -> (Vec<BigInt>, BigInt) {
    let mut denom = BigInt::one();
    for w in g.weights() {
        denom = denom.lcm(w.denom());
    }
    let ws = g
        .weights()
        .iter()
        .map(|w| w.numer() * (&denom / w.denom()))
        .collect();
    (ws, denom)
}

fn weight_of_set(ws: &[BigInt], s: &VertexSet) -> BigInt {
    s.iter().map(|v| ws[v].clone()).fold(BigInt::zero(), |a, b| a + b)
}

/// Bags usable for block `(S, C)`: they contain `S` and meet `C`.
fn matching_bags<'a>(
    bags: &'a [VertexSet],
    s: &'a VertexSet,
    c: &'a VertexSet,
) -> impl Iterator<Item = &'a VertexSet> {
    bags.iter().filter(move |omega| s.is_subset(omega) && omega.intersects(c))
}

/// All subsets of `pool` with at most `cap` elements.
fn for_each_subset_capped<F: FnMut(&VertexSet)>(pool: &VertexSet, cap: usize, f: &mut F) {
    let elems = pool.to_vec();
    let mut current = VertexSet::empty(pool.width());
    fn rec<F: FnMut(&VertexSet)>(
        elems: &[usize],
        i: usize,
        cap: usize,
        current: &mut VertexSet,
        f: &mut F,
    ) {
        if i == elems.len() {
            f(current);
            return;
        }
        rec(elems, i + 1, cap, current, f);
        if current.len() < cap {
            current.insert(elems[i]);
            rec(elems, i + 1, cap, current, f);
            current.remove(elems[i]);
        }
    }
    rec(&elems, 0, cap, &mut current, f);
}

/// All independent subsets of `pool`.
fn for_each_independent_subset<F: FnMut(&VertexSet)>(g: &Graph, pool: &VertexSet, f: &mut F) {
    fn rec<F: FnMut(&VertexSet)>(
        g: &Graph,
        remaining: VertexSet,
        current: &mut VertexSet,
        f: &mut F,
    ) {
        match remaining.min_vertex() {
            None => f(current),
            Some(v) => {
                let mut without = remaining.clone();
                without.remove(v);
                rec(g, without, current, f);
                current.insert(v);
                let mut allowed = remaining;
                allowed.minus_in_place(g.neighbors(v));
                allowed.remove(v);
                rec(g, allowed, current, f);
                current.remove(v);
            }
        }
    }
    rec(g, pool.clone(), &mut VertexSet::empty(pool.width()), f);
}

/// Candidate value with deterministic tie-breaking: larger weight wins,
/// then the lexicographically least witness.
fn better(wit_a: &VertexSet, w_a: &BigInt, wit_b: &VertexSet, w_b: &BigInt) -> bool {
    match w_a.cmp(w_b) {
        core::cmp::Ordering::Greater => true,
        core::cmp::Ordering::Less => false,
        core::cmp::Ordering::Equal => wit_a < wit_b,
    }
}

fn update_entry(slot: &mut Option<(BigInt, VertexSet)>, w: BigInt, wit: VertexSet) {
    match slot {
        Some((bw, bwit)) => {
            if better(&wit, &w, bwit, bw) {
                *slot = Some((w, wit));
            }
        }
        None => *slot = Some((w, wit)),
    }
}

// ---------------------------------------------------------------------------
// MWIS
// ---------------------------------------------------------------------------

struct MwisSolver<'a> {
    g: &'a Graph,
    bags: &'a [VertexSet],
    ws: Vec<BigInt>,
    /// block component -> (boundary trace -> best interior weight+witness)
    memo: HashMap<VertexSet, HashMap<VertexSet, (BigInt, VertexSet)>>,
}

impl<'a> MwisSolver<'a> {
    /// Table of a block: for every arising boundary `X = I ∩ N(C)`, the
    /// best weight of `I ∩ C` over independent sets `I` compatible with it.
    fn block(&mut self, c: &VertexSet) -> &HashMap<VertexSet, (BigInt, VertexSet)> {
        if !self.memo.contains_key(c) {
            let table = self.compute_block(c);
            self.memo.insert(c.clone(), table);
        }
        &self.memo[c]
    }

    fn compute_block(&mut self, c: &VertexSet) -> HashMap<VertexSet, (BigInt, VertexSet)> {
        let s = self.g.neighborhood(c, false);
        let mut table: HashMap<VertexSet, (BigInt, VertexSet)> = HashMap::new();
        let omegas: Vec<VertexSet> = matching_bags(self.bags, &s, c).cloned().collect();
        for omega in omegas {
            let visible = omega.intersection(&s.union(c));
            let children = self.g.components(&c.minus(&omega));
            let child_seps: Vec<VertexSet> =
                children.iter().map(|d| self.g.neighborhood(d, false)).collect();
            // Children first so the lookups below hit.
            for d in &children {
                self.block(d);
            }
            let memo = &self.memo;
            let ws = &self.ws;
            let mut consider = |y: &VertexSet| {
                let mut weight = weight_of_set(ws, &y.minus(&s));
                let mut wit = y.minus(&s);
                for (d, sd) in children.iter().zip(&child_seps) {
                    let xd = y.intersection(sd);
                    match memo.get(d).and_then(|t| t.get(&xd)) {
                        Some((w, dwit)) => {
                            weight += w;
                            wit.union_in_place(dwit);
                        }
                        None => return,
                    }
                }
                let x = y.intersection(&s);
                let mut slot = table.remove(&x);
                update_entry(&mut slot, weight, wit);
                table.insert(x, slot.unwrap());
            };
            for_each_independent_subset(self.g, &visible, &mut consider);
        }
        table
    }

    fn solve(&mut self) -> Result<(BigInt, VertexSet)> {
        if self.g.n() == 0 {
            return Ok((BigInt::zero(), VertexSet::empty(0)));
        }
        let mut best: Option<(BigInt, VertexSet)> = None;
        let bags: Vec<VertexSet> = self.bags.to_vec();
        for omega in &bags {
            let children = self.g.components(&omega.complement());
            let child_seps: Vec<VertexSet> =
                children.iter().map(|d| self.g.neighborhood(d, false)).collect();
            for d in &children {
                self.block(d);
            }
            let memo = &self.memo;
            let ws = &self.ws;
            let mut consider = |y: &VertexSet| {
                let mut weight = weight_of_set(ws, y);
                let mut wit = y.clone();
                for (d, sd) in children.iter().zip(&child_seps) {
                    let xd = y.intersection(sd);
                    match memo.get(d).and_then(|t| t.get(&xd)) {
                        Some((w, dwit)) => {
                            weight += w;
                            wit.union_in_place(dwit);
                        }
                        None => return,
                    }
                }
                update_entry(&mut best, weight, wit);
            };
            for_each_independent_subset(self.g, omega, &mut consider);
        }
        best.ok_or_else(|| Error::InfeasibleFamily("no bag can root a decomposition".into()))
    }
}

/// Exact maximum-weight independent set over a bag family containing all
/// bags of some tree decomposition of `g` (all PMCs always suffice).
pub fn solve_mwis(g: &Graph, bags: &BagFamily) -> Result<SolveResult> {
    let (ws, denom) = scaled_weights(g);
    let mut solver = MwisSolver { g, bags: &bags.bags, ws, memo: HashMap::new() };
    let (scaled, witness) = solver.solve()?;
    let optimum = Weight::new(scaled, denom);
    if !witness_feasible(g, Problem::Mwis, &witness)
        || g.set_weight_sum(&witness) != optimum
    {
        return Err(Error::InvariantViolation("mwis witness failed its re-check".into()));
    }
    Ok(SolveResult { problem: Problem::Mwis, optimum, witness, conditional: None })
}

// ---------------------------------------------------------------------------
// induced forest / bounded degree: stateful block DP
// ---------------------------------------------------------------------------

/// Canonical partition of the sorted boundary: restricted-growth string.
type Rgs = Vec<u8>;

/// Per-boundary state table of a stateful block DP.
type StateTable<K> = HashMap<VertexSet, Vec<(K, BigInt, VertexSet)>>;

fn canonical_rgs(order: &[usize], mut class_of: impl FnMut(usize) -> usize) -> Rgs {
    let mut map: Vec<usize> = Vec::new();
    let mut out = Vec::with_capacity(order.len());
    for &v in order {
        let c = class_of(v);
        let id = match map.iter().position(|&m| m == c) {
            Some(i) => i,
            None => {
                map.push(c);
                map.len() - 1
            }
        };
        out.push(id as u8);
    }
    out
}

/// Tiny union-find over vertex ids for cycle detection.
#[derive(Clone)]
struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let r = self.find(self.parent[x]);
            self.parent[x] = r;
        }
        self.parent[x]
    }

    /// Returns false (a cycle) if the two are already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

struct ForestSolver<'a> {
    g: &'a Graph,
    bags: &'a [VertexSet],
    ws: Vec<BigInt>,
    cap: usize,
    truncated: bool,
    /// block -> boundary X -> partition -> best (weight, witness)
    memo: HashMap<VertexSet, StateTable<Rgs>>,
}

impl<'a> ForestSolver<'a> {
    fn block(&mut self, c: &VertexSet) {
        if self.memo.contains_key(c) {
            return;
        }
        let table = self.compute_block(c);
        self.memo.insert(c.clone(), table);
    }

    fn compute_block(&mut self, c: &VertexSet) -> StateTable<Rgs> {
        let s = self.g.neighborhood(c, false);
        let mut table: StateTable<Rgs> = HashMap::new();
        let omegas: Vec<VertexSet> = matching_bags(self.bags, &s, c).cloned().collect();
        for omega in omegas {
            let visible = omega.intersection(&s.union(c));
            if visible.len() > self.cap {
                self.truncated = true;
            }
            let children = self.g.components(&c.minus(&omega));
            for d in &children {
                self.block(d);
            }
            let child_seps: Vec<VertexSet> =
                children.iter().map(|d| self.g.neighborhood(d, false)).collect();
            let cap = self.cap;
            let mut consider = |y: &VertexSet| {
                self.forest_combine(y, &s, &children, &child_seps, &mut table);
            };
            for_each_subset_capped(&visible, cap, &mut consider);
        }
        table
    }

    /// Extends choice `y` by all compatible child states; records the
    /// reachable boundary partitions into `table`.
    fn forest_combine(
        &self,
        y: &VertexSet,
        s: &VertexSet,
        children: &[VertexSet],
        child_seps: &[VertexSet],
        table: &mut StateTable<Rgs>,
    ) {
        let yv = y.to_vec();
        let index_of = |v: usize| yv.iter().position(|&u| u == v).unwrap();
        // Local edges: fresh-fresh and fresh-boundary merge here;
        // boundary-boundary edges belong to an ancestor block.
        let mut dsu = Dsu::new(yv.len());
        let fresh = y.minus(s);
        for (i, &u) in yv.iter().enumerate() {
            for &v in yv.iter().skip(i + 1) {
                if !self.g.has_edge(u, v) {
                    continue;
                }
                if !fresh.contains(u) && !fresh.contains(v) {
                    continue;
                }
                if !dsu.union(i, index_of(v)) {
                    return; // cycle among the chosen bag vertices
                }
            }
        }
        let base_weight = weight_of_set(&self.ws, &fresh);
        let child_states: Vec<&Vec<(Rgs, BigInt, VertexSet)>> = {
            let mut out = Vec::with_capacity(children.len());
            for (d, sd) in children.iter().zip(child_seps) {
                let xd = y.intersection(sd);
                match self.memo.get(d).and_then(|t| t.get(&xd)) {
                    Some(states) => out.push(states),
                    None => return,
                }
            }
            out
        };
        // Cartesian product over per-child partition states.
        let x = y.intersection(s);
        let xv = x.to_vec();
        self.product(
            0,
            &child_states,
            children,
            child_seps,
            y,
            &yv,
            dsu,
            base_weight,
            fresh.clone(),
            &x,
            &xv,
            table,
        );
    }

    #[allow(clippy::too_many_arguments)]
    fn product(
        &self,
        i: usize,
        child_states: &[&Vec<(Rgs, BigInt, VertexSet)>],
        children: &[VertexSet],
        child_seps: &[VertexSet],
        y: &VertexSet,
        yv: &[usize],
        dsu: Dsu,
        weight: BigInt,
        wit: VertexSet,
        x: &VertexSet,
        xv: &[usize],
        table: &mut StateTable<Rgs>,
    ) {
        if i == child_states.len() {
            let mut dsu = dsu;
            let rgs = canonical_rgs(xv, |v| dsu.find(yv.iter().position(|&u| u == v).unwrap()));
            let entries = table.entry(x.clone()).or_default();
            match entries.iter_mut().find(|(r, _, _)| *r == rgs) {
                Some((_, bw, bwit)) => {
                    if better(&wit, &weight, bwit, bw) {
                        *bw = weight;
                        *bwit = wit;
                    }
                }
                None => entries.push((rgs, weight, wit)),
            }
            return;
        }
        let xd = y.intersection(&child_seps[i]);
        let xdv = xd.to_vec();
        for (rgs, w, dwit) in child_states[i] {
            let mut dsu2 = dsu.clone();
            // Merge the child's connectivity classes; a repeated join is a
            // cycle through the child interior.
            let mut ok = true;
            let mut reps: HashMap<u8, usize> = HashMap::new();
            for (pos, &v) in xdv.iter().enumerate() {
                let yi = yv.iter().position(|&u| u == v).unwrap();
                match reps.get(&rgs[pos]) {
                    Some(&first) => {
                        if !dsu2.union(first, yi) {
                            ok = false;
                            break;
                        }
                    }
                    None => {
                        reps.insert(rgs[pos], yi);
                    }
                }
            }
            if !ok {
                continue;
            }
            self.product(
                i + 1,
                child_states,
                children,
                child_seps,
                y,
                yv,
                dsu2,
                weight.clone() + w,
                wit.union(dwit),
                x,
                xv,
                table,
            );
        }
        let _ = children;
    }

    fn solve(&mut self) -> Result<(BigInt, VertexSet)> {
        if self.g.n() == 0 {
            return Ok((BigInt::zero(), VertexSet::empty(0)));
        }
        let bags: Vec<VertexSet> = self.bags.to_vec();
        let empty_sep = self.g.empty_set();
        let mut root_table: StateTable<Rgs> = HashMap::new();
        for omega in &bags {
            if omega.len() > self.cap {
                self.truncated = true;
            }
            let children = self.g.components(&omega.complement());
            for d in &children {
                self.block(d);
            }
            let child_seps: Vec<VertexSet> =
                children.iter().map(|d| self.g.neighborhood(d, false)).collect();
            let cap = self.cap;
            let mut consider = |y: &VertexSet| {
                self.forest_combine(y, &empty_sep, &children, &child_seps, &mut root_table);
            };
            for_each_subset_capped(omega, cap, &mut consider);
        }
        let best = root_table
            .remove(&self.g.empty_set())
            .into_iter()
            .flatten()
            .map(|(_, w, wit)| (w, wit))
            .fold(None, |acc: Option<(BigInt, VertexSet)>, (w, wit)| {
                let mut slot = acc;
                update_entry(&mut slot, w, wit);
                slot
            });
        best.ok_or_else(|| Error::InfeasibleFamily("no bag can root a decomposition".into()))
    }
}

/// Maximum-weight induced forest over a sufficient bag family. Exact when
/// `state_cap >= n` (and in general whenever no bag is truncated); results
/// produced under a binding cap are lower bounds flagged conditional.
pub fn solve_induced_forest(g: &Graph, bags: &BagFamily, state_cap: usize) -> Result<SolveResult> {
    let (ws, denom) = scaled_weights(g);
    let mut solver = ForestSolver {
        g,
        bags: &bags.bags,
        ws,
        cap: state_cap,
        truncated: false,
        memo: HashMap::new(),
    };
    let (scaled, witness) = solver.solve()?;
    let optimum = Weight::new(scaled, denom);
    if !witness_feasible(g, Problem::InducedForest, &witness)
        || g.set_weight_sum(&witness) != optimum
    {
        return Err(Error::InvariantViolation("forest witness failed its re-check".into()));
    }
    let conditional = solver
        .truncated
        .then(|| String::from("state_cap truncated some bag; optimum is a lower bound"));
    Ok(SolveResult { problem: Problem::InducedForest, optimum, witness, conditional })
}

// ---------------------------------------------------------------------------
// bounded degree
// ---------------------------------------------------------------------------

type Usage = Vec<u8>;

struct MaxDegSolver<'a> {
    g: &'a Graph,
    bags: &'a [VertexSet],
    ws: Vec<BigInt>,
    k: usize,
    cap: usize,
    truncated: bool,
    /// block -> boundary X -> (interior-neighbor usage of X) -> best
    memo: HashMap<VertexSet, StateTable<Usage>>,
}

impl<'a> MaxDegSolver<'a> {
    fn block(&mut self, c: &VertexSet) {
        if self.memo.contains_key(c) {
            return;
        }
        let table = self.compute_block(c);
        self.memo.insert(c.clone(), table);
    }

    fn compute_block(&mut self, c: &VertexSet) -> StateTable<Usage> {
        let s = self.g.neighborhood(c, false);
        let mut table: StateTable<Usage> = HashMap::new();
        let omegas: Vec<VertexSet> = matching_bags(self.bags, &s, c).cloned().collect();
        for omega in omegas {
            let visible = omega.intersection(&s.union(c));
            if visible.len() > self.cap {
                self.truncated = true;
            }
            let children = self.g.components(&c.minus(&omega));
            for d in &children {
                self.block(d);
            }
            let child_seps: Vec<VertexSet> =
                children.iter().map(|d| self.g.neighborhood(d, false)).collect();
            let cap = self.cap;
            let mut consider = |y: &VertexSet| {
                self.degree_combine(y, &s, &children, &child_seps, &mut table);
            };
            for_each_subset_capped(&visible, cap, &mut consider);
        }
        table
    }

    fn degree_combine(
        &self,
        y: &VertexSet,
        s: &VertexSet,
        children: &[VertexSet],
        child_seps: &[VertexSet],
        table: &mut StateTable<Usage>,
    ) {
        let yv = y.to_vec();
        let fresh = y.minus(s);
        // Local usage: edges with at least one fresh endpoint count here;
        // boundary-boundary edges were counted where the deeper endpoint
        // was fresh.
        let mut usage = vec![0usize; yv.len()];
        for (i, &u) in yv.iter().enumerate() {
            for (j, &v) in yv.iter().enumerate().skip(i + 1) {
                if self.g.has_edge(u, v) && (fresh.contains(u) || fresh.contains(v)) {
                    usage[i] += 1;
                    usage[j] += 1;
                }
            }
        }
        let base_weight = weight_of_set(&self.ws, &fresh);
        let child_states: Vec<&Vec<(Usage, BigInt, VertexSet)>> = {
            let mut out = Vec::with_capacity(children.len());
            for (d, sd) in children.iter().zip(child_seps) {
                let xd = y.intersection(sd);
                match self.memo.get(d).and_then(|t| t.get(&xd)) {
                    Some(states) => out.push(states),
                    None => return,
                }
            }
            out
        };
        let x = y.intersection(s);
        let xv = x.to_vec();
        self.deg_product(
            0,
            &child_states,
            child_seps,
            y,
            &yv,
            usage,
            base_weight,
            fresh,
            &x,
            &xv,
            table,
        );
    }

    #[allow(clippy::too_many_arguments)]
    fn deg_product(
        &self,
        i: usize,
        child_states: &[&Vec<(Usage, BigInt, VertexSet)>],
        child_seps: &[VertexSet],
        y: &VertexSet,
        yv: &[usize],
        usage: Vec<usize>,
        weight: BigInt,
        wit: VertexSet,
        x: &VertexSet,
        xv: &[usize],
        table: &mut StateTable<Usage>,
    ) {
        if i == child_states.len() {
            if usage.iter().any(|&u| u > self.k) {
                return;
            }
            let state: Usage = xv
                .iter()
                .map(|&v| usage[yv.iter().position(|&u| u == v).unwrap()] as u8)
                .collect();
            let entries = table.entry(x.clone()).or_default();
            match entries.iter_mut().find(|(st, _, _)| *st == state) {
                Some((_, bw, bwit)) => {
                    if better(&wit, &weight, bwit, bw) {
                        *bw = weight;
                        *bwit = wit;
                    }
                }
                None => entries.push((state, weight, wit)),
            }
            return;
        }
        let xd = y.intersection(&child_seps[i]);
        let xdv = xd.to_vec();
        for (child_usage, w, dwit) in child_states[i] {
            let mut usage2 = usage.clone();
            let mut ok = true;
            for (pos, &v) in xdv.iter().enumerate() {
                let yi = yv.iter().position(|&u| u == v).unwrap();
                usage2[yi] += child_usage[pos] as usize;
                if usage2[yi] > self.k {
                    ok = false;
                    break;
                }
            }
            if !ok {
                continue;
            }
            self.deg_product(
                i + 1,
                child_states,
                child_seps,
                y,
                yv,
                usage2,
                weight.clone() + w,
                wit.union(dwit),
                x,
                xv,
                table,
            );
        }
    }

    fn solve(&mut self) -> Result<(BigInt, VertexSet)> {
        if self.g.n() == 0 {
            return Ok((BigInt::zero(), VertexSet::empty(0)));
        }
        let bags: Vec<VertexSet> = self.bags.to_vec();
        let empty_sep = self.g.empty_set();
        let mut root_table: StateTable<Usage> = HashMap::new();
        for omega in &bags {
            if omega.len() > self.cap {
                self.truncated = true;
            }
            let children = self.g.components(&omega.complement());
            for d in &children {
                self.block(d);
            }
            let child_seps: Vec<VertexSet> =
                children.iter().map(|d| self.g.neighborhood(d, false)).collect();
            let cap = self.cap;
            let mut consider = |y: &VertexSet| {
                self.degree_combine(y, &empty_sep, &children, &child_seps, &mut root_table);
            };
            for_each_subset_capped(omega, cap, &mut consider);
        }
        let best = root_table
            .remove(&self.g.empty_set())
            .into_iter()
            .flatten()
            .map(|(_, w, wit)| (w, wit))
            .fold(None, |acc: Option<(BigInt, VertexSet)>, (w, wit)| {
                let mut slot = acc;
                update_entry(&mut slot, w, wit);
                slot
            });
        best.ok_or_else(|| Error::InfeasibleFamily("no bag can root a decomposition".into()))
    }
}

/// Maximum-weight set inducing a subgraph of maximum degree at most `k`.
/// Exactness caveats as for [`solve_induced_forest`].
pub fn solve_max_degree(
    g: &Graph,
    bags: &BagFamily,
    k: usize,
    state_cap: usize,
) -> Result<SolveResult> {
    let (ws, denom) = scaled_weights(g);
    let mut solver = MaxDegSolver {
        g,
        bags: &bags.bags,
        ws,
        k,
        cap: state_cap,
        truncated: false,
        memo: HashMap::new(),
    };
    let (scaled, witness) = solver.solve()?;
    let optimum = Weight::new(scaled, denom);
    if !witness_feasible(g, Problem::MaxDegree(k), &witness)
        || g.set_weight_sum(&witness) != optimum
    {
        return Err(Error::InvariantViolation("max-degree witness failed its re-check".into()));
    }
    let conditional = solver
        .truncated
        .then(|| String::from("state_cap truncated some bag; optimum is a lower bound"));
    Ok(SolveResult { problem: Problem::MaxDegree(k), optimum, witness, conditional })
}

// ---------------------------------------------------------------------------
// treewidth over blocks
// ---------------------------------------------------------------------------

/// Exact treewidth by the classic min-max block recurrence over all PMCs.
/// Capped at 64 vertices.
pub fn treewidth_via_blocks(g: &Graph) -> Result<usize> {
    const CAP: usize = 64;
    if g.n() > CAP {
        return Err(Error::Capability { what: "treewidth_via_blocks", limit: CAP, got: g.n() });
    }
    if g.n() == 0 {
        return Ok(0);
    }
    let pmcs: Vec<VertexSet> =
        crate::pmc::enumerate_pmcs(g).into_iter().map(|p| p.vertices).collect();
    let mut memo: HashMap<VertexSet, Option<usize>> = HashMap::new();
    let mut best: Option<usize> = None;
    for omega in &pmcs {
        let mut worst = omega.len() - 1;
        let mut ok = true;
        for d in g.components(&omega.complement()) {
            match tw_block(g, &pmcs, &d, &mut memo) {
                Some(v) => worst = worst.max(v),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            best = Some(best.map_or(worst, |b: usize| b.min(worst)));
        }
    }
    best.ok_or_else(|| Error::InvariantViolation("PMC family failed to tile the graph".into()))
}

fn tw_block(
    g: &Graph,
    pmcs: &[VertexSet],
    c: &VertexSet,
    memo: &mut HashMap<VertexSet, Option<usize>>,
) -> Option<usize> {
    if let Some(v) = memo.get(c) {
        return *v;
    }
    let s = g.neighborhood(c, false);
    let upper = s.union(c);
    let mut best: Option<usize> = None;
    for omega in pmcs {
        if !s.is_subset(omega) || !omega.is_subset(&upper) || !omega.intersects(c) {
            continue;
        }
        let mut worst = omega.len() - 1;
        let mut ok = true;
        for d in g.components(&c.minus(omega)) {
            match tw_block(g, pmcs, &d, memo) {
                Some(v) => worst = worst.max(v),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            best = Some(best.map_or(worst, |b: usize| b.min(worst)));
        }
    }
    memo.insert(c.clone(), best);
    best
}
