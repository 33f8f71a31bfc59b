//! Acceptance suite: oracle equivalence for the solvers and enumerators,
//! completion-loop invariants, exhaustive treedepth-structure sweeps,
//! coloring bounds, structural-lemma postconditions, and the linear
//! separator-count trend on chordal bipartite corpora.
//!
//! Each criterion prints one PASS/FAIL line (visible with
//! `cargo test --test acceptance -- --nocapture`).

use pmc_core::bipartite::{self, BipartiteGraph};
use pmc_core::coloring;
use pmc_core::graph::{Graph, GraphBuilder, Weight};
use pmc_core::lemmas;
use pmc_core::oracle::{self, FixtureKind};
use pmc_core::pmc;
use pmc_core::recognition;
use pmc_core::separators;
use pmc_core::solver::{self, BagFamily};
use pmc_core::treedepth::{self, TreedepthStructure};
use pmc_core::VertexSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn seeded_graph(n: usize, seed: u64, weighted: bool) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = [0.15, 0.3, 0.45, 0.6, 0.8][(seed % 5) as usize];
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                b.add_edge(u, v);
            }
        }
    }
    if weighted {
        for v in 0..n {
            let num = rng.random_range(1..=6i64);
            let den = rng.random_range(1..=4i64);
            b.set_weight(v, Weight::new(num.into(), den.into())).unwrap();
        }
    }
    b.build()
}

fn report(criterion: &str, violations: &[String]) {
    if violations.is_empty() {
        println!("[PASS] {}", criterion);
    } else {
        println!("[FAIL] {} — {} violations, first: {}", criterion, violations.len(), violations[0]);
    }
    assert!(violations.is_empty(), "{}: {:?}", criterion, &violations[..violations.len().min(3)]);
}

#[test]
fn criterion_1_solvers_match_oracles_on_1000_random_graphs() {
    let mut violations = Vec::new();
    for seed in 0..1000u64 {
        let n = 4 + (seed % 11) as usize; // 4..=14
        let g = seeded_graph(n, seed, seed % 3 == 0);
        let bags = BagFamily::all_pmcs(&g);

        let mwis = solver::solve_mwis(&g, &bags).unwrap();
        let (oracle_w, _) = oracle::oracle_mwis(&g).unwrap();
        if mwis.optimum != oracle_w {
            violations.push(format!("mwis seed {}: {} vs {}", seed, mwis.optimum, oracle_w));
        }

        let forest = solver::solve_induced_forest(&g, &bags, n).unwrap();
        let (oracle_w, _) = oracle::oracle_induced_forest(&g).unwrap();
        if forest.optimum != oracle_w || forest.conditional.is_some() {
            violations.push(format!("forest seed {}: {} vs {}", seed, forest.optimum, oracle_w));
        }

        let k = (seed % 3) as usize;
        let deg = solver::solve_max_degree(&g, &bags, k, n).unwrap();
        let (oracle_w, _) = oracle::oracle_max_degree(&g, k).unwrap();
        if deg.optimum != oracle_w || deg.conditional.is_some() {
            violations.push(format!("maxdeg{} seed {}: {} vs {}", k, seed, deg.optimum, oracle_w));
        }
    }
    report("criterion 1: solver oracle equivalence (1000 graphs, n <= 14)", &violations);
}

#[test]
fn criterion_2_enumeration_matches_subset_oracles_on_500_graphs() {
    let mut violations = Vec::new();
    for seed in 0..500u64 {
        let n = 2 + (seed % 11) as usize; // 2..=12
        let g = seeded_graph(n, 7700 + seed, false);

        let seps: Vec<VertexSet> = separators::enumerate_minimal_separators(&g)
            .into_iter()
            .map(|s| s.vertices)
            .collect();
        let oracle_seps = oracle::oracle_minseps(&g).unwrap();
        if seps != oracle_seps {
            violations.push(format!("separators differ on seed {}", seed));
        }

        let pmcs: Vec<VertexSet> =
            pmc::enumerate_pmcs(&g).into_iter().map(|p| p.vertices).collect();
        let oracle_pmcs = oracle::oracle_pmcs(&g).unwrap();
        if pmcs != oracle_pmcs {
            violations.push(format!("pmcs differ on seed {}", seed));
        }

        let (a, b) = (seps.len(), pmcs.len());
        if b > n * (a * a + a + 1) || a > n * b {
            violations.push(format!("count bounds fail on seed {}: a={} b={}", seed, a, b));
        }
    }
    report("criterion 2: enumeration oracle equivalence and count bounds (500 graphs, n <= 12)", &violations);
}

#[test]
fn criterion_3_completion_loop_invariants_on_200_fixtures() {
    let mut violations = Vec::new();
    let mut steps_total = 0usize;
    for seed in 0..200u64 {
        let n = 10 + (seed % 31) as usize; // 10..=40
        let f = match oracle::gen_fixture(FixtureKind::P7FreeBipartite, n, seed) {
            Ok(f) => f,
            Err(e) => {
                violations.push(format!("generation failed on seed {}: {}", seed, e));
                continue;
            }
        };
        let bg = BipartiteGraph::new(f.graph, f.side1.unwrap()).unwrap();
        match bipartite::complete_to_chordal_bipartite_checked(&bg) {
            Ok((done, trace, rep)) => {
                steps_total += trace.len();
                if !(rep.p7_free_every_step && rep.no_new_c6_every_step && rep.final_chordal_bipartite) {
                    violations.push(format!("invariant report not clean on seed {}", seed));
                }
                if !recognition::is_chordal_bipartite(&done.g, &done.side1).unwrap() {
                    violations.push(format!("result not chordal bipartite on seed {}", seed));
                }
            }
            Err(e) => violations.push(format!("completion failed on seed {}: {}", seed, e)),
        }
    }
    report(
        &format!("criterion 3: completion invariants on 200 fixtures (n <= 40), {} steps total", steps_total),
        &violations,
    );
}

/// Connected bipartite P7-free corpus at n <= 8: seeded samples plus a
/// small zoo.
fn small_bipartite_corpus() -> Vec<Graph> {
    let mut out = vec![
        Graph::cycle(6),
        Graph::cycle(4),
        Graph::path(6),
        Graph::complete_bipartite(2, 3),
        Graph::complete_bipartite(3, 3),
        Graph::complete_bipartite(4, 4),
        // cube graph Q3
        Graph::from_edges(
            8,
            &[(0, 1), (0, 2), (0, 4), (1, 3), (1, 5), (2, 3), (2, 6), (3, 7), (4, 5), (4, 6), (5, 7), (6, 7)],
        ),
        // C6 with a pendant
        Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 6)]),
        // theta-ish: C6 plus a vertex seeing the odd triple
        Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (6, 0), (6, 2), (6, 4)]),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(0xb1b1);
    let mut tries = 0;
    while out.len() < 32 && tries < 4000 {
        tries += 1;
        let n = 4 + rng.random_range(0..5usize); // 4..=8
        let split = 1 + rng.random_range(0..n - 1);
        let mut b = GraphBuilder::new(n);
        let mut any = false;
        for u in 0..split {
            for v in split..n {
                if rng.random_bool(0.5) {
                    b.add_edge(u, v);
                    any = true;
                }
            }
        }
        if !any {
            continue;
        }
        let g = b.build();
        if g.is_connected(&g.full_set()) && recognition::is_pt_free(&g, 7) {
            out.push(g);
        }
    }
    assert!(out.len() >= 30, "corpus generation starved");
    out
}

#[test]
fn criterion_4_structures_without_bad_c6_survive_completion() {
    let mut violations = Vec::new();
    let mut structures_checked = 0usize;
    for (gi, g) in small_bipartite_corpus().into_iter().enumerate() {
        let bg = BipartiteGraph::from_graph(g.clone()).unwrap();
        let cycles = recognition::enumerate_induced_c6(&g);
        let (done, _) = bipartite::complete_to_chordal_bipartite(&bg);
        let pair_of = |c: &recognition::InducedCycle| {
            let v = &c.vertices;
            [(v[0], v[3]), (v[1], v[4]), (v[2], v[5])]
        };
        for d in 1..=3usize {
            treedepth::for_each_treedepth_structure(&g, d, |t| {
                let bad_before = cycles.iter().any(|c| {
                    pair_of(c).iter().any(|&(a, b)| {
                        t.contains(a) && t.contains(b) && !t.comparable(a, b)
                    })
                });
                if !bad_before {
                    structures_checked += 1;
                    if !treedepth::is_treedepth_structure(&done.g, t) {
                        violations.push(format!(
                            "graph {} d {}: structure {:?} broken by completion",
                            gi, d, t.vertices
                        ));
                    } else if !bipartite::find_bad_c6(&done, t).is_empty() {
                        violations.push(format!(
                            "graph {} d {}: structure {:?} gained a bad C6",
                            gi, d, t.vertices
                        ));
                    }
                }
                violations.len() < 5
            });
        }
    }
    report(
        &format!("criterion 4: bad-C6-free structures survive completion ({} structures)", structures_checked),
        &violations,
    );
}

#[test]
fn criterion_5_gyarfas_bound_on_the_corpus() {
    let mut violations = Vec::new();
    let mut checked = 0usize;
    let mut fixtures: Vec<Graph> = Vec::new();
    for seed in 0..60u64 {
        let n = 8 + (seed % 25) as usize;
        if let Ok(f) = oracle::gen_fixture(FixtureKind::P7FreeBipartite, n, 31 * seed) {
            fixtures.push(f.graph);
        }
    }
    for seed in 0..30u64 {
        let k = 2 + (seed % 3) as usize;
        let n = 10 + (seed % 13) as usize;
        if let Ok(f) = oracle::gen_fixture(FixtureKind::P7FreeBoundedOmega(k), n, 47 * seed) {
            fixtures.push(f.graph);
        }
    }
    for g in &fixtures {
        let omega = g.clique_number().unwrap();
        match coloring::gyarfas_coloring(g, 7) {
            Ok(c) => {
                checked += 1;
                let bound = 6usize.pow(omega.saturating_sub(1) as u32);
                if !c.is_proper(g) {
                    violations.push(format!("improper coloring on n={} m={}", g.n(), g.edge_count()));
                }
                if c.num_colors > bound {
                    violations.push(format!("bound exceeded: {} > {}", c.num_colors, bound));
                }
                let classes = coloring::color_classes(g, &c);
                if classes.iter().any(|cl| !g.is_independent(cl)) {
                    violations.push("non-independent color class".into());
                }
            }
            Err(e) => violations.push(format!("coloring failed on P7-free fixture: {}", e)),
        }
    }
    report(
        &format!("criterion 5: Gyarfas properness and 6^(omega-1) bound ({} fixtures)", checked),
        &violations,
    );
}

#[test]
fn criterion_6_structural_lemma_postconditions() {
    let mut violations = Vec::new();
    let mut sep_count = 0usize;
    let mut cover_calls = 0usize;
    for seed in 0..40u64 {
        let n = 8 + (seed % 9) as usize; // 8..=16
        let kind = if seed % 3 == 2 {
            FixtureKind::P7FreeBoundedOmega(2 + (seed % 2) as usize)
        } else {
            FixtureKind::P7FreeBipartite
        };
        let f = match oracle::gen_fixture(kind, n, 1000 + seed) {
            Ok(f) => f,
            Err(_) => continue,
        };
        let g = &f.graph;
        let omega = g.clique_number().unwrap();
        let coloring = coloring::gyarfas_coloring(g, 7).unwrap();
        let classes = coloring::color_classes(g, &coloring);
        for sep in separators::enumerate_minimal_separators(g) {
            sep_count += 1;
            let (a, b) = (&sep.full_components[0], &sep.full_components[1]);

            // cograph dominator postconditions
            match lemmas::find_cograph_dominator(g, &sep) {
                Ok(z) => {
                    let ok = z.is_subset(a)
                        && g.is_connected(&z)
                        && g.is_cograph(&z)
                        && sep
                            .vertices
                            .minus(&g.neighborhood(&z, false))
                            .iter()
                            .all(|v| b.is_subset(g.neighbors(v)));
                    if !ok {
                        violations.push(format!("dominator postcondition, seed {}", seed));
                    }
                    // neighborhood cover instances: J from a color class
                    // inside N(Z) ∩ N(I), I a color class beyond N[Z].
                    let nz_closed = g.neighborhood(&z, true);
                    let nz = g.neighborhood(&z, false);
                    let omega_z = {
                        let (sub, _) = g.induced(&z);
                        sub.clique_number().unwrap()
                    };
                    let bound: usize = (1..=omega_z + 1).product();
                    for iclass in &classes {
                        let i_set = iclass.minus(&nz_closed);
                        if i_set.is_empty() {
                            continue;
                        }
                        let ni = g.neighborhood(&i_set, false);
                        for jclass in &classes {
                            let j_set = jclass.intersection(&nz).intersection(&ni);
                            if j_set.is_empty() {
                                continue;
                            }
                            cover_calls += 1;
                            match lemmas::cograph_neighborhood_cover(g, &z, &i_set, &j_set) {
                                Ok(c) => {
                                    let covered = g
                                        .neighborhood(&c.q_z, false)
                                        .union(&g.neighborhood(&c.q_i, false));
                                    if !j_set.is_subset(&covered) {
                                        violations.push(format!("cover misses J, seed {}", seed));
                                    }
                                    if c.q_z.len() > bound || c.q_i.len() > bound {
                                        violations.push(format!(
                                            "factorial bound exceeded ({} or {} > {}), seed {}",
                                            c.q_z.len(), c.q_i.len(), bound, seed
                                        ));
                                    }
                                }
                                Err(e) => violations.push(format!("cover failed, seed {}: {}", seed, e)),
                            }
                        }
                    }
                }
                Err(e) => violations.push(format!("dominator failed, seed {}: {}", seed, e)),
            }

            // x-set postconditions on both sides
            for side in [lemmas::Side::A, lemmas::Side::B] {
                let comp = match side {
                    lemmas::Side::A => a,
                    lemmas::Side::B => b,
                };
                match lemmas::find_x_set(g, &sep, side) {
                    Ok(x) => {
                        if x.len() > omega {
                            violations.push(format!("|X| > omega, seed {}", seed));
                        }
                        let nx = g.neighborhood(&x, false);
                        for v in sep.vertices.minus(&nx).iter() {
                            if !lemmas::starts_induced_p4_into(g, v, comp) {
                                violations.push(format!("x-set postcondition, seed {} v {}", seed, v));
                            }
                        }
                    }
                    Err(e) => violations.push(format!("x-set failed, seed {}: {}", seed, e)),
                }
            }
        }
    }
    report(
        &format!(
            "criterion 6: structural-lemma postconditions ({} separators, {} cover calls)",
            sep_count, cover_calls
        ),
        &violations,
    );
}

/// Fixtures with induced C6s at n <= 10 for the section-4.3 sweep.
fn c6_rich_corpus() -> Vec<Graph> {
    let mut out = vec![
        Graph::cycle(6),
        Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 6)]),
        Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (6, 0), (6, 2), (6, 4)]),
        Graph::from_edges(8, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (6, 1), (6, 3), (6, 5), (0, 7)]),
        // two far components around a C6
        Graph::from_edges(
            10,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (6, 1), (6, 3), (6, 5), (6, 7), (7, 8), (8, 9)],
        ),
    ];
    for seed in 0..12u64 {
        if let Ok(f) = oracle::gen_fixture(FixtureKind::P7FreeBipartite, 10, 5000 + seed) {
            if !recognition::enumerate_induced_c6(&f.graph).is_empty() {
                out.push(f.graph);
            }
        }
    }
    out.retain(|g| recognition::is_pt_free(g, 7) && recognition::bipartition(g).is_some());
    out
}

#[test]
fn criterion_7_bad_c6_structure_sweep() {
    let mut violations = Vec::new();
    let mut structures = 0usize;
    for (gi, g) in c6_rich_corpus().into_iter().enumerate() {
        let bg = BipartiteGraph::from_graph(g.clone()).unwrap();
        let cycles = recognition::enumerate_induced_c6(&g);

        // T-independent: big-remainder neighbors land in S1 ∪ S2 (checked
        // inside c6_context), and remainder-component neighborhoods nest
        // per side.
        let mut contexts = Vec::new();
        for cycle in &cycles {
            match bipartite::c6_context(&bg, cycle) {
                Ok(ctx) => {
                    let comps: Vec<VertexSet> = g
                        .components(&ctx.main_remainder)
                        .into_iter()
                        .filter(|c| c.len() >= 2)
                        .collect();
                    for (i, d1) in comps.iter().enumerate() {
                        for d2 in comps.iter().skip(i + 1) {
                            for side in [&bg.side1, &bg.side2] {
                                let n1 = g.neighborhood(d1, false).intersection(side);
                                let n2 = g.neighborhood(d2, false).intersection(side);
                                if !(n1.is_subset(&n2) || n2.is_subset(&n1)) {
                                    violations.push(format!(
                                        "MR neighborhoods do not nest, graph {}",
                                        gi
                                    ));
                                }
                            }
                        }
                    }
                    contexts.push((cycle.clone(), ctx));
                }
                Err(e) => violations.push(format!("context failed on graph {}: {}", gi, e)),
            }
        }

        // Per-structure: every ≺-maximal bad C6 has a T-poor side.
        for d in 1..=3usize {
            treedepth::for_each_treedepth_structure(&g, d, |t| {
                structures += 1;
                let bad = bipartite::find_bad_c6(&bg, t);
                if !bad.is_empty() {
                    let max_depth = bad
                        .iter()
                        .map(|b| bipartite::bad_c6_depth(t, b))
                        .max_by(|x, y| {
                            if bipartite::depth_order_less(*x, *y) {
                                core::cmp::Ordering::Less
                            } else if x == y {
                                core::cmp::Ordering::Equal
                            } else {
                                core::cmp::Ordering::Greater
                            }
                        })
                        .unwrap();
                    for b in &bad {
                        if bipartite::bad_c6_depth(t, b) != max_depth {
                            continue;
                        }
                        let ctx = &contexts
                            .iter()
                            .find(|(c, _)| *c == b.cycle)
                            .expect("context computed for every cycle")
                            .1;
                        let s1_poor = !bipartite::is_t_rich(&ctx.s1, t);
                        let s2_poor = !bipartite::is_t_rich(&ctx.s2, t);
                        if !s1_poor && !s2_poor {
                            violations.push(format!(
                                "≺-maximal bad C6 with both sides rich, graph {} T {:?}",
                                gi, t.vertices
                            ));
                        }
                    }
                }
                violations.len() < 5
            });
        }
    }
    report(
        &format!("criterion 7: bad-C6 structure sweep ({} structures)", structures),
        &violations,
    );
}

#[test]
fn criterion_8_kloks_linear_trend() {
    let mut violations = Vec::new();
    let sizes = [20usize, 40, 80, 160];
    let mut per_size_ratio = Vec::new();
    for (si, &n) in sizes.iter().enumerate() {
        let mut ratios = Vec::new();
        for seed in 0..5u64 {
            let f = oracle::gen_fixture(FixtureKind::ChordalBipartite, n, 900 + 10 * si as u64 + seed)
                .unwrap();
            let g = &f.graph;
            let side1 = f.side1.unwrap();
            // The construction promise, re-checked through the separator
            // criterion at every size.
            let seps = separators::enumerate_minimal_separators(g);
            let side2 = side1.complement();
            if seps.iter().any(|s| {
                let s1 = s.vertices.intersection(&side1);
                let s2 = s.vertices.intersection(&side2);
                !g.is_complete_between(&s1, &s2)
            }) {
                violations.push(format!("fixture n={} seed {} not chordal bipartite", n, seed));
            }
            ratios.push(seps.len() as f64 / (g.n() + g.edge_count()) as f64);
        }
        let mean = ratios.iter().sum::<f64>() / ratios.len() as f64;
        per_size_ratio.push(mean);
    }
    let max = per_size_ratio.iter().cloned().fold(f64::MIN, f64::max);
    let min = per_size_ratio.iter().cloned().fold(f64::MAX, f64::min);
    if max / min > 4.0 {
        violations.push(format!(
            "count/(n+m) drifts: per-size means {:?}, ratio {:.2}",
            per_size_ratio,
            max / min
        ));
    }
    report(
        &format!(
            "criterion 8: separator-count trend on chordal bipartite corpora (means {:?}, spread {:.2})",
            per_size_ratio.iter().map(|r| (r * 100.0).round() / 100.0).collect::<Vec<_>>(),
            max / min
        ),
        &violations,
    );
}

#[test]
fn criterion_9_completed_pipeline_matches_mwis_oracle() {
    let mut violations = Vec::new();
    for seed in 0..200u64 {
        let n = 8 + (seed % 11) as usize; // 8..=18
        let f = match oracle::gen_fixture(FixtureKind::P7FreeBipartite, n, 300_000 + seed) {
            Ok(f) => f,
            Err(e) => {
                violations.push(format!("generation failed on seed {}: {}", seed, e));
                continue;
            }
        };
        let bg = BipartiteGraph::new(f.graph.clone(), f.side1.unwrap()).unwrap();
        match bipartite::solve_on_completed(&bg, solver::Problem::Mwis, None) {
            Ok((r, _)) => {
                let (oracle_w, _) = oracle::oracle_mwis(&f.graph).unwrap();
                if r.optimum != oracle_w {
                    violations.push(format!(
                        "seed {}: pipeline {} vs oracle {}",
                        seed, r.optimum, oracle_w
                    ));
                }
            }
            Err(e) => violations.push(format!("pipeline failed on seed {}: {}", seed, e)),
        }
    }
    report("criterion 9: end-to-end bipartite pipeline equals oracle MWIS (200 fixtures, n <= 18)", &violations);
}
