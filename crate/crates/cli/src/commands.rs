//! Subcommand payload builders. Every handler returns a JSON value; the
//! envelope, timing and exit codes live in `main`.

use std::path::Path;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use serde_json::{json, Value};

use pmc_core::bipartite::{self, BipartiteGraph};
use pmc_core::coloring;
use pmc_core::graph::{Graph, Weight};
use pmc_core::oracle::{self, FixtureKind};
use pmc_core::pmc::{self, PmcCover};
use pmc_core::recognition;
use pmc_core::separators;
use pmc_core::solver::{self, BagFamily, Problem};
use pmc_core::treedepth;
use pmc_core::VertexSet;

use crate::io::ParsedGraph;

pub fn set_json(s: &VertexSet) -> Value {
    Value::Array(s.iter().map(|v| json!(v)).collect())
}

pub fn weight_json(w: &Weight) -> Value {
    if num_traits::One::is_one(w.denom()) {
        json!(w.numer().to_string())
    } else {
        json!(format!("{}/{}", w.numer(), w.denom()))
    }
}

fn side1_of(parsed: &ParsedGraph) -> Result<VertexSet> {
    match &parsed.side1 {
        Some(s) => Ok(s.clone()),
        None => recognition::bipartition(&parsed.graph)
            .context("graph is not bipartite and no bip line was given"),
    }
}

pub fn recognize(parsed: &ParsedGraph) -> Result<Value> {
    let g = &parsed.graph;
    let p7_free = recognition::is_pt_free(g, 7);
    let chordal = recognition::is_chordal(g);
    let bipartite = recognition::bipartition(g);
    let c6 = recognition::enumerate_induced_c6(g);
    let chordal_bipartite = match &bipartite {
        Some(side) => Some(recognition::is_chordal_bipartite(g, side).map_err(anyhow::Error::new)?),
        None => None,
    };
    Ok(json!({
        "n": g.n(),
        "m": g.edge_count(),
        "weighted": parsed.weighted,
        "p7_free": p7_free,
        "chordal": chordal,
        "bipartite": bipartite.is_some(),
        "chordal_bipartite": chordal_bipartite,
        "c6_count": c6.len(),
    }))
}

pub fn color(parsed: &ParsedGraph, t: usize) -> Result<Value> {
    let g = &parsed.graph;
    let coloring = coloring::gyarfas_coloring(g, t).map_err(anyhow::Error::new)?;
    let classes = coloring::color_classes(g, &coloring);
    Ok(json!({
        "t": t,
        "num_colors": coloring.num_colors,
        "classes": classes.iter().map(set_json).collect::<Vec<_>>(),
    }))
}

pub fn enumerate(parsed: &ParsedGraph, what: &str) -> Result<Value> {
    let g = &parsed.graph;
    let seps = separators::enumerate_minimal_separators(g);
    match what {
        "seps" => Ok(json!({
            "count": seps.len(),
            "separators": seps.iter().map(|s| set_json(&s.vertices)).collect::<Vec<_>>(),
        })),
        "pmcs" => {
            let pmcs = pmc::enumerate_pmcs(g);
            let a = seps.len();
            let b = pmcs.len();
            Ok(json!({
                "count": b,
                "pmcs": pmcs.iter().map(|p| set_json(&p.vertices)).collect::<Vec<_>>(),
                "minsep_count": a,
                "bounds": {
                    "b_le_n_a2_a_1": pmc::check_count_bounds(g.n(), a, b),
                    "a_le_n_b": a <= g.n() * b,
                },
            }))
        }
        other => bail!("unknown enumeration target {:?} (use seps|pmcs)", other),
    }
}

pub fn complete_bipartite(parsed: &ParsedGraph, check_invariants: bool) -> Result<Value> {
    let side1 = side1_of(parsed)?;
    let bg = BipartiteGraph::new(parsed.graph.clone(), side1).map_err(anyhow::Error::new)?;
    let (done, trace, invariant_report) = if check_invariants {
        let (done, trace, report) =
            bipartite::complete_to_chordal_bipartite_checked(&bg).map_err(anyhow::Error::new)?;
        (
            done,
            trace,
            Some(json!({
                "p7_free_every_step": report.p7_free_every_step,
                "no_new_c6_every_step": report.no_new_c6_every_step,
                "final_chordal_bipartite": report.final_chordal_bipartite,
            })),
        )
    } else {
        if !recognition::is_pt_free(&bg.g, 7) {
            bail!("completion requires a P7-free input");
        }
        let (done, trace) = bipartite::complete_to_chordal_bipartite(&bg);
        (done, trace, None)
    };
    let seps = separators::enumerate_minimal_separators(&done.g);
    let pmcs = pmc::enumerate_pmcs(&done.g);
    Ok(json!({
        "steps": trace.iter().map(|s| json!({
            "cycle": s.cycle.vertices,
            "pair": [s.pair.0, s.pair.1],
            "separator": set_json(&s.separator),
            "added_edges": s.added.iter().map(|&(u, v)| json!([u, v])).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
        "added_edges": trace.iter().map(|s| s.added.len()).sum::<usize>(),
        "final_minsep_count": seps.len(),
        "final_pmc_count": pmcs.len(),
        "invariant_report": invariant_report,
    }))
}

fn parse_bags_file(g: &Graph, path: &Path) -> Result<BagFamily> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading bags file {}", path.display()))?;
    let mut bags = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut s = g.empty_set();
        for tok in line.split_whitespace() {
            let v: usize = tok
                .parse()
                .with_context(|| format!("bags file line {}: bad vertex {:?}", i + 1, tok))?;
            if v >= g.n() {
                bail!("bags file line {}: vertex {} out of range", i + 1, v);
            }
            s.insert(v);
        }
        bags.push(s);
    }
    Ok(BagFamily::new(bags))
}

pub struct SolveOptions<'a> {
    pub problem: String,
    pub k: usize,
    pub bags: String,
    pub bags_file: Option<&'a Path>,
    pub state_cap: Option<usize>,
    pub certify: bool,
}

pub fn solve(parsed: &ParsedGraph, opts: &SolveOptions<'_>) -> Result<Value> {
    let g = &parsed.graph;
    let problem = match opts.problem.as_str() {
        "mwis" => Problem::Mwis,
        "forest" => Problem::InducedForest,
        "maxdeg" => Problem::MaxDegree(opts.k),
        other => bail!("unknown problem {:?} (use mwis|forest|maxdeg)", other),
    };
    let cap = opts.state_cap.unwrap_or(g.n());
    let mut completion: Option<Value> = None;
    let result = match opts.bags.as_str() {
        "completed" => {
            let side1 = side1_of(parsed)?;
            let bg = BipartiteGraph::new(g.clone(), side1).map_err(anyhow::Error::new)?;
            let (result, outcome) =
                bipartite::solve_on_completed(&bg, problem, opts.state_cap)
                    .map_err(anyhow::Error::new)?;
            completion = Some(json!({
                "steps": outcome.steps,
                "added_edges": outcome.added_edges,
                "final_minsep_count": outcome.final_minsep_count,
                "final_pmc_count": outcome.final_pmc_count,
            }));
            result
        }
        source => {
            let family = match source {
                "pmcs" => BagFamily::all_pmcs(g),
                "file" => {
                    let path = opts.bags_file.context("--bags file needs --bags-file")?;
                    parse_bags_file(g, path)?
                }
                other => bail!("unknown bag source {:?} (use pmcs|completed|file)", other),
            };
            match problem {
                Problem::Mwis => solver::solve_mwis(g, &family).map_err(anyhow::Error::new)?,
                Problem::InducedForest => {
                    solver::solve_induced_forest(g, &family, cap).map_err(anyhow::Error::new)?
                }
                Problem::MaxDegree(k) => {
                    solver::solve_max_degree(g, &family, k, cap).map_err(anyhow::Error::new)?
                }
            }
        }
    };
    let mut payload = json!({
        "problem": result.problem.to_string(),
        "optimum": weight_json(&result.optimum),
        "witness": set_json(&result.witness),
        "witness_weight": weight_json(&g.set_weight_sum(&result.witness)),
        "conditional": result.conditional,
        "completion": completion,
    });
    if opts.certify {
        let certified = match problem {
            Problem::Mwis if g.n() <= 20 => {
                let (w, _) = oracle::oracle_mwis(g).map_err(anyhow::Error::new)?;
                Some(w)
            }
            Problem::InducedForest if g.n() <= 14 => {
                let (w, _) = oracle::oracle_induced_forest(g).map_err(anyhow::Error::new)?;
                Some(w)
            }
            Problem::MaxDegree(k) if g.n() <= 14 => {
                let (w, _) = oracle::oracle_max_degree(g, k).map_err(anyhow::Error::new)?;
                Some(w)
            }
            _ => None,
        };
        let obj = payload.as_object_mut().unwrap();
        match certified {
            Some(w) => {
                if w != result.optimum && result.conditional.is_none() {
                    return Err(anyhow::Error::new(pmc_core::Error::InvariantViolation(
                        format!("solver returned {} but the oracle says {}", result.optimum, w),
                    )));
                }
                obj.insert("certified".into(), json!(true));
                obj.insert("oracle_optimum".into(), weight_json(&w));
            }
            None => {
                obj.insert("certified".into(), json!(false));
                obj.insert(
                    "certify_note".into(),
                    json!("instance exceeds the oracle size caps"),
                );
            }
        }
    }
    Ok(payload)
}

pub fn params(parsed: &ParsedGraph) -> Result<Value> {
    let g = &parsed.graph;
    let td = treedepth::treedepth(g);
    let tw = treedepth::treewidth(g);
    let cap_note = |e: pmc_core::Error| json!({ "unavailable": e.to_string() });
    Ok(json!({
        "treedepth": match td { Ok(v) => json!(v), Err(e) => cap_note(e) },
        "treewidth": match tw { Ok(v) => json!(v), Err(e) => cap_note(e) },
        "degeneracy": treedepth::degeneracy(g),
    }))
}

pub fn gen(kind: &str, n: usize, seed: u64, omega: usize) -> Result<(String, Value)> {
    let kind = match kind {
        "random" => FixtureKind::Random,
        "chordal-bipartite" => FixtureKind::ChordalBipartite,
        "p7free-bipartite" => FixtureKind::P7FreeBipartite,
        "p7free-bounded-omega" => FixtureKind::P7FreeBoundedOmega(omega),
        other => bail!(
            "unknown kind {:?} (use random|chordal-bipartite|p7free-bipartite|p7free-bounded-omega)",
            other
        ),
    };
    let fixture = oracle::gen_fixture(kind, n, seed).map_err(anyhow::Error::new)?;
    let text = crate::io::write_edgelist(&fixture.graph, fixture.side1.as_ref());
    let meta = json!({
        "kind": format!("{:?}", fixture.kind),
        "n": fixture.graph.n(),
        "m": fixture.graph.edge_count(),
        "seed": seed,
    });
    Ok((text, meta))
}

/// Lemma regressions replayed on one input graph; the `verify` command.
pub fn verify(parsed: &ParsedGraph) -> Result<(Value, bool)> {
    let g = &parsed.graph;
    let mut checks: Vec<Value> = Vec::new();
    let mut all = true;
    let mut push = |name: &str, outcome: Option<bool>, detail: Value, all: &mut bool| {
        if outcome == Some(false) {
            *all = false;
        }
        checks.push(json!({
            "name": name,
            "passed": outcome,
            "detail": detail,
        }));
    };

    let p7_free = recognition::is_pt_free(g, 7);
    push("p7_free_input", Some(true), json!({ "p7_free": p7_free }), &mut all);

    // Gyarfas coloring: properness and the chi bound.
    if p7_free && g.n() <= 64 {
        let omega = g.clique_number().map_err(anyhow::Error::new)?;
        match coloring::gyarfas_coloring(g, 7) {
            Ok(c) => {
                let ok = c.is_proper(g) && c.num_colors <= 6usize.pow(omega.saturating_sub(1) as u32);
                push(
                    "gyarfas_bound",
                    Some(ok),
                    json!({ "num_colors": c.num_colors, "omega": omega }),
                    &mut all,
                );
            }
            Err(e) => push("gyarfas_bound", Some(false), json!({ "error": e.to_string() }), &mut all),
        }
    }

    // Structural lemma postconditions per minimal separator.
    let seps = separators::enumerate_minimal_separators(g);
    if p7_free {
        let mut dominator_ok = true;
        let mut x_set_ok = true;
        for sep in &seps {
            let (a, b) = (&sep.full_components[0], &sep.full_components[1]);
            match pmc_core::lemmas::find_cograph_dominator(g, sep) {
                Ok(z) => {
                    let nz = g.neighborhood(&z, false);
                    let leftover = sep.vertices.minus(&nz);
                    dominator_ok &= z.is_subset(a)
                        && g.is_connected(&z)
                        && g.is_cograph(&z)
                        && leftover.iter().all(|v| b.is_subset(g.neighbors(v)));
                }
                Err(_) => dominator_ok = false,
            }
            for side in [pmc_core::lemmas::Side::A, pmc_core::lemmas::Side::B] {
                let comp = match side {
                    pmc_core::lemmas::Side::A => a,
                    pmc_core::lemmas::Side::B => b,
                };
                match pmc_core::lemmas::find_x_set(g, sep, side) {
                    Ok(x) => {
                        let nx = g.neighborhood(&x, false);
                        x_set_ok &= sep
                            .vertices
                            .minus(&nx)
                            .iter()
                            .all(|v| pmc_core::lemmas::starts_induced_p4_into(g, v, comp));
                    }
                    Err(_) => x_set_ok = false,
                }
            }
        }
        push("cograph_dominator_postconditions", Some(dominator_ok), json!({ "separators": seps.len() }), &mut all);
        push("x_set_postconditions", Some(x_set_ok), json!({ "separators": seps.len() }), &mut all);
    }

    // PMC covers within the default cap.
    if p7_free && g.n() <= 40 {
        let pmcs = pmc::enumerate_pmcs(g);
        let mut max_cover = 0usize;
        let mut covered = true;
        for p in &pmcs {
            match pmc::pmc_cover(g, p, 8) {
                Some(PmcCover::ClosedNeighborhood(_)) => {}
                Some(PmcCover::ComponentFamily(ds)) => max_cover = max_cover.max(ds.len()),
                None => covered = false,
            }
        }
        push(
            "pmc_cover_within_cap",
            Some(covered),
            json!({ "pmcs": pmcs.len(), "max_component_cover": max_cover, "cap": 8 }),
            &mut all,
        );
    }

    // Completion invariants on bipartite P7-free inputs.
    if p7_free {
        if let Some(side1) = parsed
            .side1
            .clone()
            .or_else(|| recognition::bipartition(g))
        {
            let bg = BipartiteGraph::new(g.clone(), side1).map_err(anyhow::Error::new)?;
            match bipartite::complete_to_chordal_bipartite_checked(&bg) {
                Ok((_, trace, report)) => push(
                    "completion_invariants",
                    Some(report.p7_free_every_step && report.no_new_c6_every_step && report.final_chordal_bipartite),
                    json!({ "steps": trace.len() }),
                    &mut all,
                ),
                Err(e) => push("completion_invariants", Some(false), json!({ "error": e.to_string() }), &mut all),
            }
        }
    }

    // Solver against the oracles at oracle sizes.
    if g.n() <= 14 {
        let bags = BagFamily::all_pmcs(g);
        let mwis = solver::solve_mwis(g, &bags).map_err(anyhow::Error::new)?;
        let (ow, _) = oracle::oracle_mwis(g).map_err(anyhow::Error::new)?;
        push("mwis_matches_oracle", Some(mwis.optimum == ow), json!({ "optimum": weight_json(&mwis.optimum) }), &mut all);
        let forest = solver::solve_induced_forest(g, &bags, g.n()).map_err(anyhow::Error::new)?;
        let (ow, _) = oracle::oracle_induced_forest(g).map_err(anyhow::Error::new)?;
        push("forest_matches_oracle", Some(forest.optimum == ow), json!({ "optimum": weight_json(&forest.optimum) }), &mut all);
    }

    Ok((json!({ "checks": checks, "all_passed": all }), all))
}

pub fn bench(corpus: &Path, budget_ms: Option<u64>, csv_path: Option<&Path>) -> Result<Value> {
    let mut files: Vec<_> = std::fs::read_dir(corpus)
        .with_context(|| format!("reading corpus dir {}", corpus.display()))?
        .filter_map(|e| e.ok())
        .map(|e| e.path())
        .filter(|p| p.is_file())
        .collect();
    files.sort();
    let started = Instant::now();
    let mut rows = Vec::new();
    let mut csv = String::from("file,n,m,parse_ms,minseps,pmcs,enum_ms,completion_steps,complete_ms,mwis,solve_ms,error\n");
    for path in files {
        if let Some(budget) = budget_ms {
            if started.elapsed().as_millis() as u64 > budget {
                break;
            }
        }
        let name = path.file_name().unwrap().to_string_lossy().to_string();
        let row = bench_one(&path);
        match row {
            Ok(v) => {
                csv.push_str(&format!(
                    "{},{},{},{},{},{},{},{},{},{},{},\n",
                    name,
                    v["n"], v["m"], v["parse_ms"], v["minseps"], v["pmcs"], v["enum_ms"],
                    v["completion_steps"], v["complete_ms"],
                    v["mwis"].as_str().unwrap_or("-"), v["solve_ms"],
                ));
                rows.push(json!({ "file": name, "ok": true, "metrics": v }));
            }
            Err(e) => {
                csv.push_str(&format!("{},,,,,,,,,,,\"{}\"\n", name, e));
                rows.push(json!({ "file": name, "ok": false, "error": e.to_string() }));
            }
        }
    }
    if let Some(p) = csv_path {
        std::fs::write(p, &csv).with_context(|| format!("writing {}", p.display()))?;
    }
    Ok(json!({ "instances": rows, "csv": csv }))
}

fn bench_one(path: &Path) -> Result<Value> {
    let text = std::fs::read_to_string(path)?;
    let t0 = Instant::now();
    let parsed = crate::io::parse_graph(&text, crate::io::sniff_format(&text))?;
    let parse_ms = t0.elapsed().as_millis();
    let g = &parsed.graph;

    let t1 = Instant::now();
    let seps = separators::enumerate_minimal_separators(g);
    let pmcs = pmc::enumerate_pmcs(g);
    let enum_ms = t1.elapsed().as_millis();

    let mut completion_steps = Value::Null;
    let mut complete_ms = Value::Null;
    let p7_free = recognition::is_pt_free(g, 7);
    let side1 = parsed.side1.clone().or_else(|| recognition::bipartition(g));
    if p7_free {
        if let Some(side1) = side1 {
            let bg = BipartiteGraph::new(g.clone(), side1).map_err(anyhow::Error::new)?;
            let t2 = Instant::now();
            let (_, trace) = bipartite::complete_to_chordal_bipartite(&bg);
            complete_ms = json!(t2.elapsed().as_millis() as u64);
            completion_steps = json!(trace.len());
        }
    }

    let t3 = Instant::now();
    let family = BagFamily::new(pmcs.iter().map(|p| p.vertices.clone()).collect());
    let mwis = solver::solve_mwis(g, &family).map_err(anyhow::Error::new)?;
    let solve_ms = t3.elapsed().as_millis();

    Ok(json!({
        "n": g.n(),
        "m": g.edge_count(),
        "parse_ms": parse_ms as u64,
        "minseps": seps.len(),
        "pmcs": pmcs.len(),
        "enum_ms": enum_ms as u64,
        "completion_steps": completion_steps,
        "complete_ms": complete_ms,
        "mwis": weight_json(&mwis.optimum),
        "solve_ms": solve_ms as u64,
    }))
}
