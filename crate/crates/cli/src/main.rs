//! `pmc`: recognition, enumeration, completion and exact solving for small
//! graphs, built on the `pmc-core` library. All machine output is JSON;
//! `--pretty` switches to indented JSON.
//!
//! Exit codes: 0 success, 1 domain/input error, 2 invariant violation
//! (a bug in the implementation, not the input).

mod commands;
mod io;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

#[derive(Parser)]
#[command(name = "pmc", version, about = "potential-maximal-clique toolkit for small graphs")]
struct Cli {
    /// Indent the JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct InputArgs {
    /// Graph file.
    #[arg(long)]
    input: PathBuf,
    /// Input format; sniffed from the content when omitted.
    #[arg(long, value_enum)]
    format: Option<io::Format>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Class membership: P7-free, chordal, (chordal) bipartite, C6 count.
    Recognize {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Constructive chi-bounded coloring for P_t-free graphs.
    Color {
        #[command(flatten)]
        input: InputArgs,
        /// Forbidden induced path length.
        #[arg(long, default_value_t = 7)]
        t: usize,
    },
    /// Minimal separators or potential maximal cliques, with count bounds.
    Enumerate {
        #[command(flatten)]
        input: InputArgs,
        /// What to enumerate: seps | pmcs.
        #[arg(long)]
        what: String,
    },
    /// Chordal-bipartite completion loop for P7-free bipartite graphs.
    CompleteBipartite {
        #[command(flatten)]
        input: InputArgs,
        /// Replay the per-step invariants.
        #[arg(long)]
        check_invariants: bool,
    },
    /// Solve mwis | forest | maxdeg over a bag family.
    Solve {
        #[command(flatten)]
        input: InputArgs,
        /// Problem: mwis | forest | maxdeg.
        #[arg(long)]
        problem: String,
        /// Degree bound for maxdeg.
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Bag source: pmcs | completed | file.
        #[arg(long, default_value = "pmcs")]
        bags: String,
        /// Bags file (one space-separated vertex list per line).
        #[arg(long)]
        bags_file: Option<PathBuf>,
        /// Solution vertices tracked per bag; defaults to n (exact).
        #[arg(long)]
        state_cap: Option<usize>,
        /// Re-run the brute-force oracle when the instance is small.
        #[arg(long)]
        certify: bool,
    },
    /// Exact treedepth / treewidth / degeneracy at small sizes.
    Params {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Replay the lemma regressions on one input.
    Verify {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Write a generated instance in edge-list format.
    Gen {
        /// random | chordal-bipartite | p7free-bipartite | p7free-bounded-omega.
        #[arg(long)]
        kind: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Clique bound for p7free-bounded-omega.
        #[arg(long, default_value_t = 3)]
        omega: usize,
        /// Output path; stdout when omitted.
        #[arg(long, short = 'o')]
        output: Option<PathBuf>,
    },
    /// Run enumeration/completion/solve over a corpus directory.
    Bench {
        /// Directory of graph files.
        #[arg(long)]
        corpus: PathBuf,
        /// Soft total budget in milliseconds; stops launching instances.
        #[arg(long)]
        budget_ms: Option<u64>,
        /// Also write the CSV to this path.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

fn digest(text: &str) -> String {
    let mut hasher = Sha256::new();
    hasher.update(text.as_bytes());
    let out = hasher.finalize();
    hex_prefix(&out, 12)
}

fn hex_prefix(bytes: &[u8], len: usize) -> String {
    bytes.iter().map(|b| format!("{:02x}", b)).collect::<String>()[..len].to_string()
}

struct Outcome {
    payload: Value,
    /// Set for verify-style commands that fail their invariants.
    invariants_ok: bool,
}

fn load(input: &InputArgs) -> anyhow::Result<(io::ParsedGraph, String, u64)> {
    let text = std::fs::read_to_string(&input.input)
        .map_err(|e| anyhow::anyhow!("reading {}: {}", input.input.display(), e))?;
    let format = input.format.unwrap_or_else(|| io::sniff_format(&text));
    let t0 = Instant::now();
    let parsed = io::parse_graph(&text, format)?;
    Ok((parsed, digest(&text), t0.elapsed().as_millis() as u64))
}

/// Subcommand name, optional (input digest, parse ms), and the payload.
type RunOutput = (String, Option<(String, u64)>, Outcome);

fn run(cli: &Cli) -> anyhow::Result<RunOutput> {
    let ok = |payload| Outcome { payload, invariants_ok: true };
    match &cli.cmd {
        Cmd::Recognize { input } => {
            let (parsed, digest, parse_ms) = load(input)?;
            Ok(("recognize".into(), Some((digest, parse_ms)), ok(commands::recognize(&parsed)?)))
        }
        Cmd::Color { input, t } => {
            let (parsed, digest, parse_ms) = load(input)?;
            Ok(("color".into(), Some((digest, parse_ms)), ok(commands::color(&parsed, *t)?)))
        }
        Cmd::Enumerate { input, what } => {
            let (parsed, digest, parse_ms) = load(input)?;
            Ok(("enumerate".into(), Some((digest, parse_ms)), ok(commands::enumerate(&parsed, what)?)))
        }
        Cmd::CompleteBipartite { input, check_invariants } => {
            let (parsed, digest, parse_ms) = load(input)?;
            Ok((
                "complete-bipartite".into(),
                Some((digest, parse_ms)),
                ok(commands::complete_bipartite(&parsed, *check_invariants)?),
            ))
        }
        Cmd::Solve { input, problem, k, bags, bags_file, state_cap, certify } => {
            let (parsed, digest, parse_ms) = load(input)?;
            let opts = commands::SolveOptions {
                problem: problem.clone(),
                k: *k,
                bags: bags.clone(),
                bags_file: bags_file.as_deref(),
                state_cap: *state_cap,
                certify: *certify,
            };
            Ok(("solve".into(), Some((digest, parse_ms)), ok(commands::solve(&parsed, &opts)?)))
        }
        Cmd::Params { input } => {
            let (parsed, digest, parse_ms) = load(input)?;
            Ok(("params".into(), Some((digest, parse_ms)), ok(commands::params(&parsed)?)))
        }
        Cmd::Verify { input } => {
            let (parsed, digest, parse_ms) = load(input)?;
            let (payload, all) = commands::verify(&parsed)?;
            Ok(("verify".into(), Some((digest, parse_ms)), Outcome { payload, invariants_ok: all }))
        }
        Cmd::Gen { kind, n, seed, omega, output } => {
            let (text, meta) = commands::gen(kind, *n, *seed, *omega)?;
            match output {
                Some(path) => {
                    std::fs::write(path, &text)
                        .map_err(|e| anyhow::anyhow!("writing {}: {}", path.display(), e))?;
                    Ok(("gen".into(), None, ok(json!({ "written": path.display().to_string(), "meta": meta }))))
                }
                None => Ok(("gen".into(), None, ok(json!({ "graph": text, "meta": meta })))),
            }
        }
        Cmd::Bench { corpus, budget_ms, csv } => {
            let payload = commands::bench(corpus, *budget_ms, csv.as_deref())?;
            Ok(("bench".into(), None, ok(payload)))
        }
    }
}

fn emit(cli: &Cli, value: &Value) {
    let text = if cli.pretty {
        serde_json::to_string_pretty(value).expect("serializable")
    } else {
        serde_json::to_string(value).expect("serializable")
    };
    println!("{}", text);
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let t0 = Instant::now();
    match run(&cli) {
        Ok((subcommand, input_meta, outcome)) => {
            let report = json!({
                "schema": 1,
                "subcommand": subcommand,
                "input_digest": input_meta.as_ref().map(|(d, _)| d.clone()),
                "parse_ms": input_meta.as_ref().map(|(_, ms)| ms),
                "wall_ms": t0.elapsed().as_millis() as u64,
                "result": outcome.payload,
            });
            emit(&cli, &report);
            if outcome.invariants_ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(err) => {
            let invariant = err
                .downcast_ref::<pmc_core::Error>()
                .map(|e| matches!(e, pmc_core::Error::InvariantViolation(_)))
                .unwrap_or(false);
            let report = json!({
                "schema": 1,
                "error": {
                    "kind": if invariant { "invariant-violation" } else { "domain" },
                    "message": err.to_string(),
                },
            });
            emit(&cli, &report);
            ExitCode::from(if invariant { 2 } else { 1 })
        }
    }
}
