//! Graph file formats: a plain edge-list format and DIMACS `.col`-style.
//!
//! Edge list:
//! ```text
//! n m [weighted]
//! u v            (m lines, 0-based)
//! w v num/den    (optional weight lines)
//! bip v1 v2 ...  (optional side-one list)
//! ```
//!
//! DIMACS: `c` comments, `p edge n m`, `e u v` with 1-based vertices; a
//! `bip v1 v2 ...` line (1-based) is accepted as an extension.

use anyhow::{bail, Context, Result};
use num_rational::BigRational;
use num_traits::One;
use pmc_core::graph::{Graph, GraphBuilder, Weight};
use pmc_core::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Edgelist,
    Dimacs,
}

#[derive(Clone, Debug)]
pub struct ParsedGraph {
    pub graph: Graph,
    /// Side-one vertices when a `bip` line was present.
    pub side1: Option<VertexSet>,
    pub weighted: bool,
}

pub fn parse_graph(text: &str, format: Format) -> Result<ParsedGraph> {
    match format {
        Format::Edgelist => parse_edgelist(text),
        Format::Dimacs => parse_dimacs(text),
    }
}

/// Guesses the format from the content: DIMACS starts with `c`/`p` lines.
pub fn sniff_format(text: &str) -> Format {
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        return if line.starts_with('c') || line.starts_with("p ") {
            Format::Dimacs
        } else {
            Format::Edgelist
        };
    }
    Format::Edgelist
}

fn parse_weight(tok: &str) -> Result<Weight> {
    let (num, den) = match tok.split_once('/') {
        Some((n, d)) => (n, d),
        None => (tok, "1"),
    };
    let num: i64 = num.parse().with_context(|| format!("bad weight numerator {:?}", num))?;
    let den: i64 = den.parse().with_context(|| format!("bad weight denominator {:?}", den))?;
    if den == 0 {
        bail!("weight denominator is zero");
    }
    Ok(BigRational::new(num.into(), den.into()))
}

fn parse_edgelist(text: &str) -> Result<ParsedGraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (line_no, header) = lines.next().context("empty input")?;
    let mut head = header.split_whitespace();
    let n: usize = head
        .next()
        .context("missing vertex count")?
        .parse()
        .with_context(|| format!("line {}: bad vertex count", line_no))?;
    let m: usize = head
        .next()
        .context("missing edge count")?
        .parse()
        .with_context(|| format!("line {}: bad edge count", line_no))?;
    let weighted = matches!(head.next(), Some("weighted"));

    let mut builder = GraphBuilder::new(n);
    let mut edges_seen = 0usize;
    let mut side1: Option<VertexSet> = None;
    let mut any_weight = false;
    for (line_no, line) in lines {
        let mut toks = line.split_whitespace();
        let first = toks.next().unwrap();
        match first {
            "w" => {
                let v: usize = toks
                    .next()
                    .with_context(|| format!("line {}: missing vertex in weight line", line_no))?
                    .parse()
                    .with_context(|| format!("line {}: bad vertex", line_no))?;
                let w = parse_weight(
                    toks.next()
                        .with_context(|| format!("line {}: missing weight value", line_no))?,
                )?;
                if v >= n {
                    bail!("line {}: vertex {} out of range", line_no, v);
                }
                builder
                    .set_weight(v, w)
                    .map_err(|e| anyhow::anyhow!("line {}: {}", line_no, e))?;
                any_weight = true;
            }
            "bip" => {
                let mut s = VertexSet::empty(n);
                for tok in toks {
                    let v: usize = tok
                        .parse()
                        .with_context(|| format!("line {}: bad vertex {:?}", line_no, tok))?;
                    if v >= n {
                        bail!("line {}: vertex {} out of range", line_no, v);
                    }
                    s.insert(v);
                }
                side1 = Some(s);
            }
            _ => {
                let u: usize = first
                    .parse()
                    .with_context(|| format!("line {}: bad endpoint {:?}", line_no, first))?;
                let v: usize = toks
                    .next()
                    .with_context(|| format!("line {}: missing second endpoint", line_no))?
                    .parse()
                    .with_context(|| format!("line {}: bad endpoint", line_no))?;
                if u >= n || v >= n || u == v {
                    bail!("line {}: bad edge ({}, {})", line_no, u, v);
                }
                builder.add_edge(u, v);
                edges_seen += 1;
            }
        }
    }
    if edges_seen != m {
        bail!("header promises {} edges, found {}", m, edges_seen);
    }
    Ok(ParsedGraph { graph: builder.build(), side1, weighted: weighted || any_weight })
}

fn parse_dimacs(text: &str) -> Result<ParsedGraph> {
    let mut builder: Option<GraphBuilder> = None;
    let mut n = 0usize;
    let mut side1: Option<Vec<usize>> = None;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut toks = line.split_whitespace();
        match toks.next().unwrap() {
            "p" => {
                let _kind = toks.next();
                n = toks
                    .next()
                    .with_context(|| format!("line {}: missing vertex count", line_no))?
                    .parse()
                    .with_context(|| format!("line {}: bad vertex count", line_no))?;
                builder = Some(GraphBuilder::new(n));
            }
            "e" => {
                let b = builder
                    .as_mut()
                    .with_context(|| format!("line {}: edge before problem line", line_no))?;
                let u: usize = toks
                    .next()
                    .with_context(|| format!("line {}: missing endpoint", line_no))?
                    .parse()?;
                let v: usize = toks
                    .next()
                    .with_context(|| format!("line {}: missing endpoint", line_no))?
                    .parse()?;
                if u < 1 || v < 1 || u > n || v > n || u == v {
                    bail!("line {}: bad edge ({}, {})", line_no, u, v);
                }
                b.add_edge(u - 1, v - 1);
            }
            "bip" => {
                let mut s = Vec::new();
                for tok in toks {
                    let v: usize = tok.parse()?;
                    if v < 1 || v > n {
                        bail!("line {}: vertex {} out of range", line_no, v);
                    }
                    s.push(v - 1);
                }
                side1 = Some(s);
            }
            other => bail!("line {}: unknown record {:?}", line_no, other),
        }
    }
    let builder = builder.context("missing problem line")?;
    let g = builder.build();
    let side1 = side1.map(|s| VertexSet::from_indices(g.n(), s));
    Ok(ParsedGraph { graph: g, side1, weighted: false })
}

/// Writes the edge-list format, including weights and bipartition when
/// present.
pub fn write_edgelist(g: &Graph, side1: Option<&VertexSet>) -> String {
    let weighted = !g.is_unit_weighted();
    let mut out = String::new();
    out.push_str(&format!(
        "{} {}{}\n",
        g.n(),
        g.edge_count(),
        if weighted { " weighted" } else { "" }
    ));
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u, v));
    }
    if weighted {
        for v in 0..g.n() {
            let w = g.weight(v);
            if !w.is_one() {
                out.push_str(&format!("w {} {}/{}\n", v, w.numer(), w.denom()));
            }
        }
    }
    if let Some(s) = side1 {
        let items: Vec<String> = s.iter().map(|v| v.to_string()).collect();
        out.push_str(&format!("bip {}\n", items.join(" ")));
    }
    out
}
