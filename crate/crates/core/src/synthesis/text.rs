//! Line-oriented text formats for gluing recipes and ear sequences.
//!
//! A recipe is three lines:
//!
//! ```text
//! gx 5 0-1 1-2 2-3 3-4 0-4
//! gy 7 0-1 1-2 2-3 3-4 4-5 0-5 0-6 2-6 4-6
//! p3 1 0 5 6 7 2 ; 6 0 1 2
//! ```
//!
//! `gx`/`gy` give a vertex count and edges. The last line is one of
//! `clique <kx..> ; <ky..>`, `two <q..> ; <p..>` or
//! `p3 <cx> <q..> ; <cy> <p..>`.
//!
//! An ear sequence is a `base <k>` line followed by one
//! `ear <a> <c> <b> <len> spokes <positions..>` line per step. Blank lines
//! and `#` comments are ignored in both.

use super::ears::{EarSequence, EarStep};
use super::glue::GluingRecipe;
use crate::error::{Error, Result};
use crate::graph::Graph;

fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn err(line: usize, msg: impl std::fmt::Display) -> Error {
    Error::InvalidInput(format!("line {line}: {msg}"))
}

fn num(line: usize, tok: &str) -> Result<usize> {
    tok.parse().map_err(|_| err(line, format!("expected a number, got '{tok}'")))
}

fn nums(line: usize, toks: &[&str]) -> Result<Vec<usize>> {
    toks.iter().map(|t| num(line, t)).collect()
}

fn graph_line(g: &Graph, tag: &str) -> String {
    let mut s = format!("{tag} {}", g.n());
    for (u, v) in g.edges() {
        s.push_str(&format!(" {u}-{v}"));
    }
    s
}

fn parse_graph(line: usize, toks: &[&str]) -> Result<Graph> {
    let (&n, rest) = toks.split_first().ok_or_else(|| err(line, "missing vertex count"))?;
    let n = num(line, n)?;
    let mut edges = Vec::new();
    for t in rest {
        let (u, v) = t.split_once('-').ok_or_else(|| err(line, format!("bad edge '{t}'")))?;
        edges.push((num(line, u)?, num(line, v)?));
    }
    Graph::from_edges(n, edges).map_err(|e| err(line, e))
}

fn join(vs: &[usize]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn write_recipe(r: &GluingRecipe) -> String {
    let (gx, gy, last) = match r {
        GluingRecipe::Clique { gx, gy, kx, ky } => (gx, gy, format!("clique {} ; {}", join(kx), join(ky))),
        GluingRecipe::TwoSep { gx, gy, q, p } => (gx, gy, format!("two {} ; {}", join(q), join(p))),
        GluingRecipe::P3 { gx, gy, cx, q, cy, p } => (gx, gy, format!("p3 {cx} {} ; {cy} {}", join(q), join(p))),
    };
    format!("{}\n{}\n{}\n", graph_line(gx, "gx"), graph_line(gy, "gy"), last.trim_end())
}

pub fn parse_recipe(text: &str) -> Result<GluingRecipe> {
    let mut gx = None;
    let mut gy = None;
    let mut glue = None;
    for (ln, l) in lines(text) {
        let toks: Vec<&str> = l.split_whitespace().collect();
        match toks[0] {
            "gx" => gx = Some(parse_graph(ln, &toks[1..])?),
            "gy" => gy = Some(parse_graph(ln, &toks[1..])?),
            kind @ ("clique" | "two" | "p3") => {
                let rest = &toks[1..];
                let semi = rest.iter().position(|&t| t == ";").ok_or_else(|| err(ln, "missing ';'"))?;
                let left = nums(ln, &rest[..semi])?;
                let right = nums(ln, &rest[semi + 1..])?;
                glue = Some((ln, kind, left, right));
            }
            other => return Err(err(ln, format!("unknown record '{other}'"))),
        }
    }
    let gx = gx.ok_or_else(|| Error::InvalidInput("missing gx line".into()))?;
    let gy = gy.ok_or_else(|| Error::InvalidInput("missing gy line".into()))?;
    let (ln, kind, left, right) = glue.ok_or_else(|| Error::InvalidInput("missing gluing line".into()))?;
    Ok(match kind {
        "clique" => GluingRecipe::Clique { gx, gy, kx: left, ky: right },
        "two" => GluingRecipe::TwoSep { gx, gy, q: left, p: right },
        _ => {
            let (&cx, q) = left.split_first().ok_or_else(|| err(ln, "missing cx"))?;
            let (&cy, p) = right.split_first().ok_or_else(|| err(ln, "missing cy"))?;
            GluingRecipe::P3 { gx, gy, cx, q: q.to_vec(), cy, p: p.to_vec() }
        }
    })
}

pub fn write_ear_sequence(s: &EarSequence) -> String {
    let mut out = format!("base {}\n", s.base_len);
    for e in &s.steps {
        out.push_str(&format!("ear {} {} {} {} spokes {}\n", e.a, e.c, e.b, e.len, join(&e.spokes)));
    }
    out
}

/// Parses an ear sequence; the `order` field is the identity.
pub fn parse_ear_sequence(text: &str) -> Result<EarSequence> {
    let mut base = None;
    let mut steps = Vec::new();
    for (ln, l) in lines(text) {
        let toks: Vec<&str> = l.split_whitespace().collect();
        match toks.as_slice() {
            ["base", k] if base.is_none() => base = Some(num(ln, k)?),
            ["ear", a, c, b, len, "spokes", spokes @ ..] if base.is_some() => steps.push(EarStep {
                a: num(ln, a)?,
                c: num(ln, c)?,
                b: num(ln, b)?,
                len: num(ln, len)?,
                spokes: nums(ln, spokes)?,
            }),
            _ => return Err(err(ln, format!("unexpected record '{l}'"))),
        }
    }
    let base_len = base.ok_or_else(|| Error::InvalidInput("missing base line".into()))?;
    let total = base_len + steps.iter().map(|s| s.len).sum::<usize>();
    Ok(EarSequence { base_len, steps, order: (0..total).collect() })
}
