//! Graph input and output: edge lists, DIMACS and graph6.

use std::fmt::Write as _;
use std::str::FromStr;

use ttwfree::Graph;

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InputFormat {
    EdgeList,
    Dimacs,
    Graph6,
}

impl FromStr for InputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "edge-list" | "edgelist" | "edges" => Ok(InputFormat::EdgeList),
            "dimacs" | "col" => Ok(InputFormat::Dimacs),
            "graph6" | "g6" => Ok(InputFormat::Graph6),
            _ => Err(format!("unknown format '{s}' (expected edge-list, dimacs or graph6)")),
        }
    }
}

impl InputFormat {
    /// Guesses from a file name: `.g6`/`.graph6`, `.dimacs`/`.col`,
    /// otherwise an edge list.
    pub fn from_path(path: &str) -> InputFormat {
        let ext = path.rsplit_once('.').map(|(_, e)| e.to_ascii_lowercase()).unwrap_or_default();
        match ext.as_str() {
            "g6" | "graph6" => InputFormat::Graph6,
            "dimacs" | "col" => InputFormat::Dimacs,
            _ => InputFormat::EdgeList,
        }
    }
}

pub fn parse_graph(text: &str, format: InputFormat) -> Result<Graph, CliError> {
    match format {
        InputFormat::EdgeList => parse_edge_list(text),
        InputFormat::Dimacs => parse_dimacs(text),
        InputFormat::Graph6 => parse_graph6(text),
    }
}

fn perr(line: usize, column: usize, message: impl Into<String>) -> CliError {
    CliError::Parse { line, column, message: message.into() }
}

/// Tokens of a line with their 1-based columns, comments stripped.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let body = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in body.char_indices().chain(std::iter::once((body.len(), ' '))) {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s + 1, &body[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    out
}

fn number(line: usize, (col, tok): (usize, &str)) -> Result<usize, CliError> {
    tok.parse().map_err(|_| perr(line, col, format!("expected a non-negative integer, found '{tok}'")))
}

/// One `u v` pair per line, 0-based. A `# vertices N` comment fixes the
/// vertex count (so isolated vertices survive); otherwise it is one more
/// than the largest id.
pub fn parse_edge_list(text: &str) -> Result<Graph, CliError> {
    let mut declared = None;
    let mut edges = Vec::new();
    let mut max_id = None;
    for (i, line) in text.lines().enumerate() {
        let ln = i + 1;
        if let Some(rest) = line.trim_start().strip_prefix('#') {
            let t = tokens(rest);
            if let [(_, "vertices"), n] = t.as_slice() {
                let col = line.len() - line.trim_start().len() + 1 + n.0;
                declared = Some(number(ln, (col, n.1))?);
            }
            continue;
        }
        let t = tokens(line);
        match t.as_slice() {
            [] => {}
            [u, v] => {
                let (u, v) = (number(ln, *u)?, number(ln, *v)?);
                if u == v {
                    return Err(perr(ln, t[0].0, format!("self-loop at vertex {u}")));
                }
                max_id = max_id.max(Some(u.max(v)));
                edges.push((u, v));
            }
            _ => return Err(perr(ln, t.get(2).map_or(1, |x| x.0), "expected exactly two vertex ids")),
        }
    }
    let n = match (declared, max_id) {
        (Some(n), Some(m)) if m >= n => return Err(perr(1, 1, format!("vertex {m} exceeds the declared {n} vertices"))),
        (Some(n), _) => n,
        (None, Some(m)) => m + 1,
        (None, None) => 0,
    };
    if n == 0 {
        return Err(perr(1, 1, "the graph has no vertices"));
    }
    Graph::from_edges(n, edges).map_err(|e| perr(1, 1, e.to_string()))
}

/// `p edge n m` then `e u v` lines with 1-based ids; `c` lines are comments.
pub fn parse_dimacs(text: &str) -> Result<Graph, CliError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let ln = i + 1;
        let t: Vec<(usize, &str)> = tokens(line);
        let Some(&(col, kind)) = t.first() else { continue };
        match kind {
            "c" => {}
            "p" => {
                if header.is_some() {
                    return Err(perr(ln, col, "duplicate problem line"));
                }
                if t.len() != 4 || !matches!(t[1].1, "edge" | "col") {
                    return Err(perr(ln, col, "expected 'p edge <n> <m>'"));
                }
                header = Some((number(ln, t[2])?, number(ln, t[3])?));
            }
            "e" => {
                let Some((n, _)) = header else { return Err(perr(ln, col, "edge before the problem line")) };
                if t.len() != 3 {
                    return Err(perr(ln, col, "expected 'e <u> <v>'"));
                }
                let mut ends = [0; 2];
                for (k, tok) in t[1..].iter().enumerate() {
                    let v = number(ln, *tok)?;
                    if v == 0 || v > n {
                        return Err(perr(ln, tok.0, format!("vertex {v} is outside 1..={n}")));
                    }
                    ends[k] = v - 1;
                }
                if ends[0] == ends[1] {
                    return Err(perr(ln, col, "self-loop"));
                }
                edges.push((ends[0], ends[1]));
            }
            other => return Err(perr(ln, col, format!("unknown line type '{other}'"))),
        }
    }
    let Some((n, _)) = header else { return Err(perr(1, 1, "missing problem line")) };
    if n == 0 {
        return Err(perr(1, 1, "the graph has no vertices"));
    }
    Graph::from_edges(n, edges).map_err(|e| perr(1, 1, e.to_string()))
}

/// The first non-empty line in graph6, with an optional `>>graph6<<` header.
pub fn parse_graph6(text: &str) -> Result<Graph, CliError> {
    let Some((i, raw)) = text.lines().enumerate().find(|(_, l)| !l.trim().is_empty()) else {
        return Err(perr(1, 1, "empty input"));
    };
    let ln = i + 1;
    let lead = raw.len() - raw.trim_start().len();
    let mut line = raw.trim();
    let mut offset = lead;
    if let Some(rest) = line.strip_prefix(">>graph6<<") {
        line = rest;
        offset += 10;
    }
    let bytes = line.as_bytes();
    for (k, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(perr(ln, offset + k + 1, format!("byte {b} is outside the graph6 range")));
        }
    }
    let val = |k: usize| (bytes[k] - 63) as usize;
    let short = || perr(ln, offset + bytes.len() + 1, "input ends inside the vertex count");
    let (n, mut pos) = if bytes.is_empty() {
        return Err(short());
    } else if bytes[0] != 126 {
        (val(0), 1)
    } else if bytes.len() > 1 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(short());
        }
        ((val(1) << 12) | (val(2) << 6) | val(3), 4)
    } else {
        if bytes.len() < 8 {
            return Err(short());
        }
        ((2..8).fold(0, |acc, k| (acc << 6) | val(k)), 8)
    };
    if n == 0 {
        return Err(perr(ln, offset + 1, "the graph has no vertices"));
    }
    let need = (n * (n - 1) / 2).div_ceil(6);
    if bytes.len() - pos != need {
        return Err(perr(
            ln,
            offset + bytes.len().min(pos + need) + 1,
            format!("expected {need} edge bytes for {n} vertices, found {}", bytes.len() - pos),
        ));
    }
    let mut edges = Vec::new();
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            if val(pos + bit / 6) >> (5 - bit % 6) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    pos += need;
    debug_assert_eq!(pos, bytes.len());
    Graph::from_edges(n, edges).map_err(|e| perr(ln, 1, e.to_string()))
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut s = format!("# vertices {}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

pub fn write_dimacs(g: &Graph) -> String {
    let mut s = format!("p edge {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "e {} {}", u + 1, v + 1);
    }
    s
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            bits += 1;
            if bits == 6 {
                out.push(acc + 63);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + 63);
    }
    let mut s = String::from_utf8(out).expect("graph6 is ASCII");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_diagnostics() {
        let g = parse_edge_list("# a square\n0 1\n1 2\n2 3\n3 0\n").unwrap();
        assert_eq!((g.n(), g.edge_count()), (4, 4));
        let g = parse_edge_list("# vertices 6\n0 1\n").unwrap();
        assert_eq!(g.n(), 6);
        match parse_edge_list("0 1\n1 x\n") {
            Err(CliError::Parse { line, column, .. }) => assert_eq!((line, column), (2, 3)),
            other => panic!("{other:?}"),
        }
        match parse_edge_list("0 1\n  2 3 4\n") {
            Err(CliError::Parse { line, column, .. }) => assert_eq!((line, column), (2, 7)),
            other => panic!("{other:?}"),
        }
        assert!(parse_edge_list("3 3\n").is_err());
        assert!(parse_edge_list("# vertices 2\n0 5\n").is_err());
        assert!(parse_edge_list("").is_err());
    }

    #[test]
    fn dimacs_round_trip() {
        let g = Graph::cycle(5);
        assert_eq!(parse_dimacs(&write_dimacs(&g)).unwrap(), g);
        assert_eq!(parse_dimacs("c hi\np edge 3 1\ne 1 3\n").unwrap().edge_count(), 1);
        match parse_dimacs("p edge 3 1\ne 1 4\n") {
            Err(CliError::Parse { line, column, .. }) => assert_eq!((line, column), (2, 5)),
            other => panic!("{other:?}"),
        }
        assert!(parse_dimacs("e 1 2\n").is_err());
    }

    #[test]
    fn graph6_known_strings() {
        // the Petersen graph and C5 as printed by nauty's geng/showg
        let c5 = parse_graph6("Dhc\n").unwrap();
        assert!(c5.is_isomorphic(&Graph::cycle(5)));
        assert_eq!(write_graph6(&parse_graph6("Dhc").unwrap()), "Dhc\n");
        let p = parse_graph6(">>graph6<<IheA@GUAo\n").unwrap();
        assert_eq!((p.n(), p.edge_count()), (10, 15));
        assert!(p.vertices().all(|v| p.degree(v) == 3));
        for n in [1, 2, 7, 63, 64, 100] {
            let g = Graph::cycle(n.max(3));
            assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g);
        }
        assert!(parse_graph6("D h").is_err());
        assert!(parse_graph6("Dh").is_err());
    }
}
