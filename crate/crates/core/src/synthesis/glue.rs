//! The three gluing operations that build every class member from basic
//! graphs.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// One gluing step between two disjoint graphs.
///
/// * `Clique`: identify `kx[i]` with `ky[i]` (cliques of size at most 2;
///   empty means disjoint union).
/// * `TwoSep`: `q` is an `a_X .. b_X` path in `gx` and `p` an
///   `a_Y .. b_Y` path in `gy`, both with degree-2 interiors. Ends are
///   identified and interiors deleted.
/// * `P3`: as `TwoSep`, also identifying `cx` with `cy`. The interior of
///   `q` may use degree-3 neighbours of `cx`; `p` avoids the neighbours of
///   `cy` and every other `a_Y b_Y`-path of `gy` meets them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GluingRecipe {
    Clique { gx: Graph, gy: Graph, kx: Vec<usize>, ky: Vec<usize> },
    TwoSep { gx: Graph, gy: Graph, q: Vec<usize>, p: Vec<usize> },
    P3 { gx: Graph, gy: Graph, cx: usize, q: Vec<usize>, cy: usize, p: Vec<usize> },
}

/// The glued graph together with the new ids of the vertices of `gx` and
/// `gy` (`None` for deleted marker interiors).
#[derive(Clone, Debug)]
pub struct Glued {
    pub graph: Graph,
    pub map_x: Vec<Option<usize>>,
    pub map_y: Vec<Option<usize>>,
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidRecipe(msg.into())
}

fn in_range(g: &Graph, vs: &[usize], what: &str) -> Result<()> {
    match vs.iter().find(|&&v| v >= g.n()) {
        Some(&v) => Err(bad(format!("{what}: vertex {v} is out of range"))),
        None => Ok(()),
    }
}

/// Checks that `path` is a path of length at least 2 with non-adjacent ends.
fn check_marker(g: &Graph, path: &[usize], what: &str) -> Result<()> {
    in_range(g, path, what)?;
    if path.len() < 3 {
        return Err(bad(format!("{what} must have length at least 2")));
    }
    if !g.is_induced_path(path) {
        return Err(bad(format!("{what} is not an induced path")));
    }
    Ok(())
}

fn check_recipe(r: &GluingRecipe) -> Result<()> {
    match r {
        GluingRecipe::Clique { gx, gy, kx, ky } => {
            in_range(gx, kx, "kx")?;
            in_range(gy, ky, "ky")?;
            if kx.len() != ky.len() || kx.len() > 2 {
                return Err(bad("glued cliques must have equal size at most 2"));
            }
            for (g, k) in [(gx, kx), (gy, ky)] {
                if k.len() == 2 && !g.has_edge(k[0], k[1]) {
                    return Err(bad("glued vertices do not form a clique"));
                }
            }
            Ok(())
        }
        GluingRecipe::TwoSep { gx, gy, q, p } => {
            check_marker(gx, q, "q")?;
            check_marker(gy, p, "p")?;
            for (g, path, what) in [(gx, q, "q"), (gy, p, "p")] {
                if path[1..path.len() - 1].iter().any(|&v| g.degree(v) != 2) {
                    return Err(bad(format!("internal vertices of {what} must have degree 2")));
                }
            }
            Ok(())
        }
        GluingRecipe::P3 { gx, gy, cx, q, cy, p } => {
            check_marker(gx, q, "q")?;
            check_marker(gy, p, "p")?;
            in_range(gx, &[*cx], "cx")?;
            in_range(gy, &[*cy], "cy")?;
            let (ax, bx) = (q[0], q[q.len() - 1]);
            let (ay, by) = (p[0], p[p.len() - 1]);
            if !gx.is_induced_path(&[ax, *cx, bx]) || !gy.is_induced_path(&[ay, *cy, by]) {
                return Err(bad("a c b must be an induced path on both sides"));
            }
            let q_in = &q[1..q.len() - 1];
            if q_in.contains(cx) {
                return Err(bad("q must avoid cx"));
            }
            if q_in.iter().any(|&v| !(gx.degree(v) == 2 || (gx.degree(v) == 3 && gx.has_edge(v, *cx)))) {
                return Err(bad("internal vertices of q must have degree 2, or degree 3 and be adjacent to cx"));
            }
            if !q_in.iter().any(|&v| gx.has_edge(v, *cx)) {
                return Err(bad("the interior of q must contain a neighbour of cx"));
            }
            let all_x: Vec<usize> = gx.vertices().collect();
            if gx.shortest_path_within(ax, bx, &all_x, Some(*cx)).is_none() {
                return Err(bad("gx needs an a-b path avoiding cx and its neighbours"));
            }
            let p_in = &p[1..p.len() - 1];
            if p_in.iter().any(|&v| gy.degree(v) != 2) {
                return Err(bad("internal vertices of p must have degree 2"));
            }
            if p_in.iter().any(|&v| v == *cy || gy.has_edge(v, *cy)) {
                return Err(bad("p must avoid cy and its neighbours"));
            }
            let mut allowed = vec![true; gy.n()];
            for &v in p_in {
                allowed[v] = false;
            }
            allowed[*cy] = false;
            for &w in gy.neighbors(*cy) {
                allowed[w] = false;
            }
            allowed[ay] = false;
            allowed[by] = false;
            if gy.shortest_path_mask(ay, by, &allowed).is_some() {
                return Err(bad("every a-b path of gy other than p and a c b must meet a neighbour of cy"));
            }
            Ok(())
        }
    }
}

/// Identifies `pairs` (vertex of gx, vertex of gy) and deletes `drop_x`,
/// `drop_y`.
fn combine(gx: &Graph, gy: &Graph, pairs: &[(usize, usize)], drop_x: &[usize], drop_y: &[usize]) -> Glued {
    let mut map_x = vec![None; gx.n()];
    let mut next = 0;
    for (v, slot) in map_x.iter_mut().enumerate() {
        if !drop_x.contains(&v) {
            *slot = Some(next);
            next += 1;
        }
    }
    let mut map_y = vec![None; gy.n()];
    for &(x, y) in pairs {
        map_y[y] = map_x[x];
    }
    for (v, slot) in map_y.iter_mut().enumerate() {
        if slot.is_none() && !drop_y.contains(&v) {
            *slot = Some(next);
            next += 1;
        }
    }
    let mut edges = Vec::new();
    for (g, map) in [(gx, &map_x), (gy, &map_y)] {
        for (u, v) in g.edges() {
            if let (Some(a), Some(b)) = (map[u], map[v]) {
                edges.push((a, b));
            }
        }
    }
    let graph = Graph::from_edges(next, edges).expect("ids in range");
    Glued { graph, map_x, map_y }
}

pub fn glue_mapped(r: &GluingRecipe) -> Result<Glued> {
    check_recipe(r)?;
    Ok(match r {
        GluingRecipe::Clique { gx, gy, kx, ky } => {
            let pairs: Vec<(usize, usize)> = kx.iter().copied().zip(ky.iter().copied()).collect();
            combine(gx, gy, &pairs, &[], &[])
        }
        GluingRecipe::TwoSep { gx, gy, q, p } => {
            let pairs = [(q[0], p[0]), (q[q.len() - 1], p[p.len() - 1])];
            combine(gx, gy, &pairs, &q[1..q.len() - 1], &p[1..p.len() - 1])
        }
        GluingRecipe::P3 { gx, gy, cx, q, cy, p } => {
            let pairs = [(q[0], p[0]), (*cx, *cy), (q[q.len() - 1], p[p.len() - 1])];
            combine(gx, gy, &pairs, &q[1..q.len() - 1], &p[1..p.len() - 1])
        }
    })
}

pub fn glue(r: &GluingRecipe) -> Result<Graph> {
    glue_mapped(r).map(|g| g.graph)
}
