//! Good ear additions and ear sequences: every atomic member other than
//! the cube grows from a hole by adding ears to good P3s.

use serde::{Deserialize, Serialize};

use super::goodp3::{is_good_p3, GoodP3Strategy, ENUMERATION_LIMIT};
use crate::decompose::find_ears;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::separators::find_clique_separator;

/// An ear of `len` vertices attached to `a` (first vertex) and `b` (last
/// vertex); `spokes` are the positions along the ear adjacent to `c`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EarStep {
    pub a: usize,
    pub c: usize,
    pub b: usize,
    pub len: usize,
    pub spokes: Vec<usize>,
}

/// A base hole on `0..base_len` (in cyclic order) and the ears that
/// rebuild the graph. Ear `i` adds the vertices following all earlier ones.
/// `order[v]` is the input vertex that replay vertex `v` stands for.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EarSequence {
    pub base_len: usize,
    pub steps: Vec<EarStep>,
    pub order: Vec<usize>,
}

fn check_step(g: &Graph, s: &EarStep) -> Result<()> {
    let n = g.n();
    for v in [s.a, s.c, s.b] {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
    }
    if !g.is_induced_path(&[s.a, s.c, s.b]) {
        return Err(Error::InvalidEar(format!("{} {} {} is not an induced path", s.a, s.c, s.b)));
    }
    if s.spokes.is_empty() {
        return Err(Error::InvalidEar("c needs a neighbour inside the ear".into()));
    }
    // a and b are adjacent to c, so neither end of the ear may be
    let mut prev = 0;
    for (i, &p) in s.spokes.iter().enumerate() {
        if p == 0 || p + 1 >= s.len {
            return Err(Error::InvalidEar(format!("spoke position {p} is not internal")));
        }
        if i > 0 && p <= prev + 1 {
            return Err(Error::InvalidEar("spokes must be increasing and non-consecutive".into()));
        }
        prev = p;
    }
    Ok(())
}

/// Appends the ear with vertices `n .. n + len` without testing the anchor.
pub fn add_ear(g: &Graph, s: &EarStep) -> Result<Graph> {
    check_step(g, s)?;
    let n = g.n();
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    edges.push((s.a, n));
    edges.push((s.b, n + s.len - 1));
    edges.extend((n..n + s.len - 1).map(|v| (v, v + 1)));
    edges.extend(s.spokes.iter().map(|&p| (s.c, n + p)));
    Graph::from_edges(n + s.len, edges)
}

/// A good ear addition: the anchor must be a good P3 (checked by
/// exhaustive search, so limited to small graphs).
pub fn add_good_ear(g: &Graph, s: &EarStep) -> Result<Graph> {
    check_step(g, s)?;
    if !is_good_p3(g, s.a, s.c, s.b, GoodP3Strategy::Enumeration)? {
        return Err(Error::InvalidEar(format!("{} {} {} is not a good P3", s.a, s.c, s.b)));
    }
    add_ear(g, s)
}

/// Rebuilds the graph described by an ear sequence.
pub fn replay(seq: &EarSequence) -> Result<Graph> {
    let mut g = Graph::cycle(seq.base_len);
    for s in &seq.steps {
        g = add_good_ear(&g, s)?;
    }
    Ok(g)
}

/// Peels ears until a hole remains. Each removed ear must leave an atomic
/// graph in which its anchor is good.
pub fn ear_sequence(g: &Graph) -> Result<EarSequence> {
    let n = g.n();
    if n < 3 {
        return Err(Error::Precondition("needs at least three vertices".into()));
    }
    if n > ENUMERATION_LIMIT {
        return Err(Error::SizeLimit { what: "ear sequence", n, limit: ENUMERATION_LIMIT });
    }
    if find_clique_separator(g).is_some() {
        return Err(Error::Precondition("the graph is not atomic".into()));
    }
    // current graph, with ids of g
    let mut cur = g.clone();
    let mut ids: Vec<usize> = (0..n).collect();
    // removed ears, in g ids: (path, a, c, b)
    let mut peeled: Vec<(Vec<usize>, usize, usize, usize)> = Vec::new();
    while !cur.is_hole_graph() {
        let mut chosen = None;
        for ear in find_ears(&cur) {
            let (rest, map) = cur.without(&ear.path);
            if rest.n() < 4 || find_clique_separator(&rest).is_some() {
                continue;
            }
            let local = |v: usize| map.iter().position(|&w| w == v).expect("anchor survives");
            if is_good_p3(&rest, local(ear.a), local(ear.c), local(ear.b), GoodP3Strategy::Enumeration)? {
                chosen = Some((ear, rest, map));
                break;
            }
        }
        let Some((ear, rest, map)) = chosen else {
            return Err(Error::Precondition("no removable good ear; the graph is not an eligible member".into()));
        };
        peeled.push((ear.path.iter().map(|&v| ids[v]).collect(), ids[ear.a], ids[ear.c], ids[ear.b]));
        ids = map.iter().map(|&v| ids[v]).collect();
        cur = rest;
    }
    let hole = cur.hole_order().expect("loop ends on a hole");
    let mut order: Vec<usize> = hole.iter().map(|&v| ids[v]).collect();
    let mut replay_id = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        replay_id[v] = i;
    }
    let mut steps = Vec::new();
    for (path, a, c, b) in peeled.into_iter().rev() {
        let spokes = path.iter().enumerate().filter(|&(_, &v)| g.has_edge(c, v)).map(|(i, _)| i).collect();
        // orient the ear so that its first vertex hangs off a
        let path: Vec<usize> = if g.has_edge(path[0], a) { path } else { path.into_iter().rev().collect() };
        steps.push(EarStep { a: replay_id[a], c: replay_id[c], b: replay_id[b], len: path.len(), spokes });
        for v in path {
            replay_id[v] = order.len();
            order.push(v);
        }
    }
    Ok(EarSequence { base_len: hole.len(), steps, order })
}
