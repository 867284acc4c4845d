//! Clique separators, proper 2-separators and proper P3-separators, with the
//! blocks of decomposition they induce.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, InducedPath};

/// A split of a graph along one of the three separator kinds.
///
/// For `Two` and `P3`, `path_x` runs from `a` to `b` through `x` and
/// `path_y` through `y`. The block on the `x` side uses `path_y` as its
/// marker and vice versa. For `P3`, `x` is the loose side and `path_x`
/// avoids the neighbours of `c` internally.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SeparatorSplit {
    Clique {
        clique: Vec<usize>,
        components: Vec<Vec<usize>>,
    },
    Two {
        a: usize,
        b: usize,
        x: Vec<usize>,
        y: Vec<usize>,
        path_x: InducedPath,
        path_y: InducedPath,
    },
    P3 {
        a: usize,
        c: usize,
        b: usize,
        x: Vec<usize>,
        y: Vec<usize>,
        path_x: InducedPath,
        path_y: InducedPath,
    },
}

impl SeparatorSplit {
    pub fn kind_name(&self) -> &'static str {
        match self {
            SeparatorSplit::Clique { .. } => "clique",
            SeparatorSplit::Two { .. } => "2-separator",
            SeparatorSplit::P3 { .. } => "P3-separator",
        }
    }

    /// The separating set itself.
    pub fn separator(&self) -> Vec<usize> {
        match self {
            SeparatorSplit::Clique { clique, .. } => clique.clone(),
            SeparatorSplit::Two { a, b, .. } => vec![*a, *b],
            SeparatorSplit::P3 { a, c, b, .. } => vec![*a, *c, *b],
        }
    }

    /// Renames every vertex through `map`.
    pub fn relabeled(&self, map: &[usize]) -> SeparatorSplit {
        let m = |s: &[usize]| s.iter().map(|&v| map[v]).collect::<Vec<_>>();
        let mp = |p: &InducedPath| InducedPath(m(&p.0));
        match self {
            SeparatorSplit::Clique { clique, components } => SeparatorSplit::Clique {
                clique: m(clique),
                components: components.iter().map(|c| m(c)).collect(),
            },
            SeparatorSplit::Two { a, b, x, y, path_x, path_y } => SeparatorSplit::Two {
                a: map[*a],
                b: map[*b],
                x: m(x),
                y: m(y),
                path_x: mp(path_x),
                path_y: mp(path_y),
            },
            SeparatorSplit::P3 { a, c, b, x, y, path_x, path_y } => SeparatorSplit::P3 {
                a: map[*a],
                c: map[*c],
                b: map[*b],
                x: m(x),
                y: m(y),
                path_x: mp(path_x),
                path_y: mp(path_y),
            },
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Looseness {
    Loose,
    Tight,
}

/// A block of decomposition: an induced subgraph of the split graph, with
/// `map[local] = vertex of the split graph`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub graph: Graph,
    pub map: Vec<usize>,
}

fn mask(n: usize, vs: &[usize]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &v in vs {
        m[v] = true;
    }
    m
}

/// A clique separator of minimum size, lexicographically first among those.
/// Sizes 0 (disconnected), 1, 2 and 3 are probed.
pub fn find_clique_separator(g: &Graph) -> Option<SeparatorSplit> {
    let n = g.n();
    if n <= 1 {
        return None;
    }
    let split = |clique: Vec<usize>| {
        let components = g.components_avoiding(&mask(n, &clique));
        SeparatorSplit::Clique { clique, components }
    };
    if !g.is_connected() {
        return Some(split(vec![]));
    }
    if let Some(&v) = g.articulation_points_avoiding(&vec![false; n]).first() {
        return Some(split(vec![v]));
    }
    let mut removed = vec![false; n];
    for u in 0..n {
        removed[u] = true;
        let cut = g.articulation_points_avoiding(&removed);
        removed[u] = false;
        if let Some(&w) = cut.iter().find(|&&w| w > u && g.has_edge(u, w)) {
            return Some(split(vec![u, w]));
        }
    }
    for (u, v) in g.edges() {
        removed[u] = true;
        removed[v] = true;
        let cut = g.articulation_points_avoiding(&removed);
        removed[u] = false;
        removed[v] = false;
        if let Some(&w) = cut.iter().find(|&&w| w > v && g.has_edge(u, w) && g.has_edge(v, w)) {
            return Some(split(vec![u, v, w]));
        }
    }
    None
}

/// Whether `g[side ∪ {a, b}]` is exactly an induced `ab`-path.
fn side_is_bare_path(g: &Graph, a: usize, b: usize, side: &[usize]) -> bool {
    let mut vs = side.to_vec();
    vs.push(a);
    vs.push(b);
    vs.sort_unstable();
    let (h, map) = g.induced_subgraph(&vs).expect("ids in range");
    let la = map.iter().position(|&v| v == a).unwrap();
    let lb = map.iter().position(|&v| v == b).unwrap();
    h.is_path_between(la, lb)
}

/// Checks the two-component and properness conditions shared by both
/// separator kinds and returns the two sides with their shortest paths.
fn proper_sides(g: &Graph, sep: &[usize], a: usize, b: usize) -> Option<[(Vec<usize>, InducedPath); 2]> {
    let comps = g.components_avoiding(&mask(g.n(), sep));
    if comps.len() != 2 {
        return None;
    }
    let mut out = Vec::with_capacity(2);
    for comp in comps {
        let path = g.shortest_path_within(a, b, &comp, None)?;
        if side_is_bare_path(g, a, b, &comp) {
            return None;
        }
        out.push((comp, path));
    }
    let second = out.pop().unwrap();
    let first = out.pop().unwrap();
    Some([first, second])
}

/// The first proper 2-separator `{a, b}` (lexicographic order on `(a, b)`).
/// The graph is assumed atomic.
pub fn find_proper_2_separator(g: &Graph) -> Option<SeparatorSplit> {
    let n = g.n();
    let mut removed = vec![false; n];
    for a in 0..n {
        removed[a] = true;
        let cut = g.articulation_points_avoiding(&removed);
        removed[a] = false;
        for b in cut {
            if b <= a || g.has_edge(a, b) {
                continue;
            }
            if let Some([(x, path_x), (y, path_y)]) = proper_sides(g, &[a, b], a, b) {
                return Some(SeparatorSplit::Two { a, b, x, y, path_x, path_y });
            }
        }
    }
    None
}

/// Whether `comp` is loose or tight with respect to the path `acb`.
pub fn looseness(g: &Graph, a: usize, c: usize, b: usize, comp: &[usize]) -> Result<Looseness> {
    if g.shortest_path_within(a, b, comp, Some(c)).is_some() {
        Ok(Looseness::Loose)
    } else if g.shortest_path_within(a, b, comp, None).is_some() {
        Ok(Looseness::Tight)
    } else {
        Err(Error::Precondition(format!("no path from {a} to {b} through the given component")))
    }
}

/// The first proper P3-separator `acb` in lexicographic order of
/// `(a, c, b)` with `a < b`. The graph is assumed superatomic.
pub fn find_proper_p3_separator(g: &Graph) -> Option<SeparatorSplit> {
    let n = g.n();
    let mut candidates = Vec::new();
    let mut removed = vec![false; n];
    for c in 0..n {
        if g.degree(c) < 4 {
            // a proper P3-separator needs c adjacent to a, b and both sides
            continue;
        }
        removed[c] = true;
        for &a in g.neighbors(c) {
            removed[a] = true;
            for b in g.articulation_points_avoiding(&removed) {
                if b > a && g.has_edge(c, b) && !g.has_edge(a, b) {
                    candidates.push((a, c, b));
                }
            }
            removed[a] = false;
        }
        removed[c] = false;
    }
    candidates.sort_unstable();
    for (a, c, b) in candidates {
        let Some([s1, s2]) = proper_sides(g, &[a, c, b], a, b) else { continue };
        if !s1.0.iter().any(|&v| g.has_edge(c, v)) || !s2.0.iter().any(|&v| g.has_edge(c, v)) {
            continue;
        }
        let l1 = looseness(g, a, c, b, &s1.0).ok()?;
        let l2 = looseness(g, a, c, b, &s2.0).ok()?;
        let ((x, _), (y, path_y)) = match (l1, l2) {
            (Looseness::Loose, Looseness::Tight) => (s1, s2),
            (Looseness::Tight, Looseness::Loose) => (s2, s1),
            _ => continue,
        };
        let path_x = g.shortest_path_within(a, b, &x, Some(c)).expect("loose side");
        return Some(SeparatorSplit::P3 { a, c, b, x, y, path_x, path_y });
    }
    None
}

fn check_marker(g: &Graph, path: &InducedPath, a: usize, b: usize, side: &[bool], what: &str) -> Result<()> {
    let ok = path.0.len() >= 2
        && path.first() == a
        && path.last() == b
        && g.is_induced_path(&path.0)
        && path.interior().iter().all(|&v| side[v]);
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidSplit(format!("{what} is not an induced path through its side")))
    }
}

fn check_sides(g: &Graph, sep: &[usize], parts: &[&[usize]]) -> Result<()> {
    let n = g.n();
    let mut owner = vec![usize::MAX; n];
    for &v in sep {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        owner[v] = parts.len();
    }
    for (i, part) in parts.iter().enumerate() {
        for &v in part.iter() {
            if v >= n || owner[v] != usize::MAX {
                return Err(Error::InvalidSplit(format!("vertex {v} is repeated or out of range")));
            }
            owner[v] = i;
        }
    }
    if owner.contains(&usize::MAX) {
        return Err(Error::InvalidSplit("sides and separator do not cover the graph".into()));
    }
    for (u, v) in g.edges() {
        if owner[u] < parts.len() && owner[v] < parts.len() && owner[u] != owner[v] {
            return Err(Error::InvalidSplit(format!("edge {u}-{v} crosses the separator")));
        }
    }
    Ok(())
}

/// The blocks of decomposition of `g` with respect to `s`. For clique
/// separators there is one block per component; otherwise the `x` block
/// comes first.
pub fn make_blocks(g: &Graph, s: &SeparatorSplit) -> Result<Vec<Block>> {
    let n = g.n();
    let block = |mut vs: Vec<usize>| -> Result<Block> {
        vs.sort_unstable();
        vs.dedup();
        let (graph, map) = g.induced_subgraph(&vs)?;
        Ok(Block { graph, map })
    };
    match s {
        SeparatorSplit::Clique { clique, components } => {
            let parts: Vec<&[usize]> = components.iter().map(|c| c.as_slice()).collect();
            check_sides(g, clique, &parts)?;
            for (i, &u) in clique.iter().enumerate() {
                if clique[i + 1..].iter().any(|&v| !g.has_edge(u, v)) {
                    return Err(Error::InvalidSplit("separator is not a clique".into()));
                }
            }
            if components.len() < 2 {
                return Err(Error::InvalidSplit("a separator needs at least two components".into()));
            }
            components.iter().map(|c| block(c.iter().chain(clique).copied().collect())).collect()
        }
        SeparatorSplit::Two { a, b, x, y, path_x, path_y } => {
            check_sides(g, &[*a, *b], &[x, y])?;
            if g.has_edge(*a, *b) {
                return Err(Error::InvalidSplit("2-separator ends are adjacent".into()));
            }
            check_marker(g, path_x, *a, *b, &mask(n, x), "path_x")?;
            check_marker(g, path_y, *a, *b, &mask(n, y), "path_y")?;
            let gx = x.iter().chain(&path_y.0).copied().collect();
            let gy = y.iter().chain(&path_x.0).copied().collect();
            Ok(vec![block(gx)?, block(gy)?])
        }
        SeparatorSplit::P3 { a, c, b, x, y, path_x, path_y } => {
            check_sides(g, &[*a, *c, *b], &[x, y])?;
            if !g.is_induced_path(&[*a, *c, *b]) {
                return Err(Error::InvalidSplit("acb is not an induced path".into()));
            }
            check_marker(g, path_x, *a, *b, &mask(n, x), "path_x")?;
            check_marker(g, path_y, *a, *b, &mask(n, y), "path_y")?;
            if path_x.interior().iter().any(|&v| g.has_edge(*c, v)) {
                return Err(Error::InvalidSplit("loose marker meets the neighbourhood of c".into()));
            }
            let gx = x.iter().chain(&path_y.0).chain([c]).copied().collect();
            let gy = y.iter().chain(&path_x.0).chain([c]).copied().collect();
            Ok(vec![block(gx)?, block(gy)?])
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basic::recognize_basic;
    use crate::synthesis::families;
    use proptest::prelude::*;

    #[test]
    fn clique_separator_examples() {
        let two = Graph::cycle(5).disjoint_union(&Graph::cycle(4));
        assert!(matches!(find_clique_separator(&two), Some(SeparatorSplit::Clique { clique, .. }) if clique.is_empty()));

        let g = families::cycles_sharing_vertex(5, 5);
        match find_clique_separator(&g) {
            Some(SeparatorSplit::Clique { clique, components }) => {
                assert_eq!(clique, vec![0]);
                assert_eq!(components.len(), 2);
            }
            other => panic!("{other:?}"),
        }

        let g = families::cycles_sharing_edge(5, 5);
        let s = find_clique_separator(&g).unwrap();
        assert_eq!(s.separator(), vec![0, 1]);
        let blocks = make_blocks(&g, &s).unwrap();
        assert_eq!(blocks.len(), 2);
        for b in blocks {
            assert!(b.graph.is_isomorphic(&Graph::cycle(5)));
        }
        assert!(find_clique_separator(&Graph::cycle(5)).is_none());
    }

    #[test]
    fn daisies_and_thetas_have_no_proper_separators() {
        let k23 = Graph::complete_bipartite(2, 3);
        assert!(find_clique_separator(&k23).is_none());
        assert!(find_proper_2_separator(&k23).is_none());
        for k in 4..=7 {
            let (g, _) = families::full_daisy(k);
            assert!(find_clique_separator(&g).is_none());
            assert!(find_proper_2_separator(&g).is_none());
            assert!(find_proper_p3_separator(&g).is_none());
        }
        let w = families::wheel(6, &[0, 2, 4]);
        assert!(find_proper_2_separator(&w).is_none());
        assert!(find_proper_p3_separator(&w).is_none());
    }

    #[test]
    fn wac_has_no_proper_p3_separator() {
        // rim 0..5, centre 6 on the evens, centre 7 on the odds
        let mut edges: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        edges.extend([(6, 0), (6, 2), (6, 4), (7, 1), (7, 3), (7, 5), (6, 7)]);
        let g = Graph::from_edges(8, edges).unwrap();
        assert!(find_proper_p3_separator(&g).is_none());
    }

    #[test]
    fn looseness_examples() {
        let w = families::wheel(6, &[0, 2, 4]);
        let c = 6;
        assert_eq!(looseness(&w, 0, c, 2, &[1]).unwrap(), Looseness::Loose);
        assert_eq!(looseness(&w, 0, c, 4, &[1, 2, 3]).unwrap(), Looseness::Tight);
        assert!(looseness(&w, 0, c, 2, &[4]).is_err());
    }

    #[test]
    fn two_separator_of_glued_wheels() {
        let g = families::two_wheels_on_2_separator();
        assert!(find_clique_separator(&g).is_none());
        let s = find_proper_2_separator(&g).expect("proper 2-separator");
        let blocks = make_blocks(&g, &s).unwrap();
        for b in &blocks {
            assert!(b.graph.n() < g.n());
            assert!(recognize_basic(&b.graph).is_some());
        }
    }

    #[test]
    fn invalid_split_rejected() {
        let g = Graph::cycle(6);
        let bogus = SeparatorSplit::Clique { clique: vec![0, 3], components: vec![vec![1, 2], vec![4, 5]] };
        assert!(make_blocks(&g, &bogus).is_err());
    }

    proptest! {
        #[test]
        fn clique_separator_really_separates(seed in 0u64..400) {
            let g = families::random_graph(seed, 9, 0.3);
            if let Some(s) = find_clique_separator(&g) {
                let sep = s.separator();
                let comps = g.components_avoiding(&mask(g.n(), &sep));
                prop_assert!(comps.len() >= 2);
                let blocks = make_blocks(&g, &s).unwrap();
                prop_assert!(blocks.iter().all(|b| b.graph.n() < g.n()));
                // minimality: no smaller clique separates
                if sep.len() >= 2 {
                    prop_assert!(g.is_connected());
                    prop_assert!(g.articulation_points_avoiding(&vec![false; g.n()]).is_empty());
                }
            } else if g.n() >= 2 {
                prop_assert!(g.is_connected());
            }
        }
    }
}
