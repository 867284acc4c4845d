//! The decomposition tree, node types, ears and the potential function used
//! to bound the tree size.

use serde::{Deserialize, Serialize};

use crate::basic::{cube_labels, is_wheel};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::separators::{
    find_clique_separator, find_proper_2_separator, find_proper_p3_separator, make_blocks, SeparatorSplit,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeNode {
    pub graph: Graph,
    /// `to_root[local]` is the vertex of the root graph.
    pub to_root: Vec<usize>,
    /// Separator in local ids; `None` for leaves.
    pub separator: Option<SeparatorSplit>,
    pub parent: Option<usize>,
    pub children: Vec<usize>,
    pub node_type: u8,
}

impl TreeNode {
    pub fn is_leaf(&self) -> bool {
        self.separator.is_none()
    }
}

/// Node ids are assigned in preorder; the root is node 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionTree {
    pub nodes: Vec<TreeNode>,
}

impl DecompositionTree {
    pub fn root(&self) -> &TreeNode {
        &self.nodes[0]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn leaves(&self) -> impl Iterator<Item = (usize, &TreeNode)> {
        self.nodes.iter().enumerate().filter(|(_, n)| n.is_leaf())
    }
}

/// The separator prescribed by the decomposition rules: a minimum clique
/// separator, else a proper 2-separator, else a proper P3-separator.
pub fn rule_separator(g: &Graph) -> Option<SeparatorSplit> {
    find_clique_separator(g)
        .or_else(|| find_proper_2_separator(g))
        .or_else(|| find_proper_p3_separator(g))
}

fn type_of(g: &Graph, sep: Option<&SeparatorSplit>) -> u8 {
    match sep {
        Some(SeparatorSplit::Clique { clique, .. }) => match clique.len() {
            0 => 1,
            1 => 2,
            _ => 3,
        },
        Some(SeparatorSplit::Two { .. }) => 4,
        Some(SeparatorSplit::P3 { .. }) => 5,
        None => {
            let n = g.n();
            if n == 1 {
                1
            } else if n == 2 && g.edge_count() == 1 {
                2
            } else if g.is_hole_graph() || cube_labels(g).is_some() {
                3
            } else if is_wheel(g) {
                4
            } else {
                5
            }
        }
    }
}

/// The type `t(g)` in `1..=5`.
pub fn node_type(g: &Graph) -> u8 {
    type_of(g, rule_separator(g).as_ref())
}

pub fn decompose(g: &Graph) -> Result<DecompositionTree> {
    decompose_with_budget(g, None)
}

/// Builds the decomposition tree depth-first. Fails with
/// [`Error::BudgetExceeded`] as soon as more than `budget` nodes (default
/// `2n - 1`) would be constructed.
pub fn decompose_with_budget(g: &Graph, budget: Option<usize>) -> Result<DecompositionTree> {
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let limit = budget.unwrap_or(2 * n - 1);
    let mut nodes: Vec<TreeNode> = Vec::new();
    let mut stack: Vec<(Graph, Vec<usize>, Option<usize>)> = vec![(g.clone(), (0..n).collect(), None)];
    while let Some((graph, to_root, parent)) = stack.pop() {
        if nodes.len() >= limit {
            return Err(Error::BudgetExceeded { limit });
        }
        let id = nodes.len();
        if let Some(p) = parent {
            nodes[p].children.push(id);
        }
        let separator = rule_separator(&graph);
        let node_type = type_of(&graph, separator.as_ref());
        if let Some(s) = &separator {
            let blocks = make_blocks(&graph, s).expect("detected splits are valid");
            for block in blocks.into_iter().rev() {
                let map = block.map.iter().map(|&v| to_root[v]).collect();
                stack.push((block.graph, map, Some(id)));
            }
        }
        nodes.push(TreeNode { graph, to_root, separator, parent, children: vec![], node_type });
    }
    Ok(DecompositionTree { nodes })
}

/// A maximal ear `path = x .. y` with `a ~ x`, `b ~ y` and common
/// neighbour `c` of `a` and `b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Ear {
    pub path: Vec<usize>,
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

/// All maximal ears, sorted by path. Paths are oriented so that the first
/// vertex is smaller than the last.
pub fn find_ears(g: &Graph) -> Vec<Ear> {
    let n = g.n();
    let mut found: Vec<Ear> = Vec::new();
    let mut in_s = vec![false; n];
    for c in 0..n {
        if g.degree(c) < 2 {
            continue;
        }
        // every ear with centre c lives in S_c, which induces paths and cycles
        for (v, slot) in in_s.iter_mut().enumerate() {
            *slot = v != c
                && match g.degree(v) {
                    2 => !g.has_edge(c, v),
                    3 => g.has_edge(c, v),
                    _ => false,
                };
        }
        let off = |v: usize, w: usize| -> Vec<usize> {
            g.neighbors(v).iter().copied().filter(|&u| u != c && u != w).collect()
        };
        let mut seen = vec![false; n];
        for s in 0..n {
            if !in_s[s] || seen[s] {
                continue;
            }
            let inner = |v: usize| g.neighbors(v).iter().copied().filter(|&u| in_s[u]).collect::<Vec<_>>();
            let mut members = vec![s];
            seen[s] = true;
            let mut i = 0;
            while i < members.len() {
                for u in inner(members[i]) {
                    if !seen[u] {
                        seen[u] = true;
                        members.push(u);
                    }
                }
                i += 1;
            }
            // G[S_c] has maximum degree 2: walk the path or cycle from an end
            let cyclic = members.iter().all(|&v| inner(v).len() == 2);
            let start = if cyclic {
                *members.iter().min().unwrap()
            } else {
                *members.iter().filter(|&&v| inner(v).len() < 2).min().unwrap()
            };
            let mut comp = vec![start];
            let mut prev = usize::MAX;
            let mut cur = start;
            while let Some(u) = inner(cur).into_iter().find(|&u| u != prev && u != start) {
                comp.push(u);
                prev = cur;
                cur = u;
            }
            let r = comp.len();
            let at = |i: usize| comp[i % r];
            for i in 0..r {
                let max_len = if cyclic { r.saturating_sub(2) } else { r - i };
                for len in 3..=max_len {
                    let path: Vec<usize> = (i..i + len).map(at).collect();
                    let x = path[0];
                    let y = path[len - 1];
                    if g.degree(x) != 2 || g.degree(y) != 2 {
                        continue;
                    }
                    let a = off(x, path[1]);
                    let b = off(y, path[len - 2]);
                    let (&[a], &[b]) = (a.as_slice(), b.as_slice()) else { continue };
                    if a == b || !g.has_edge(c, a) || !g.has_edge(c, b) {
                        continue;
                    }
                    if !path[1..len - 1].iter().any(|&v| g.has_edge(c, v)) {
                        continue;
                    }
                    let ear = if x < y {
                        Ear { path, a, b, c }
                    } else {
                        Ear { path: path.into_iter().rev().collect(), a: b, b: a, c }
                    };
                    found.push(ear);
                }
            }
        }
    }
    found.sort_by(|e, f| e.path.cmp(&f.path));
    found.dedup();
    let sets: Vec<Vec<usize>> = found
        .iter()
        .map(|e| {
            let mut s = e.path.clone();
            s.sort_unstable();
            s
        })
        .collect();
    let strictly_inside = |s: &[usize], t: &[usize]| s.len() < t.len() && s.iter().all(|v| t.binary_search(v).is_ok());
    (0..found.len())
        .filter(|&i| !(0..found.len()).any(|j| strictly_inside(&sets[i], &sets[j])))
        .map(|i| found[i].clone())
        .collect()
}

/// Number of chunks: ears, plus vertices of degree at least 3 outside every
/// ear.
pub fn chunk_count(g: &Graph) -> usize {
    let ears = find_ears(g);
    let mut in_ear = vec![false; g.n()];
    for e in &ears {
        for &v in &e.path {
            in_ear[v] = true;
        }
    }
    ears.len() + g.vertices().filter(|&v| g.degree(v) >= 3 && !in_ear[v]).count()
}

/// The potential `f(g) = f_{t(g)}(g)`.
pub fn potential(g: &Graph) -> i64 {
    potential_of_type(g, node_type(g))
}

pub fn potential_of_type(g: &Graph, t: u8) -> i64 {
    let n = g.n() as i64;
    match t {
        1 => n,
        2 => n - 1,
        3 => n - 2,
        4 => g.vertices().filter(|&v| g.degree(v) >= 3).count() as i64 - 3,
        _ => chunk_count(g) as i64 - 5,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basic::recognize_basic;
    use crate::synthesis::families;

    #[test]
    fn simple_trees() {
        let t = decompose(&Graph::cycle(5)).unwrap();
        assert_eq!(t.len(), 1);
        assert!(t.root().is_leaf());

        let g = families::cycles_sharing_edge(5, 5);
        let t = decompose(&g).unwrap();
        assert_eq!(t.len(), 3);
        assert_eq!(t.root().children, vec![1, 2]);
        assert_eq!(t.root().node_type, 3);
        for (_, leaf) in t.leaves() {
            assert!(leaf.graph.is_isomorphic(&Graph::cycle(5)));
        }
        assert_eq!(decompose(&Graph::empty(0)), Err(Error::EmptyGraph));
    }

    #[test]
    fn budget_is_enforced() {
        let g = families::cycles_sharing_edge(5, 5);
        assert_eq!(decompose_with_budget(&g, Some(2)), Err(Error::BudgetExceeded { limit: 2 }));
        assert!(decompose_with_budget(&g, Some(3)).is_ok());
    }

    #[test]
    fn node_types() {
        assert_eq!(node_type(&Graph::empty(1)), 1);
        assert_eq!(node_type(&Graph::empty(3)), 1);
        assert_eq!(node_type(&Graph::complete(2)), 2);
        assert_eq!(node_type(&Graph::path(3)), 2);
        assert_eq!(node_type(&Graph::cycle(6)), 3);
        assert_eq!(node_type(&families::cube()), 3);
        assert_eq!(node_type(&families::wheel(6, &[0, 2, 4])), 4);
        assert_eq!(node_type(&families::full_daisy(5).0), 5);
    }

    #[test]
    fn ears_of_daisies() {
        assert!(find_ears(&Graph::cycle(7)).is_empty());
        let (g, d) = families::daisy(6, &[(1, 3, &[1]), (2, 5, &[1, 3])]);
        let ears = find_ears(&g);
        assert_eq!(ears.len(), 2);
        for (e, p) in ears.iter().zip(&d.petals) {
            let mut a = e.path.clone();
            let mut b = p.path.clone();
            a.sort_unstable();
            b.sort_unstable();
            assert_eq!(a, b);
            assert_eq!(e.c, d.hole.0[p.center]);
        }
        // every leaf is basic here
        assert!(recognize_basic(&g).is_some());
    }

    #[test]
    fn potentials() {
        assert_eq!(potential(&Graph::complete(2)), 1);
        let w = families::wheel(8, &[0, 2, 4, 6]);
        assert_eq!(node_type(&w), 4);
        assert_eq!(potential(&w), 2);
        let (g, _) = families::daisy(6, &[(1, 3, &[1]), (2, 3, &[1])]);
        assert_eq!(node_type(&g), 5);
        assert_eq!(potential(&g), 1);
    }

    #[test]
    fn potential_shares_over_tree() {
        let g = families::two_wheels_on_2_separator();
        let t = decompose(&g).unwrap();
        assert!(t.len() < 2 * g.n());
        for node in &t.nodes {
            let f = potential_of_type(&node.graph, node.node_type);
            if node.is_leaf() {
                assert!(f >= 1);
            } else {
                let sum: i64 = node.children.iter().map(|&c| potential_of_type(&t.nodes[c].graph, t.nodes[c].node_type)).sum();
                assert!(f >= sum, "f = {f}, children sum = {sum}");
            }
        }
    }
}
