//! Tree representations (tree decompositions) of optimal width for basic
//! graphs, glued along the decomposition tree.

use serde::{Deserialize, Serialize};

use crate::basic::{recognize_basic, BasicKind, DaisyDescriptor};
use crate::decompose::DecompositionTree;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::separators::SeparatorSplit;

/// A tree with a bag of vertices on each node.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeRepresentation {
    pub bags: Vec<Vec<usize>>,
    pub edges: Vec<(usize, usize)>,
}

impl TreeRepresentation {
    pub fn new(mut bags: Vec<Vec<usize>>, edges: Vec<(usize, usize)>) -> Self {
        for b in &mut bags {
            b.sort_unstable();
            b.dedup();
        }
        TreeRepresentation { bags, edges }
    }

    /// Largest bag size minus one.
    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(1).saturating_sub(1)
    }

    pub fn relabeled(&self, map: &[usize]) -> Self {
        let bags = self.bags.iter().map(|b| b.iter().map(|&v| map[v]).collect()).collect();
        TreeRepresentation::new(bags, self.edges.clone())
    }

    fn bag_containing(&self, set: &[usize]) -> Option<usize> {
        self.bags.iter().position(|b| set.iter().all(|v| b.binary_search(v).is_ok()))
    }
}

/// Checks the three tree-representation conditions and returns the width.
pub fn validate_treerep(g: &Graph, rep: &TreeRepresentation) -> Result<usize> {
    let n = g.n();
    let t = rep.bags.len();
    let bad = |m: String| Err(Error::InvalidTreeRep(m));
    if t == 0 {
        return if n == 0 { Ok(0) } else { bad("no bags".into()) };
    }
    if rep.edges.len() != t - 1 {
        return bad(format!("{} bags but {} tree edges", t, rep.edges.len()));
    }
    let mut adj = vec![Vec::new(); t];
    for &(i, j) in &rep.edges {
        if i >= t || j >= t || i == j {
            return bad(format!("bad tree edge {i}-{j}"));
        }
        adj[i].push(j);
        adj[j].push(i);
    }
    let mut holders: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, bag) in rep.bags.iter().enumerate() {
        for &v in bag {
            if v >= n {
                return bad(format!("bag {i} holds unknown vertex {v}"));
            }
            holders[v].push(i);
        }
    }
    // the tree must be connected (t - 1 edges then make it a tree)
    let mut seen = vec![false; t];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for &j in &adj[i] {
            if !seen[j] {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    if seen.contains(&false) {
        return bad("the bags do not form a tree".into());
    }
    for (v, hs) in holders.iter().enumerate() {
        if hs.is_empty() {
            return bad(format!("vertex {v} is in no bag"));
        }
        // the bags holding v must induce a subtree
        let mut mark = vec![false; t];
        for &i in hs {
            mark[i] = true;
        }
        let mut reached = 1;
        let mut seen = vec![false; t];
        seen[hs[0]] = true;
        let mut stack = vec![hs[0]];
        while let Some(i) = stack.pop() {
            for &j in &adj[i] {
                if mark[j] && !seen[j] {
                    seen[j] = true;
                    reached += 1;
                    stack.push(j);
                }
            }
        }
        if reached != hs.len() {
            return bad(format!("bags holding vertex {v} are not connected"));
        }
    }
    for (u, v) in g.edges() {
        if !holders[u].iter().any(|i| rep.bags[*i].binary_search(&v).is_ok()) {
            return bad(format!("edge {u}-{v} is in no bag"));
        }
    }
    Ok(rep.width())
}

fn path_rep(bags: Vec<Vec<usize>>) -> TreeRepresentation {
    let edges = (1..bags.len()).map(|i| (i - 1, i)).collect();
    TreeRepresentation::new(bags, edges)
}

fn daisy_rep(d: &DaisyDescriptor) -> TreeRepresentation {
    let k = d.k();
    if d.petals.is_empty() {
        let c = &d.hole.0;
        return path_rep((1..k - 1).map(|i| vec![c[0], c[i], c[i + 1]]).collect());
    }
    // rotate so that hole position `shift` becomes c_0; for a non-full
    // daisy c_0 carries no petal
    let has_petal = |i: usize| d.petals.iter().any(|p| p.center == i);
    let full = d.is_full();
    let shift = if full { 0 } else { (0..k).find(|&i| !has_petal(i)).unwrap() };
    let c = |i: usize| d.hole.0[(shift + i) % k];
    let core_len = if full { k } else { k - 1 };
    let mut bags: Vec<Vec<usize>> = (0..core_len)
        .map(|i| {
            let mut b = vec![c(i), c(i + 1), c(i + 2), c(0)];
            if full {
                b.push(c(1));
            }
            b
        })
        .collect();
    let mut edges: Vec<(usize, usize)> = (1..core_len).map(|i| (i - 1, i)).collect();
    for p in &d.petals {
        let j = (p.center + k - shift) % k;
        // the core bag holding c_{j-1}, c_j, c_{j+1}
        let attach = (j + k - 1) % k;
        let mut prev = attach;
        let mut chain = vec![vec![c(j + k - 1), c(j), c(j + 1), p.path[0]]];
        for w in p.path.windows(2) {
            chain.push(vec![w[0], w[1], c(j), c(j + 1)]);
        }
        for bag in chain {
            bags.push(bag);
            edges.push((prev, bags.len() - 1));
            prev = bags.len() - 1;
        }
    }
    TreeRepresentation::new(bags, edges)
}

/// An optimal tree representation of a basic graph, in the descriptor's
/// vertex ids.
pub fn treerep_basic(kind: &BasicKind) -> TreeRepresentation {
    match kind {
        BasicKind::K1 => TreeRepresentation::new(vec![vec![0]], vec![]),
        BasicKind::K2 => TreeRepresentation::new(vec![vec![0, 1]], vec![]),
        BasicKind::Cube(l) => {
            let mut bags = vec![l.a.to_vec()];
            for i in 0..4 {
                let mut b: Vec<usize> = l.a.iter().copied().filter(|&v| v != l.a[i]).collect();
                b.push(l.b[i]);
                bags.push(b);
            }
            TreeRepresentation::new(bags, (1..5).map(|i| (0, i)).collect())
        }
        BasicKind::Daisy(d) => daisy_rep(d),
    }
}

/// Glues representations of the two blocks of `s` (`rep_a` for the `x`
/// side, `rep_b` for the `y` side; any two blocks for a clique split). All
/// ids are those of the split graph. Marker interiors are contracted into
/// `a` before the seam is added.
pub fn glue_treereps(rep_a: &TreeRepresentation, rep_b: &TreeRepresentation, s: &SeparatorSplit) -> Result<TreeRepresentation> {
    let contract = |rep: &TreeRepresentation, path: &[usize]| -> TreeRepresentation {
        let a = path[0];
        let gone = &path[..path.len() - 1];
        let bags = rep
            .bags
            .iter()
            .map(|bag| {
                if bag.iter().any(|v| gone.contains(v)) {
                    let mut nb: Vec<usize> = bag.iter().copied().filter(|v| !gone.contains(v)).collect();
                    nb.push(a);
                    nb
                } else {
                    bag.clone()
                }
            })
            .collect();
        TreeRepresentation::new(bags, rep.edges.clone())
    };
    let (left, right, seam) = match s {
        SeparatorSplit::Clique { clique, .. } => (rep_a.clone(), rep_b.clone(), clique.clone()),
        SeparatorSplit::Two { a, b, path_x, path_y, .. } => (contract(rep_a, &path_y.0), contract(rep_b, &path_x.0), vec![*a, *b]),
        SeparatorSplit::P3 { a, c, b, path_x, path_y, .. } => {
            (contract(rep_a, &path_y.0), contract(rep_b, &path_x.0), vec![*a, *c, *b])
        }
    };
    let i = left.bag_containing(&seam).ok_or_else(|| Error::InvalidTreeRep("no bag holds the separator on the first side".into()))?;
    let j = right.bag_containing(&seam).ok_or_else(|| Error::InvalidTreeRep("no bag holds the separator on the second side".into()))?;
    let off = left.bags.len();
    let mut bags = left.bags;
    bags.extend(right.bags);
    let mut edges = left.edges;
    edges.extend(right.edges.iter().map(|&(u, v)| (u + off, v + off)));
    edges.push((i, j + off));
    Ok(TreeRepresentation::new(bags, edges))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum WidthReason {
    /// Only K1 and K2 leaves.
    Tiny,
    /// No wheel: every leaf is a hole, K1 or K2.
    WheelFree,
    /// Some leaf is a cube or a daisy with a petal, but no leaf is a full
    /// k-daisy with k at least 5.
    HasWheel,
    /// Some leaf is a full k-daisy with k at least 5.
    FullDaisy { k: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WidthClass {
    pub predicted: usize,
    pub reason: WidthReason,
}

/// Treewidth predicted from the kinds of the leaves.
pub fn predict_width(leaves: &[BasicKind]) -> WidthClass {
    let full_k = leaves
        .iter()
        .filter_map(|l| match l {
            BasicKind::Daisy(d) if d.is_full() && d.k() >= 5 => Some(d.k()),
            _ => None,
        })
        .min();
    if let Some(k) = full_k {
        return WidthClass { predicted: 4, reason: WidthReason::FullDaisy { k } };
    }
    let wheel = leaves.iter().any(|l| match l {
        BasicKind::Cube(_) => true,
        BasicKind::Daisy(d) => !d.petals.is_empty(),
        _ => false,
    });
    if wheel {
        return WidthClass { predicted: 3, reason: WidthReason::HasWheel };
    }
    let holes = leaves.iter().any(|l| matches!(l, BasicKind::Daisy(_)));
    if holes {
        WidthClass { predicted: 2, reason: WidthReason::WheelFree }
    } else {
        let k2 = leaves.iter().any(|l| matches!(l, BasicKind::K2));
        WidthClass { predicted: usize::from(k2), reason: WidthReason::Tiny }
    }
}

/// Builds a representation of `g` of width `tw(g)` from an accepted
/// decomposition tree, returned in the ids of `g`.
pub fn exact_width(g: &Graph, t: &DecompositionTree) -> Result<(WidthClass, TreeRepresentation)> {
    if t.is_empty() || t.root().graph != *g {
        return Err(Error::Precondition("the tree does not belong to this graph".into()));
    }
    let mut reps: Vec<Option<TreeRepresentation>> = vec![None; t.len()];
    let mut kinds = Vec::new();
    // preorder ids: children always come after their parent
    for id in (0..t.len()).rev() {
        let node = &t.nodes[id];
        let rep = match &node.separator {
            None => {
                let kind = recognize_basic(&node.graph)
                    .ok_or_else(|| Error::NotInClass(format!("leaf {id} is not basic")))?;
                let rep = treerep_basic(&kind).relabeled(&node.to_root);
                kinds.push(kind);
                rep
            }
            Some(s) => {
                let s = s.relabeled(&node.to_root);
                let mut children = node.children.iter().map(|&c| reps[c].take().expect("child built"));
                let mut acc = children.next().expect("internal nodes have children");
                for next in children {
                    acc = glue_treereps(&acc, &next, &s)?;
                }
                acc
            }
        };
        reps[id] = Some(rep);
    }
    Ok((predict_width(&kinds), reps[0].take().unwrap()))
}

/// Which minor a model realises.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MinorKind {
    K4,
    K5,
    /// K6 minus the perfect matching {0-3, 1-4, 2-5}.
    Octahedron,
}

impl MinorKind {
    pub fn branch_count(self) -> usize {
        match self {
            MinorKind::K4 => 4,
            MinorKind::K5 => 5,
            MinorKind::Octahedron => 6,
        }
    }

    pub fn requires(self, i: usize, j: usize) -> bool {
        match self {
            MinorKind::Octahedron => i.abs_diff(j) != 3,
            _ => true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorModel {
    pub kind: MinorKind,
    pub branch_sets: Vec<Vec<usize>>,
}

/// Branch sets are non-empty, disjoint and connected, and every required
/// pair of them is joined by an edge.
pub fn verify_minor_model(g: &Graph, m: &MinorModel) -> bool {
    let n = g.n();
    let sets = &m.branch_sets;
    if sets.len() != m.kind.branch_count() {
        return false;
    }
    let mut owner = vec![usize::MAX; n];
    for (i, s) in sets.iter().enumerate() {
        if s.is_empty() {
            return false;
        }
        for &v in s {
            if v >= n || owner[v] != usize::MAX {
                return false;
            }
            owner[v] = i;
        }
        let Ok((h, _)) = g.induced_subgraph(s) else { return false };
        if !h.is_connected() {
            return false;
        }
    }
    let mut joined = vec![vec![false; sets.len()]; sets.len()];
    for (u, v) in g.edges() {
        let (i, j) = (owner[u], owner[v]);
        if i != usize::MAX && j != usize::MAX {
            joined[i][j] = true;
            joined[j][i] = true;
        }
    }
    (0..sets.len()).all(|i| (i + 1..sets.len()).all(|j| !m.kind.requires(i, j) || joined[i][j]))
}

/// A K5 model (odd k) or an octahedron model (even k) of a full k-daisy,
/// k at least 5.
pub fn minor_witness_k5_or_octahedron(d: &DaisyDescriptor) -> Result<MinorModel> {
    let k = d.k();
    if k < 5 || !d.is_full() {
        return Err(Error::Precondition("needs a full daisy on a hole of length at least 5".into()));
    }
    // unit m: c_m together with the petal centred at c_{m+1}
    let unit = |m: usize| -> Vec<usize> {
        let p = d.petals.iter().find(|p| p.center == (m + 1) % k).expect("full daisy");
        let mut u = vec![d.hole.0[m]];
        u.extend(&p.path);
        u
    };
    let union = |ms: Vec<usize>| ms.into_iter().flat_map(unit).collect::<Vec<_>>();
    let l = k / 2;
    let model = if k % 2 == 1 {
        MinorModel {
            kind: MinorKind::K5,
            branch_sets: vec![
                unit(0),
                unit(1),
                unit(2),
                union((2..=l).map(|i| 2 * i - 1).collect()),
                union((2..=l).map(|i| 2 * i).collect()),
            ],
        }
    } else {
        MinorModel {
            kind: MinorKind::Octahedron,
            branch_sets: vec![
                unit(0),
                unit(1),
                unit(2),
                unit(3),
                union((2..l).map(|i| 2 * i).collect()),
                union((3..=l).map(|i| 2 * i - 1).collect()),
            ],
        }
    };
    Ok(model)
}

/// A K4 model inside a daisy with at least one petal.
pub fn k4_minor(d: &DaisyDescriptor) -> Result<MinorModel> {
    let p = d.petals.first().ok_or_else(|| Error::Precondition("the daisy has no petal".into()))?;
    let k = d.k();
    let j = p.center;
    let h = &d.hole.0;
    let first = p.path.iter().position(|v| p.spokes.first() == Some(v)).expect("a petal has a spoke");
    let mut b = vec![h[(j + k - 1) % k]];
    b.extend(&p.path[..first]);
    let rest: Vec<usize> = (1..k - 1).map(|i| h[(j + i) % k]).collect();
    Ok(MinorModel { kind: MinorKind::K4, branch_sets: vec![vec![h[j]], b, p.path[first..].to_vec(), rest] })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::decompose;
    use crate::synthesis::families;

    fn width_of(g: &Graph) -> usize {
        let t = decompose(g).unwrap();
        let (class, rep) = exact_width(g, &t).unwrap();
        let w = validate_treerep(g, &rep).unwrap();
        assert_eq!(w, class.predicted);
        w
    }

    #[test]
    fn basic_widths() {
        let cube = families::cube();
        let Some(kind) = recognize_basic(&cube) else { panic!() };
        let rep = treerep_basic(&kind);
        assert_eq!(rep.bags.len(), 5);
        assert_eq!(validate_treerep(&cube, &rep), Ok(3));
        assert_eq!(width_of(&Graph::cycle(8)), 2);
        assert_eq!(width_of(&Graph::complete(2)), 1);
        assert_eq!(width_of(&Graph::empty(1)), 0);
        assert_eq!(width_of(&families::full_daisy(4).0), 3);
        for k in 5..=8 {
            assert_eq!(width_of(&families::full_daisy(k).0), 4, "k = {k}");
        }
        assert_eq!(width_of(&families::wheel(6, &[0, 2, 4])), 3);
        assert_eq!(width_of(&families::daisy(6, &[(2, 3, &[1]), (3, 3, &[1])]).0), 3);
    }

    #[test]
    fn validation_failures() {
        let cube = families::cube();
        let Some(kind) = recognize_basic(&cube) else { panic!() };
        let BasicKind::Cube(labels) = &kind else { panic!() };
        let mut rep = treerep_basic(&kind);
        rep.bags[1].retain(|&v| v != labels.b[0]);
        assert!(validate_treerep(&cube, &rep).is_err());

        let c6 = Graph::cycle(6);
        let single = TreeRepresentation::new(vec![(0..6).collect()], vec![]);
        assert_eq!(validate_treerep(&c6, &single), Ok(5));
        let split = TreeRepresentation::new(vec![vec![0, 1, 2], vec![3, 4, 5], vec![0, 5]], vec![(0, 2), (1, 2)]);
        assert!(validate_treerep(&c6, &split).is_err());
    }

    #[test]
    fn glued_widths() {
        assert_eq!(width_of(&families::cycles_sharing_edge(5, 5)), 2);
        assert_eq!(width_of(&families::two_wheels_on_2_separator()), 3);
    }

    #[test]
    fn minor_models() {
        for k in 5..=9 {
            let (g, d) = families::full_daisy(k);
            let m = minor_witness_k5_or_octahedron(&d).unwrap();
            assert_eq!(m.kind, if k % 2 == 1 { MinorKind::K5 } else { MinorKind::Octahedron });
            assert!(verify_minor_model(&g, &m), "k = {k}");
        }
        assert!(minor_witness_k5_or_octahedron(&families::full_daisy(4).1).is_err());
        let (g, d) = families::daisy(6, &[(2, 5, &[1, 3])]);
        assert!(verify_minor_model(&g, &k4_minor(&d).unwrap()));
    }
}
