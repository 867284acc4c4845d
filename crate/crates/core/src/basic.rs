//! Basic graphs: K1, K2, the cube and daisies (a hole with petals).

use serde::{Deserialize, Serialize};

use crate::decompose::find_ears;
use crate::graph::{Graph, Hole};
use crate::oracles::{is_bipartite, Bipartition};

/// A petal attached to the base hole `c_0 .. c_{k-1}` and centred at
/// `c_center`: `path[0]` is adjacent to `c_{center-1}`, the last vertex to
/// `c_{center+1}`, and `spokes` lists the path vertices adjacent to the
/// centre, in path order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Petal {
    pub center: usize,
    pub path: Vec<usize>,
    pub spokes: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DaisyDescriptor {
    pub hole: Hole,
    pub petals: Vec<Petal>,
}

impl DaisyDescriptor {
    pub fn k(&self) -> usize {
        self.hole.len()
    }

    pub fn is_full(&self) -> bool {
        self.petals.len() == self.k()
    }

    pub fn vertex_count(&self) -> usize {
        self.k() + self.petals.iter().map(|p| p.path.len()).sum::<usize>()
    }

    /// Renames every vertex through `map`.
    pub fn relabeled(&self, map: &[usize]) -> DaisyDescriptor {
        DaisyDescriptor {
            hole: Hole(self.hole.0.iter().map(|&v| map[v]).collect()),
            petals: self
                .petals
                .iter()
                .map(|p| Petal {
                    center: p.center,
                    path: p.path.iter().map(|&v| map[v]).collect(),
                    spokes: p.spokes.iter().map(|&v| map[v]).collect(),
                })
                .collect(),
        }
    }

    /// The `(c_{i-1}, c_i, c_{i+1})` triple of a petal.
    pub fn anchors(&self, petal: &Petal) -> (usize, usize, usize) {
        let k = self.k();
        let h = &self.hole.0;
        (h[(petal.center + k - 1) % k], h[petal.center], h[(petal.center + 1) % k])
    }
}

/// The cube with its bipartition `a_i` / `b_i`, where `b_i` is the unique
/// vertex of the other side not adjacent to `a_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CubeLabels {
    pub a: [usize; 4],
    pub b: [usize; 4],
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BasicKind {
    K1,
    K2,
    Cube(CubeLabels),
    Daisy(DaisyDescriptor),
}

impl BasicKind {
    pub fn name(&self) -> String {
        match self {
            BasicKind::K1 => "K1".into(),
            BasicKind::K2 => "K2".into(),
            BasicKind::Cube(_) => "cube".into(),
            BasicKind::Daisy(d) if d.petals.is_empty() => format!("hole C{}", d.k()),
            BasicKind::Daisy(d) if d.petals.len() == 1 => format!("wheel on C{}", d.k()),
            BasicKind::Daisy(d) if d.is_full() => format!("full {}-daisy", d.k()),
            BasicKind::Daisy(d) => format!("{}-daisy with {} petals", d.k(), d.petals.len()),
        }
    }

    pub fn relabeled(&self, map: &[usize]) -> BasicKind {
        match self {
            BasicKind::Cube(c) => BasicKind::Cube(CubeLabels { a: c.a.map(|v| map[v]), b: c.b.map(|v| map[v]) }),
            BasicKind::Daisy(d) => BasicKind::Daisy(d.relabeled(map)),
            other => other.clone(),
        }
    }
}

/// Parity and sector data of a daisy, with the subclass verdicts derived
/// from them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DaisyClass {
    pub k: usize,
    pub full: bool,
    pub petal_count: usize,
    pub hole_odd: bool,
    /// Number of centre neighbours inside each petal.
    pub spoke_counts: Vec<usize>,
    /// For each petal, the lengths of the sectors along
    /// `c_{i-1} x .. y c_{i+1}` cut by the centre's neighbours.
    pub external_sectors: Vec<Vec<usize>>,
    pub even_wheel_free: bool,
    pub even_hole_free: bool,
    pub bipartite: bool,
}

pub fn classify_daisy(d: &DaisyDescriptor) -> DaisyClass {
    let k = d.k();
    let spoke_counts: Vec<usize> = d.petals.iter().map(|p| p.spokes.len()).collect();
    let external_sectors: Vec<Vec<usize>> = d
        .petals
        .iter()
        .map(|p| {
            // positions along c_{i-1}, x, .., y, c_{i+1}
            let mut marks = vec![0];
            marks.extend(p.spokes.iter().map(|s| 1 + p.path.iter().position(|v| v == s).expect("spoke on petal")));
            marks.push(p.path.len() + 1);
            marks.windows(2).map(|w| w[1] - w[0]).collect()
        })
        .collect();
    let even_wheel_free = spoke_counts.iter().all(|c| c % 2 == 1);
    let all_sectors = || external_sectors.iter().flatten();
    let even_hole_free = even_wheel_free && k % 2 == 1 && all_sectors().all(|l| l % 2 == 1);
    let bipartite = k.is_multiple_of(2) && all_sectors().all(|l| l % 2 == 0);
    DaisyClass {
        k,
        full: d.is_full(),
        petal_count: d.petals.len(),
        hole_odd: k % 2 == 1,
        spoke_counts,
        external_sectors,
        even_wheel_free,
        even_hole_free,
        bipartite,
    }
}

/// Checks every defining condition of a daisy, and that the descriptor
/// covers `g` exactly.
pub fn verify_daisy(g: &Graph, d: &DaisyDescriptor) -> bool {
    let n = g.n();
    let k = d.k();
    let h = &d.hole.0;
    if !g.is_hole(h) {
        return false;
    }
    // owner[v]: None = unused, Some(usize::MAX) = hole, Some(i) = petal i
    let mut owner = vec![None; n];
    for &v in h {
        owner[v] = Some(usize::MAX);
    }
    let mut centers = vec![false; k];
    for (i, p) in d.petals.iter().enumerate() {
        if p.center >= k || centers[p.center] || p.path.len() < 3 {
            return false;
        }
        centers[p.center] = true;
        for &v in &p.path {
            if v >= n || owner[v].is_some() {
                return false;
            }
            owner[v] = Some(i);
        }
        if !g.is_induced_path(&p.path) {
            return false;
        }
    }
    if owner.iter().any(Option::is_none) {
        return false;
    }
    // centres: empty, all of C, or one cyclic interval
    let count = centers.iter().filter(|&&c| c).count();
    if count > 0 && count < k {
        let starts = (0..k).filter(|&i| centers[i] && !centers[(i + k - 1) % k]).count();
        if starts != 1 {
            return false;
        }
    }
    let mut hole_pos = vec![usize::MAX; n];
    for (i, &v) in h.iter().enumerate() {
        hole_pos[v] = i;
    }
    for (i, p) in d.petals.iter().enumerate() {
        let (prev, c, next) = d.anchors(p);
        let x = p.path[0];
        let y = *p.path.last().unwrap();
        let actual: Vec<usize> = p.path.iter().copied().filter(|&v| g.has_edge(c, v)).collect();
        if actual != p.spokes || actual.is_empty() {
            return false;
        }
        if !g.has_edge(x, prev) || !g.has_edge(y, next) {
            return false;
        }
        // no two consecutive vertices of prev x .. y next adjacent to c
        let mut seq = vec![prev];
        seq.extend(&p.path);
        seq.push(next);
        if seq.windows(2).any(|e| g.has_edge(c, e[0]) && g.has_edge(c, e[1])) {
            return false;
        }
        for (j, &v) in p.path.iter().enumerate() {
            for &w in g.neighbors(v) {
                match owner[w] {
                    Some(o) if o == i => {}
                    Some(usize::MAX) => {
                        let allowed = w == c || (j == 0 && w == prev) || (j + 1 == p.path.len() && w == next);
                        if !allowed {
                            return false;
                        }
                    }
                    _ => return false,
                }
            }
        }
    }
    true
}

/// Recognises K1, K2, the cube and daisies; returns a certified descriptor.
pub fn recognize_basic(g: &Graph) -> Option<BasicKind> {
    let n = g.n();
    match n {
        0 => return None,
        1 => return Some(BasicKind::K1),
        2 => return g.has_edge(0, 1).then_some(BasicKind::K2),
        _ => {}
    }
    if g.max_degree() <= 2 {
        let order = g.hole_order()?;
        return Some(BasicKind::Daisy(DaisyDescriptor { hole: Hole(order), petals: vec![] }));
    }
    if let Some(labels) = cube_labels(g) {
        return Some(BasicKind::Cube(labels));
    }
    if let Some(d) = wheel_descriptor(g) {
        return Some(BasicKind::Daisy(d));
    }
    daisy_from_ears(g).map(BasicKind::Daisy)
}

/// Labels for `g` if it is the cube (the unique connected 3-regular
/// bipartite graph on eight vertices).
pub fn cube_labels(g: &Graph) -> Option<CubeLabels> {
    if g.n() != 8 || g.vertices().any(|v| g.degree(v) != 3) || !g.is_connected() {
        return None;
    }
    let Bipartition::Coloring(col) = is_bipartite(g) else { return None };
    let a: Vec<usize> = g.vertices().filter(|&v| col[v] == 0).collect();
    if a.len() != 4 {
        return None;
    }
    let mut labels = CubeLabels { a: [0; 4], b: [0; 4] };
    for (i, &ai) in a.iter().enumerate() {
        labels.a[i] = ai;
        labels.b[i] = g.vertices().find(|&v| col[v] == 1 && !g.has_edge(ai, v))?;
    }
    Some(labels)
}

/// Whether `g` is a wheel: some vertex of degree at least 3 whose removal
/// leaves a hole.
pub fn is_wheel(g: &Graph) -> bool {
    g.vertices().any(|c| {
        g.degree(c) >= 3 && g.edge_count() == g.n() - 1 + g.degree(c) && g.without(&[c]).0.is_hole_graph()
    })
}

fn wheel_descriptor(g: &Graph) -> Option<DaisyDescriptor> {
    for c in g.vertices() {
        if g.degree(c) < 3 || g.edge_count() != g.n() - 1 + g.degree(c) {
            continue;
        }
        let (rest, map) = g.without(&[c]);
        let Some(order) = rest.hole_order() else { continue };
        let rim: Vec<usize> = order.iter().map(|&v| map[v]).collect();
        let k = rim.len();
        let spokes: Vec<usize> = (0..k).filter(|&i| g.has_edge(c, rim[i])).collect();
        for t in 0..spokes.len() {
            let p = spokes[t];
            let q = spokes[(t + 1) % spokes.len()];
            // base hole: c, then the sector from q back to p
            let mut hole = vec![c];
            let mut i = q;
            loop {
                hole.push(rim[i]);
                if i == p {
                    break;
                }
                i = (i + k - 1) % k;
            }
            if hole.len() < 4 {
                continue;
            }
            let mut path = Vec::new();
            let mut i = (p + k - 1) % k;
            while i != q {
                path.push(rim[i]);
                i = (i + k - 1) % k;
            }
            let spokes_on: Vec<usize> = path.iter().copied().filter(|&v| g.has_edge(c, v)).collect();
            let d = DaisyDescriptor { hole: Hole(hole), petals: vec![Petal { center: 0, path, spokes: spokes_on }] };
            if verify_daisy(g, &d) {
                return Some(d);
            }
        }
    }
    None
}

fn daisy_from_ears(g: &Graph) -> Option<DaisyDescriptor> {
    let ears = find_ears(g);
    if ears.len() < 2 {
        return None;
    }
    let mut in_ear = vec![false; g.n()];
    for e in &ears {
        for &v in &e.path {
            if in_ear[v] {
                return None;
            }
            in_ear[v] = true;
        }
    }
    let rest: Vec<usize> = g.vertices().filter(|&v| !in_ear[v]).collect();
    let (hole_graph, map) = g.induced_subgraph(&rest).ok()?;
    let order: Vec<usize> = hole_graph.hole_order()?.iter().map(|&v| map[v]).collect();
    let k = order.len();
    let mut pos = vec![usize::MAX; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut petals = Vec::new();
    for e in &ears {
        let (pa, pc, pb) = (pos[e.a], pos[e.c], pos[e.b]);
        if pa == usize::MAX || pc == usize::MAX || pb == usize::MAX {
            return None;
        }
        let path = if (pa + 1) % k == pc && (pc + 1) % k == pb {
            e.path.clone()
        } else if (pb + 1) % k == pc && (pc + 1) % k == pa {
            e.path.iter().rev().copied().collect()
        } else {
            return None;
        };
        let spokes = path.iter().copied().filter(|&v| g.has_edge(e.c, v)).collect();
        petals.push(Petal { center: pc, path, spokes });
    }
    petals.sort_by_key(|p| p.center);
    let d = DaisyDescriptor { hole: Hole(order), petals };
    verify_daisy(g, &d).then_some(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::{find_pattern, PatternKind};
    use crate::synthesis::families;

    #[test]
    fn hole_is_daisy_without_petals() {
        match recognize_basic(&Graph::cycle(7)) {
            Some(BasicKind::Daisy(d)) => {
                assert!(d.petals.is_empty());
                assert_eq!(d.k(), 7);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn wheel_is_daisy_with_one_petal() {
        let w = families::wheel(6, &[0, 2, 4]);
        match recognize_basic(&w) {
            Some(BasicKind::Daisy(d)) => {
                assert_eq!(d.petals.len(), 1);
                assert!(verify_daisy(&w, &d));
                let mut bare = d.clone();
                bare.petals.clear();
                assert!(!verify_daisy(&w, &bare));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn cube_and_k23() {
        assert!(matches!(recognize_basic(&families::cube()), Some(BasicKind::Cube(_))));
        assert!(recognize_basic(&Graph::complete_bipartite(2, 3)).is_none());
        assert!(recognize_basic(&Graph::path(3)).is_none());
        assert!(recognize_basic(&Graph::complete(3)).is_none());
    }

    #[test]
    fn full_daisy_descriptor_verifies() {
        for k in 4..=8 {
            let (g, d) = families::full_daisy(k);
            assert!(verify_daisy(&g, &d), "k = {k}");
            match recognize_basic(&g) {
                Some(BasicKind::Daisy(r)) => {
                    assert_eq!(r.petals.len(), k);
                    assert!(r.is_full());
                }
                other => panic!("k = {k}: {other:?}"),
            }
        }
    }

    #[test]
    fn classify_examples() {
        let c6 = classify_daisy(&DaisyDescriptor { hole: Hole((0..6).collect()), petals: vec![] });
        assert!(c6.bipartite && c6.even_wheel_free && !c6.even_hole_free);

        let w = families::wheel(6, &[0, 2, 4]);
        let Some(BasicKind::Daisy(d)) = recognize_basic(&w) else { panic!() };
        let c = classify_daisy(&d);
        assert!(c.even_wheel_free);
        assert!(!c.even_hole_free);
        assert_eq!(find_pattern(&w, PatternKind::EvenWheel).unwrap().is_none(), c.even_wheel_free);
        assert_eq!(find_pattern(&w, PatternKind::EvenHole).unwrap().is_none(), c.even_hole_free);

        let (g, d) = families::full_daisy(5);
        let c = classify_daisy(&d);
        assert!(c.full && c.hole_odd);
        // each minimal petal x m y has sectors 2 and 2
        assert!(c.external_sectors.iter().all(|s| s == &vec![2, 2]));
        assert!(c.even_wheel_free && !c.even_hole_free && !c.bipartite);
        let _ = g;
    }
}
