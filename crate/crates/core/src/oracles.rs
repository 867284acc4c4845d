//! Exhaustive detectors for the induced patterns the class is defined by.
//!
//! Most searches start from an enumeration of all holes, which is exponential,
//! so they refuse graphs above a configurable size instead of guessing.

use std::collections::VecDeque;
use std::fmt;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Hole};

/// Default vertex limit for the exponential pattern searches.
pub const DEFAULT_PATTERN_LIMIT: usize = 16;
/// Default vertex limit for the Kuratowski witness search.
pub const DEFAULT_KURATOWSKI_LIMIT: usize = 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimits {
    pub pattern: usize,
    pub kuratowski: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits { pattern: DEFAULT_PATTERN_LIMIT, kuratowski: DEFAULT_KURATOWSKI_LIMIT }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PatternKind {
    Triangle,
    Theta,
    Hole,
    EvenHole,
    OddHole,
    Wheel,
    EvenWheel,
    Wac,
    Turtle,
    CWac,
    Prism,
    Cube,
}

impl PatternKind {
    pub const ALL: [PatternKind; 12] = [
        PatternKind::Triangle,
        PatternKind::Theta,
        PatternKind::Hole,
        PatternKind::EvenHole,
        PatternKind::OddHole,
        PatternKind::Wheel,
        PatternKind::EvenWheel,
        PatternKind::Wac,
        PatternKind::Turtle,
        PatternKind::CWac,
        PatternKind::Prism,
        PatternKind::Cube,
    ];

    /// Kinds whose search is exponential and therefore size-limited.
    pub fn is_limited(self) -> bool {
        !matches!(self, PatternKind::Triangle | PatternKind::Hole | PatternKind::Cube)
    }

    pub fn name(self) -> &'static str {
        match self {
            PatternKind::Triangle => "triangle",
            PatternKind::Theta => "theta",
            PatternKind::Hole => "hole",
            PatternKind::EvenHole => "even-hole",
            PatternKind::OddHole => "odd-hole",
            PatternKind::Wheel => "wheel",
            PatternKind::EvenWheel => "even-wheel",
            PatternKind::Wac => "wac",
            PatternKind::Turtle => "turtle",
            PatternKind::CWac => "c-wac",
            PatternKind::Prism => "prism",
            PatternKind::Cube => "cube",
        }
    }
}

impl fmt::Display for PatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for PatternKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_lowercase().replace('_', "-");
        PatternKind::ALL
            .iter()
            .copied()
            .find(|k| k.name() == key || k.name().replace('-', "") == key)
            .ok_or_else(|| Error::InvalidInput(format!("unknown pattern kind `{s}`")))
    }
}

/// Role annotation of a witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Structure {
    Triangle([usize; 3]),
    /// Apexes `a < b` and three `ab`-paths, sorted.
    Theta { apexes: (usize, usize), paths: [Vec<usize>; 3] },
    Hole(Vec<usize>),
    Wheel { rim: Vec<usize>, center: usize },
    Wac { rim: Vec<usize>, centers: (usize, usize) },
    /// Paths `a_i .. b_i`; `a_1 a_2 a_3` and `b_1 b_2 b_3` are the triangles.
    Prism { paths: [Vec<usize>; 3] },
    /// `map[i]` is the host vertex playing the role of vertex `i` of
    /// [`crate::synthesis::families::cube`].
    Cube { map: [usize; 8] },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternWitness {
    pub kind: PatternKind,
    /// Sorted vertex set of the induced pattern.
    pub vertices: Vec<usize>,
    pub structure: Structure,
}

fn check_limit(g: &Graph, what: &'static str, limit: usize) -> Result<()> {
    let limit = limit.min(64);
    if g.n() > limit {
        Err(Error::SizeLimit { what, n: g.n(), limit })
    } else {
        Ok(())
    }
}

pub(crate) fn masks(g: &Graph) -> Vec<u64> {
    g.vertices().map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w)).collect()
}

fn mask_of(vs: &[usize]) -> u64 {
    vs.iter().fold(0, |m, &v| m | 1 << v)
}

/// Calls `f` on every hole of `g` exactly once (smallest vertex first, then
/// towards its smaller hole neighbour). Requires `n <= 64`.
pub(crate) fn for_each_hole(g: &Graph, mut f: impl FnMut(&[usize]) -> ControlFlow<()>) -> ControlFlow<()> {
    let nb = masks(g);
    let n = g.n();
    let mut path = Vec::with_capacity(n);
    for s in 0..n {
        let above: u64 = if s + 1 >= 64 { 0 } else { !0u64 << (s + 1) };
        for &p1 in g.neighbors(s) {
            if p1 < s {
                continue;
            }
            path.clear();
            path.push(s);
            path.push(p1);
            extend_hole(&nb, s, above, &mut path, 1 << s | 1 << p1, 0, &mut f)?;
        }
    }
    ControlFlow::Continue(())
}

fn extend_hole(
    nb: &[u64],
    s: usize,
    above: u64,
    path: &mut Vec<usize>,
    in_path: u64,
    blocked: u64,
    f: &mut impl FnMut(&[usize]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let last = *path.last().unwrap();
    let mut cand = nb[last] & above & !in_path & !blocked;
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        if nb[v] >> s & 1 == 1 {
            if path.len() >= 3 && path[1] < v {
                path.push(v);
                let r = f(path);
                path.pop();
                r?;
            }
            continue;
        }
        // `last` becomes internal once `v` is appended
        let extra = if path.len() >= 2 { nb[last] } else { 0 };
        path.push(v);
        let r = extend_hole(nb, s, above, path, in_path | 1 << v, blocked | extra, f);
        path.pop();
        r?;
    }
    ControlFlow::Continue(())
}

/// All holes of `g`, each in the canonical rotation used by the enumerator.
pub fn all_holes(g: &Graph) -> Result<Vec<Hole>> {
    check_limit(g, "hole enumeration", 64)?;
    let mut out = Vec::new();
    let _ = for_each_hole(g, |h| {
        out.push(Hole(h.to_vec()));
        ControlFlow::Continue(())
    });
    Ok(out)
}

fn first_hole_where<T>(g: &Graph, mut f: impl FnMut(&[usize]) -> Option<T>) -> Option<T> {
    let mut found = None;
    let _ = for_each_hole(g, |h| match f(h) {
        Some(t) => {
            found = Some(t);
            ControlFlow::Break(())
        }
        None => ControlFlow::Continue(()),
    });
    found
}

/// Searches for an induced pattern of the given kind using the default limits.
pub fn find_pattern(g: &Graph, kind: PatternKind) -> Result<Option<PatternWitness>> {
    find_pattern_with(g, kind, &OracleLimits::default())
}

pub fn find_pattern_with(g: &Graph, kind: PatternKind, limits: &OracleLimits) -> Result<Option<PatternWitness>> {
    if kind.is_limited() {
        check_limit(g, "exhaustive pattern search", limits.pattern)?;
    }
    let w = match kind {
        PatternKind::Triangle => find_triangle(g),
        PatternKind::Hole => find_any_hole(g),
        PatternKind::EvenHole => find_hole_parity(g, 0),
        PatternKind::OddHole => find_hole_parity(g, 1),
        PatternKind::Theta => find_theta(g),
        PatternKind::Wheel => find_wheel(g, false),
        PatternKind::EvenWheel => find_wheel(g, true),
        PatternKind::Wac | PatternKind::Turtle | PatternKind::CWac => find_wac(g, kind),
        PatternKind::Prism => find_prism(g),
        PatternKind::Cube => find_cube(g),
    };
    Ok(w)
}

fn witness(kind: PatternKind, structure: Structure) -> PatternWitness {
    let mut vertices: Vec<usize> = match &structure {
        Structure::Triangle(t) => t.to_vec(),
        Structure::Theta { paths, .. } => paths.iter().flatten().copied().collect(),
        Structure::Hole(h) => h.clone(),
        Structure::Wheel { rim, center } => rim.iter().copied().chain([*center]).collect(),
        Structure::Wac { rim, centers } => rim.iter().copied().chain([centers.0, centers.1]).collect(),
        Structure::Prism { paths } => paths.iter().flatten().copied().collect(),
        Structure::Cube { map } => map.to_vec(),
    };
    vertices.sort_unstable();
    vertices.dedup();
    PatternWitness { kind, vertices, structure }
}

fn find_triangle(g: &Graph) -> Option<PatternWitness> {
    for (u, v) in g.edges() {
        if let Some(&w) = g.neighbors(v).iter().find(|&&w| w > v && g.has_edge(u, w)) {
            return Some(witness(PatternKind::Triangle, Structure::Triangle([u, v, w])));
        }
    }
    None
}

/// Polynomial hole search: for each induced `u - v - w`, look for a shortest
/// `uw`-path avoiding the closed neighbourhood of `v`.
fn find_any_hole(g: &Graph) -> Option<PatternWitness> {
    let n = g.n();
    for v in 0..n {
        let mut inner = vec![true; n];
        inner[v] = false;
        for &x in g.neighbors(v) {
            inner[x] = false;
        }
        let nv = g.neighbors(v);
        for (i, &u) in nv.iter().enumerate() {
            for &w in &nv[i + 1..] {
                if g.has_edge(u, w) {
                    continue;
                }
                if let Some(p) = g.shortest_path_mask(u, w, &inner) {
                    let mut rim = vec![v];
                    rim.extend(p.0);
                    let hole = Hole(rim).canonical();
                    return Some(witness(PatternKind::Hole, Structure::Hole(hole.0)));
                }
            }
        }
    }
    None
}

fn find_hole_parity(g: &Graph, parity: usize) -> Option<PatternWitness> {
    let kind = if parity == 0 { PatternKind::EvenHole } else { PatternKind::OddHole };
    first_hole_where(g, |h| (h.len() % 2 == parity).then(|| witness(kind, Structure::Hole(h.to_vec()))))
}

fn find_theta(g: &Graph) -> Option<PatternWitness> {
    let nb = masks(g);
    let n = g.n();
    first_hole_where(g, |h| {
        let hm = mask_of(h);
        let k = h.len();
        for i in 0..k {
            for j in i + 2..k {
                if i == 0 && j == k - 1 {
                    continue;
                }
                let (a, b) = (h[i], h[j]);
                let ab = 1u64 << a | 1 << b;
                let inner: Vec<bool> =
                    (0..n).map(|v| hm >> v & 1 == 0 && nb[v] & hm & !ab == 0).collect();
                if let Some(p) = g.shortest_path_mask(a, b, &inner) {
                    if p.length() < 2 {
                        continue;
                    }
                    let first: Vec<usize> = h[i..=j].to_vec();
                    let mut second: Vec<usize> = h[j..].to_vec();
                    second.extend_from_slice(&h[..=i]);
                    second.reverse();
                    return Some(theta_witness(a, b, [first, second, p.0]));
                }
            }
        }
        None
    })
}

fn theta_witness(a: usize, b: usize, mut paths: [Vec<usize>; 3]) -> PatternWitness {
    let (a, b) = (a.min(b), a.max(b));
    for p in paths.iter_mut() {
        if p[0] != a {
            p.reverse();
        }
    }
    paths.sort();
    witness(PatternKind::Theta, Structure::Theta { apexes: (a, b), paths })
}

fn find_wheel(g: &Graph, even: bool) -> Option<PatternWitness> {
    let nb = masks(g);
    let kind = if even { PatternKind::EvenWheel } else { PatternKind::Wheel };
    first_hole_where(g, |h| {
        let hm = mask_of(h);
        (0..g.n()).find_map(|c| {
            let cnt = (nb[c] & hm).count_ones();
            (hm >> c & 1 == 0 && cnt >= 3 && (!even || cnt.is_multiple_of(2)))
                .then(|| witness(kind, Structure::Wheel { rim: h.to_vec(), center: c }))
        })
    })
}

/// Whether the wac with rim `rim` and centres `x`, `y` is a turtle: some
/// sector of one centre's wheel holds every rim neighbour of the other.
pub fn is_turtle(g: &Graph, rim: &[usize], x: usize, y: usize) -> bool {
    sector_contains(g, rim, y, x) || sector_contains(g, rim, x, y)
}

fn sector_contains(g: &Graph, rim: &[usize], center: usize, other: usize) -> bool {
    let k = rim.len();
    let spokes: Vec<usize> = (0..k).filter(|&i| g.has_edge(center, rim[i])).collect();
    let theirs: Vec<usize> = (0..k).filter(|&i| g.has_edge(other, rim[i])).collect();
    (0..spokes.len()).any(|t| {
        let start = spokes[t];
        let end = spokes[(t + 1) % spokes.len()];
        let span = (end + k - start) % k;
        theirs.iter().all(|&p| (p + k - start) % k <= span)
    })
}

fn find_wac(g: &Graph, kind: PatternKind) -> Option<PatternWitness> {
    let nb = masks(g);
    first_hole_where(g, |h| {
        let hm = mask_of(h);
        let centers: Vec<usize> =
            (0..g.n()).filter(|&v| hm >> v & 1 == 0 && (nb[v] & hm).count_ones() >= 3).collect();
        for (i, &x) in centers.iter().enumerate() {
            for &y in &centers[i + 1..] {
                if !g.has_edge(x, y) {
                    continue;
                }
                let ok = match kind {
                    PatternKind::Wac => true,
                    PatternKind::Turtle => is_turtle(g, h, x, y),
                    _ => !is_turtle(g, h, x, y),
                };
                if ok {
                    return Some(witness(kind, Structure::Wac { rim: h.to_vec(), centers: (x, y) }));
                }
            }
        }
        None
    })
}

fn find_prism(g: &Graph) -> Option<PatternWitness> {
    let nb = masks(g);
    let n = g.n();
    first_hole_where(g, |h| {
        let hm = mask_of(h);
        let k = h.len();
        let on_rim = |v: usize| nb[v] & hm;
        let free: Vec<bool> = (0..n).map(|v| hm >> v & 1 == 0 && on_rim(v) == 0).collect();
        for i in 0..k {
            for j in i + 2..k {
                if (j + 1) % k == i {
                    continue;
                }
                let (a1, a2) = (h[i], h[(i + 1) % k]);
                let (b2, b1) = (h[j], h[(j + 1) % k]);
                let ea = 1u64 << a1 | 1 << a2;
                let eb = 1u64 << b1 | 1 << b2;
                let sources: Vec<usize> = (0..n).filter(|&v| hm >> v & 1 == 0 && on_rim(v) == ea).collect();
                if sources.is_empty() {
                    continue;
                }
                let is_target = |v: usize| hm >> v & 1 == 0 && on_rim(v) == eb;
                if let Some(p3) = multi_source_path(g, &sources, &is_target, &free) {
                    let mut p1: Vec<usize> = Vec::new();
                    let mut t = i;
                    loop {
                        p1.push(h[t]);
                        if t == (j + 1) % k {
                            break;
                        }
                        t = (t + k - 1) % k;
                    }
                    let p2: Vec<usize> = (i + 1..=j).map(|t| h[t % k]).collect();
                    let _ = (b1, b2);
                    return Some(witness(PatternKind::Prism, Structure::Prism { paths: [p1, p2, p3] }));
                }
            }
        }
        None
    })
}

/// Shortest path from some source to some target with internal vertices in
/// `inner`; sources and targets are never internal.
fn multi_source_path(g: &Graph, sources: &[usize], is_target: &dyn Fn(usize) -> bool, inner: &[bool]) -> Option<Vec<usize>> {
    let n = g.n();
    let mut prev = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    let mut queue = VecDeque::new();
    for &s in sources {
        seen[s] = true;
        queue.push_back(s);
    }
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if seen[w] {
                continue;
            }
            if is_target(w) {
                let mut path = vec![w, u];
                let mut cur = u;
                while prev[cur] != usize::MAX {
                    cur = prev[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            if inner[w] {
                seen[w] = true;
                prev[w] = u;
                queue.push_back(w);
            }
        }
    }
    None
}

/// Induced cube search by backtracking over the eight roles.
fn find_cube(g: &Graph) -> Option<PatternWitness> {
    let cube = crate::synthesis::families::cube();
    // role order: 0 then its neighbours, then the rest (each has an earlier neighbour)
    let order = bfs_order(&cube, 0);
    let mut map = [usize::MAX; 8];
    let mut used = vec![false; g.n()];
    if cube_extend(g, &cube, &order, 0, &mut map, &mut used) {
        Some(witness(PatternKind::Cube, Structure::Cube { map }))
    } else {
        None
    }
}

fn bfs_order(g: &Graph, s: usize) -> Vec<usize> {
    let mut seen = vec![false; g.n()];
    let mut order = vec![s];
    seen[s] = true;
    let mut i = 0;
    while i < order.len() {
        let u = order[i];
        i += 1;
        for &w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                order.push(w);
            }
        }
    }
    order
}

fn cube_extend(g: &Graph, cube: &Graph, order: &[usize], i: usize, map: &mut [usize; 8], used: &mut [bool]) -> bool {
    if i == order.len() {
        return true;
    }
    let r = order[i];
    let candidates: Vec<usize> = match cube.neighbors(r).iter().find(|&&q| map[q] != usize::MAX) {
        Some(&q) => g.neighbors(map[q]).to_vec(),
        None => g.vertices().collect(),
    };
    for x in candidates {
        if used[x] || g.degree(x) < 3 {
            continue;
        }
        let ok = order[..i].iter().all(|&q| cube.has_edge(r, q) == g.has_edge(x, map[q]));
        if !ok {
            continue;
        }
        map[r] = x;
        used[x] = true;
        if cube_extend(g, cube, order, i + 1, map, used) {
            return true;
        }
        used[x] = false;
        map[r] = usize::MAX;
    }
    false
}

/// Checks that the witness describes an induced pattern of its kind in `g`,
/// including the absence of any edge the definition does not allow.
pub fn verify_witness(g: &Graph, w: &PatternWitness) -> bool {
    let n = g.n();
    if w.vertices.iter().any(|&v| v >= n) || !w.vertices.windows(2).all(|p| p[0] < p[1]) {
        return false;
    }
    if witness(w.kind, w.structure.clone()).vertices != w.vertices {
        return false;
    }
    match (&w.structure, w.kind) {
        (Structure::Triangle([a, b, c]), PatternKind::Triangle) => {
            w.vertices.len() == 3 && g.has_edge(*a, *b) && g.has_edge(*b, *c) && g.has_edge(*a, *c)
        }
        (Structure::Hole(h), k @ (PatternKind::Hole | PatternKind::EvenHole | PatternKind::OddHole)) => {
            g.is_hole(h)
                && match k {
                    PatternKind::EvenHole => h.len() % 2 == 0,
                    PatternKind::OddHole => h.len() % 2 == 1,
                    _ => true,
                }
        }
        (Structure::Theta { apexes: (a, b), paths }, PatternKind::Theta) => {
            let mut expected = Vec::new();
            for p in paths {
                if p.len() < 3 || p[0] != *a || p[p.len() - 1] != *b {
                    return false;
                }
                expected.extend(p.windows(2).map(|e| (e[0], e[1])));
            }
            let interior: usize = paths.iter().map(|p| p.len() - 2).sum();
            a != b && interior + 2 == w.vertices.len() && same_edges(g, &w.vertices, &expected)
        }
        (Structure::Wheel { rim, center }, k @ (PatternKind::Wheel | PatternKind::EvenWheel)) => {
            let spokes = rim.iter().filter(|&&v| g.has_edge(*center, v)).count();
            !rim.contains(center)
                && g.is_hole(rim)
                && spokes >= 3
                && (k == PatternKind::Wheel || spokes % 2 == 0)
        }
        (Structure::Wac { rim, centers: (x, y) }, k @ (PatternKind::Wac | PatternKind::Turtle | PatternKind::CWac)) => {
            let count = |c: usize| rim.iter().filter(|&&v| g.has_edge(c, v)).count();
            let base = x != y
                && !rim.contains(x)
                && !rim.contains(y)
                && g.has_edge(*x, *y)
                && g.is_hole(rim)
                && count(*x) >= 3
                && count(*y) >= 3;
            base && match k {
                PatternKind::Turtle => is_turtle(g, rim, *x, *y),
                PatternKind::CWac => !is_turtle(g, rim, *x, *y),
                _ => true,
            }
        }
        (Structure::Prism { paths }, PatternKind::Prism) => {
            if paths.iter().any(|p| p.len() < 2) {
                return false;
            }
            let total: usize = paths.iter().map(Vec::len).sum();
            if total != w.vertices.len() {
                return false;
            }
            let mut expected = Vec::new();
            for p in paths {
                expected.extend(p.windows(2).map(|e| (e[0], e[1])));
            }
            let ends = |f: fn(&Vec<usize>) -> usize| [f(&paths[0]), f(&paths[1]), f(&paths[2])];
            for t in [ends(|p| p[0]), ends(|p| p[p.len() - 1])] {
                expected.extend([(t[0], t[1]), (t[1], t[2]), (t[0], t[2])]);
            }
            same_edges(g, &w.vertices, &expected)
        }
        (Structure::Cube { map }, PatternKind::Cube) => {
            let cube = crate::synthesis::families::cube();
            let expected: Vec<(usize, usize)> = cube.edges().map(|(u, v)| (map[u], map[v])).collect();
            w.vertices.len() == 8 && same_edges(g, &w.vertices, &expected)
        }
        _ => false,
    }
}

/// Whether the edges of `g` inside `vs` are exactly `expected`.
fn same_edges(g: &Graph, vs: &[usize], expected: &[(usize, usize)]) -> bool {
    let mut want: Vec<(usize, usize)> = expected.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    want.sort_unstable();
    want.dedup();
    if want.len() != expected.len() {
        return false;
    }
    let mut have = Vec::new();
    for (i, &u) in vs.iter().enumerate() {
        for &v in &vs[i + 1..] {
            if g.has_edge(u, v) {
                have.push((u.min(v), u.max(v)));
            }
        }
    }
    have.sort_unstable();
    have == want
}

/// Class membership decided by brute force alone.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BruteVerdict {
    pub ttw_free: bool,
    pub even_wheel_free: bool,
    pub even_hole_free: bool,
    pub bipartite_theta_wac_free: bool,
}

/// The four class flags from pattern searches: (theta, triangle, wac)-free,
/// (theta, triangle, even wheel)-free, (even hole, triangle)-free and
/// bipartite (theta, wac)-free.
pub fn brute_force_verdict(g: &Graph) -> Result<BruteVerdict> {
    let free = |k: PatternKind| find_pattern(g, k).map(|w| w.is_none());
    let triangle = free(PatternKind::Triangle)?;
    let theta = free(PatternKind::Theta)?;
    let wac = free(PatternKind::Wac)?;
    Ok(BruteVerdict {
        ttw_free: triangle && theta && wac,
        even_wheel_free: triangle && theta && free(PatternKind::EvenWheel)?,
        even_hole_free: triangle && free(PatternKind::EvenHole)?,
        bipartite_theta_wac_free: is_bipartite(g).is_bipartite() && theta && wac,
    })
}

/// A hole through both `a` and `b`, if any.
pub fn hole_through(g: &Graph, a: usize, b: usize) -> Result<Option<Hole>> {
    hole_through_with(g, a, b, &OracleLimits::default())
}

pub fn hole_through_with(g: &Graph, a: usize, b: usize, limits: &OracleLimits) -> Result<Option<Hole>> {
    check_limit(g, "hole search", limits.pattern)?;
    for v in [a, b] {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
        }
    }
    Ok(first_hole_where(g, |h| (h.contains(&a) && h.contains(&b)).then(|| Hole(h.to_vec()))))
}

/// Either a proper 2-colouring or an odd cycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Bipartition {
    /// `colors[v]` is 0 or 1.
    Coloring(Vec<u8>),
    OddCycle(Vec<usize>),
}

impl Bipartition {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartition::Coloring(_))
    }
}

pub fn is_bipartite(g: &Graph) -> Bipartition {
    let n = g.n();
    let mut color = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for s in 0..n {
        if color[s] != u8::MAX {
            continue;
        }
        color[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if color[w] == u8::MAX {
                    color[w] = 1 - color[u];
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                } else if color[w] == color[u] {
                    // climb to the lowest common ancestor
                    let (mut x, mut y) = (u, w);
                    let mut left = vec![x];
                    let mut right = vec![y];
                    while depth[x] > depth[y] {
                        x = parent[x];
                        left.push(x);
                    }
                    while depth[y] > depth[x] {
                        y = parent[y];
                        right.push(y);
                    }
                    while x != y {
                        x = parent[x];
                        y = parent[y];
                        left.push(x);
                        right.push(y);
                    }
                    right.pop();
                    right.reverse();
                    left.extend(right);
                    return Bipartition::OddCycle(left);
                }
            }
        }
    }
    Bipartition::Coloring(color)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum KuratowskiKind {
    K5,
    K33,
}

/// A subdivision of K5 or K3,3: branch vertices and one path per branch pair
/// (per pair of opposite sides for K3,3).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KuratowskiWitness {
    pub kind: KuratowskiKind,
    pub branch: Vec<usize>,
    pub paths: Vec<Vec<usize>>,
}

pub fn is_planar(g: &Graph) -> bool {
    use rustworkx_core::petgraph::graph::UnGraph;
    let pg = UnGraph::<(), ()>::from_edges(g.edges().map(|(u, v)| (u as u32, v as u32)));
    rustworkx_core::planar::is_planar(&pg)
}

/// A Kuratowski subgraph of `g`, present exactly when `g` is non-planar.
pub fn kuratowski_witness(g: &Graph) -> Result<Option<KuratowskiWitness>> {
    kuratowski_witness_with(g, &OracleLimits::default())
}

pub fn kuratowski_witness_with(g: &Graph, limits: &OracleLimits) -> Result<Option<KuratowskiWitness>> {
    if g.n() > limits.kuratowski {
        return Err(Error::SizeLimit { what: "Kuratowski search", n: g.n(), limit: limits.kuratowski });
    }
    if is_planar(g) {
        return Ok(None);
    }
    // drop every edge whose removal keeps the graph non-planar
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    let mut i = 0;
    while i < edges.len() {
        let trial: Vec<(usize, usize)> = edges.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &e)| e).collect();
        let h = Graph::from_edges(g.n(), trial.iter().copied())?;
        if is_planar(&h) {
            i += 1;
        } else {
            edges = trial;
        }
    }
    let h = Graph::from_edges(g.n(), edges)?;
    let w = read_subdivision(&h).ok_or_else(|| Error::Precondition("minimal non-planar subgraph is not a Kuratowski graph".into()))?;
    debug_assert!(verify_kuratowski(g, &w));
    Ok(Some(w))
}

fn read_subdivision(h: &Graph) -> Option<KuratowskiWitness> {
    let branch: Vec<usize> = h.vertices().filter(|&v| h.degree(v) >= 3).collect();
    let kind = match (branch.len(), branch.iter().all(|&v| h.degree(v) == 4), branch.iter().all(|&v| h.degree(v) == 3)) {
        (5, true, _) => KuratowskiKind::K5,
        (6, _, true) => KuratowskiKind::K33,
        _ => return None,
    };
    let is_branch = |v: usize| h.degree(v) >= 3;
    let mut paths = Vec::new();
    for &b in &branch {
        for &first in h.neighbors(b) {
            let mut path = vec![b, first];
            let mut prev = b;
            let mut cur = first;
            while !is_branch(cur) {
                let next = *h.neighbors(cur).iter().find(|&&w| w != prev)?;
                prev = cur;
                cur = next;
                path.push(cur);
            }
            if b < cur {
                paths.push(path);
            }
        }
    }
    paths.sort();
    Some(KuratowskiWitness { kind, branch, paths })
}

/// Checks a Kuratowski witness against `g`: internally disjoint paths of
/// `g` joining the right branch pairs.
pub fn verify_kuratowski(g: &Graph, w: &KuratowskiWitness) -> bool {
    let nb = w.branch.len();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut used = vec![false; g.n()];
    for &b in &w.branch {
        if b >= g.n() || used[b] {
            return false;
        }
        used[b] = true;
    }
    for p in &w.paths {
        if p.len() < 2 || p.iter().any(|&v| v >= g.n()) || !p.windows(2).all(|e| g.has_edge(e[0], e[1])) {
            return false;
        }
        let (s, t) = (p[0], p[p.len() - 1]);
        if !w.branch.contains(&s) || !w.branch.contains(&t) || s == t {
            return false;
        }
        for &v in &p[1..p.len() - 1] {
            if used[v] {
                return false;
            }
            used[v] = true;
        }
        pairs.push((s.min(t), s.max(t)));
    }
    pairs.sort_unstable();
    let before = pairs.len();
    pairs.dedup();
    if pairs.len() != before {
        return false;
    }
    match w.kind {
        KuratowskiKind::K5 => nb == 5 && pairs.len() == 10,
        KuratowskiKind::K33 => {
            if nb != 6 || pairs.len() != 9 {
                return false;
            }
            // the pair graph must be K3,3: bipartite with both sides of size 3
            let idx = |v: usize| w.branch.iter().position(|&b| b == v).unwrap();
            let edges = pairs.iter().map(|&(s, t)| (idx(s), idx(t)));
            let k = Graph::from_edges(6, edges).expect("valid");
            k.is_isomorphic(&Graph::complete_bipartite(3, 3))
        }
    }
}
