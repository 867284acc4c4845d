//! Simple undirected graphs on dense vertex ids and the primitive queries
//! every other module is built on.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A simple undirected graph on the vertices `0..n`.
///
/// Adjacency lists are kept sorted and deduplicated; a value is never
/// mutated after construction.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edges: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], edges: 0 }
    }

    /// Builds a graph from an edge list. Repeated edges are merged; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { vertex: u.max(v), n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut count = 0;
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
            count += list.len();
        }
        Ok(Graph { adj, edges: count / 2 })
    }

    /// Cycle `0 - 1 - ... - (n-1) - 0`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_edges(n, edges).expect("valid clique")
    }

    pub fn complete_bipartite(p: usize, q: usize) -> Self {
        let edges = (0..p).flat_map(|u| (0..q).map(move |v| (u, p + v)));
        Graph::from_edges(p + q, edges).expect("valid biclique")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().copied().filter(move |&v| u < v).map(move |v| (u, v)))
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Graph with one extra edge.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        Graph::from_edges(self.n(), self.edges().chain(std::iter::once((u, v))))
    }

    /// Graph with the edge `uv` added if absent and removed if present.
    pub fn toggle_edge(&self, u: usize, v: usize) -> Result<Self> {
        if self.has_edge(u, v) {
            let (a, b) = (u.min(v), u.max(v));
            Graph::from_edges(self.n(), self.edges().filter(|&e| e != (a, b)))
        } else {
            self.with_edge(u, v)
        }
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let edges = self.edges().chain(other.edges().map(|(u, v)| (u + shift, v + shift)));
        Graph::from_edges(self.n() + other.n(), edges).expect("valid union")
    }

    /// Renumbers the vertices: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n() {
            return Err(Error::InvalidInput("permutation length differs from vertex count".into()));
        }
        Graph::from_edges(self.n(), self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    /// Subgraph induced by `s`, together with the map from new ids to old ids.
    /// New ids follow the sorted order of `s`.
    pub fn induced_subgraph(&self, s: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let n = self.n();
        let mut keep: Vec<usize> = s.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if let Some(&v) = keep.iter().find(|&&v| v >= n) {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        let mut index = vec![usize::MAX; n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut adj = vec![Vec::new(); keep.len()];
        let mut count = 0;
        for (i, &v) in keep.iter().enumerate() {
            for &w in &self.adj[v] {
                if index[w] != usize::MAX {
                    adj[i].push(index[w]);
                }
            }
            count += adj[i].len();
        }
        Ok((Graph { adj, edges: count / 2 }, keep))
    }

    /// Induced subgraph on everything except `removed`.
    pub fn without(&self, removed: &[usize]) -> (Graph, Vec<usize>) {
        let mut gone = vec![false; self.n()];
        for &v in removed {
            gone[v] = true;
        }
        let keep: Vec<usize> = (0..self.n()).filter(|&v| !gone[v]).collect();
        self.induced_subgraph(&keep).expect("ids in range")
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        self.components_avoiding(&vec![false; self.n()])
    }

    /// Components of the graph obtained by deleting every vertex flagged in
    /// `removed`.
    pub fn components_avoiding(&self, removed: &[bool]) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = removed.to_vec();
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut comp = vec![s];
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.connected_components().len() == 1
    }

    /// Number of components after deleting `removed`.
    pub fn count_components_avoiding(&self, removed: &[bool]) -> usize {
        self.components_avoiding(removed).len()
    }

    /// Articulation points of the graph after deleting the flagged vertices,
    /// sorted ascending.
    pub fn articulation_points_avoiding(&self, removed: &[bool]) -> Vec<usize> {
        let n = self.n();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut is_cut = vec![false; n];
        let mut time = 0;
        // iterative DFS: (vertex, parent, next neighbour index)
        let mut stack: Vec<(usize, usize, usize)> = Vec::new();
        for root in 0..n {
            if removed[root] || disc[root] != usize::MAX {
                continue;
            }
            disc[root] = time;
            low[root] = time;
            time += 1;
            let mut root_children = 0;
            stack.push((root, usize::MAX, 0));
            while let Some(&mut (u, parent, ref mut idx)) = stack.last_mut() {
                if *idx < self.adj[u].len() {
                    let w = self.adj[u][*idx];
                    *idx += 1;
                    if removed[w] || w == parent {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        if u == root {
                            root_children += 1;
                        }
                        stack.push((w, u, 0));
                    } else {
                        low[u] = low[u].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[u]);
                        if parent != root && low[u] >= disc[parent] {
                            is_cut[parent] = true;
                        }
                    }
                }
            }
            if root_children >= 2 {
                is_cut[root] = true;
            }
        }
        (0..n).filter(|&v| is_cut[v]).collect()
    }

    /// Shortest `ab`-path whose internal vertices lie in `allowed` and, when
    /// `avoid_neighbors_of` is `Some(c)`, are not adjacent to `c`. Ties are
    /// broken towards the lexicographically smallest vertex sequence. The
    /// result is always an induced path.
    pub fn shortest_path_within(
        &self,
        a: usize,
        b: usize,
        allowed: &[usize],
        avoid_neighbors_of: Option<usize>,
    ) -> Option<InducedPath> {
        let n = self.n();
        let mut ok = vec![false; n];
        for &v in allowed {
            ok[v] = true;
        }
        if let Some(c) = avoid_neighbors_of {
            ok[c] = false;
            for &w in &self.adj[c] {
                ok[w] = false;
            }
        }
        ok[a] = false;
        ok[b] = false;
        self.shortest_path_mask(a, b, &ok)
    }

    /// Same as [`Graph::shortest_path_within`] with the internal vertex set
    /// given as a membership mask (endpoints are handled separately).
    pub fn shortest_path_mask(&self, a: usize, b: usize, inner: &[bool]) -> Option<InducedPath> {
        if a == b {
            return Some(InducedPath(vec![a]));
        }
        if self.has_edge(a, b) {
            return Some(InducedPath(vec![a, b]));
        }
        // distances to b through allowed interior vertices
        let n = self.n();
        let mut dist = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        dist[b] = 0;
        queue.push_back(b);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX && (inner[w] || w == a) {
                    dist[w] = dist[u] + 1;
                    if w != a {
                        queue.push_back(w);
                    }
                }
            }
        }
        if dist[a] == usize::MAX {
            return None;
        }
        let mut path = vec![a];
        let mut cur = a;
        while cur != b {
            let next = self.adj[cur]
                .iter()
                .copied()
                .filter(|&w| (w == b || (inner[w] && w != a)) && dist[w] != usize::MAX && dist[w] + 1 == dist[cur])
                .min()
                .expect("BFS layers are consistent");
            path.push(next);
            cur = next;
        }
        Some(InducedPath(path))
    }

    /// Whether `seq` is an induced path (consecutive vertices adjacent, all
    /// other pairs non-adjacent, no repetition).
    pub fn is_induced_path(&self, seq: &[usize]) -> bool {
        if seq.is_empty() || !distinct(seq, self.n()) {
            return false;
        }
        for i in 0..seq.len() {
            for j in i + 1..seq.len() {
                if self.has_edge(seq[i], seq[j]) != (j == i + 1) {
                    return false;
                }
            }
        }
        true
    }

    /// Whether `seq` is a hole: at least four distinct vertices, cyclically
    /// consecutive ones adjacent and no chord.
    pub fn is_hole(&self, seq: &[usize]) -> bool {
        let k = seq.len();
        if k < 4 || !distinct(seq, self.n()) {
            return false;
        }
        for i in 0..k {
            for j in i + 1..k {
                let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                if self.has_edge(seq[i], seq[j]) != consecutive {
                    return false;
                }
            }
        }
        true
    }

    /// Whether the whole graph is a hole (connected, 2-regular, `n >= 4`).
    pub fn is_hole_graph(&self) -> bool {
        self.n() >= 4 && self.adj.iter().all(|l| l.len() == 2) && self.is_connected()
    }

    /// Cyclic order of a graph that is a hole, starting at vertex 0 and
    /// continuing towards its smaller neighbour.
    pub fn hole_order(&self) -> Option<Vec<usize>> {
        if !self.is_hole_graph() {
            return None;
        }
        let mut order = vec![0];
        let mut prev = 0;
        let mut cur = self.adj[0][0];
        while cur != 0 {
            order.push(cur);
            let next = if self.adj[cur][0] == prev { self.adj[cur][1] } else { self.adj[cur][0] };
            prev = cur;
            cur = next;
        }
        Some(order)
    }

    /// Whether the whole graph is an induced path with ends `a` and `b`.
    pub fn is_path_between(&self, a: usize, b: usize) -> bool {
        let n = self.n();
        if n == 1 {
            return a == b;
        }
        if a == b || self.edges != n - 1 || !self.is_connected() {
            return false;
        }
        self.degree(a) == 1 && self.degree(b) == 1 && self.adj.iter().all(|l| l.len() <= 2)
    }

    /// Tests whether two graphs are isomorphic by backtracking with degree
    /// pruning. Intended for small graphs.
    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        self.isomorphism(other).is_some()
    }

    /// An isomorphism `self -> other`, if any, as a vertex map.
    pub fn isomorphism(&self, other: &Graph) -> Option<Vec<usize>> {
        let n = self.n();
        if n != other.n() || self.edges != other.edges {
            return None;
        }
        let mut d1: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        let mut d2: Vec<usize> = other.adj.iter().map(Vec::len).collect();
        d1.sort_unstable();
        d2.sort_unstable();
        if d1 != d2 {
            return None;
        }
        // order vertices of self so every vertex after the first of its
        // component has an earlier neighbour
        let mut order = Vec::with_capacity(n);
        let mut placed = vec![false; n];
        for comp in self.connected_components() {
            let start = *comp.iter().max_by_key(|&&v| (self.degree(v), std::cmp::Reverse(v))).unwrap();
            let mut queue = VecDeque::from([start]);
            placed[start] = true;
            while let Some(u) = queue.pop_front() {
                order.push(u);
                for &w in &self.adj[u] {
                    if !placed[w] {
                        placed[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        if self.extend_iso(other, &order, 0, &mut map, &mut used) {
            Some(map)
        } else {
            None
        }
    }

    fn extend_iso(&self, other: &Graph, order: &[usize], i: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        if i == order.len() {
            return true;
        }
        let u = order[i];
        // candidates: neighbours of an already-mapped neighbour, else anything
        let anchor = self.adj[u].iter().copied().find(|&w| map[w] != usize::MAX);
        let candidates: Vec<usize> = match anchor {
            Some(w) => other.adj[map[w]].clone(),
            None => (0..other.n()).collect(),
        };
        for x in candidates {
            if used[x] || other.degree(x) != self.degree(u) {
                continue;
            }
            let consistent = order[..i].iter().all(|&p| self.has_edge(u, p) == other.has_edge(x, map[p]));
            if !consistent {
                continue;
            }
            map[u] = x;
            used[x] = true;
            if self.extend_iso(other, order, i + 1, map, used) {
                return true;
            }
            map[u] = usize::MAX;
            used[x] = false;
        }
        false
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

fn distinct(seq: &[usize], n: usize) -> bool {
    let mut seen = vec![false; n];
    for &v in seq {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

/// A sequence of vertices forming an induced path in some host graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InducedPath(pub Vec<usize>);

impl InducedPath {
    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    /// Number of edges.
    pub fn length(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn interior(&self) -> &[usize] {
        if self.0.len() <= 2 {
            &[]
        } else {
            &self.0[1..self.0.len() - 1]
        }
    }

    pub fn first(&self) -> usize {
        self.0[0]
    }

    pub fn last(&self) -> usize {
        *self.0.last().expect("non-empty path")
    }
}

/// A chordless cycle of length at least four, stored in cyclic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Hole(pub Vec<usize>);

impl Hole {
    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Rotation starting at the smallest vertex, oriented towards the
    /// smaller of its two neighbours.
    pub fn canonical(&self) -> Hole {
        let k = self.0.len();
        let (pos, _) = self.0.iter().enumerate().min_by_key(|&(_, v)| *v).unwrap();
        let next = self.0[(pos + 1) % k];
        let prev = self.0[(pos + k - 1) % k];
        let seq = if next < prev {
            (0..k).map(|i| self.0[(pos + i) % k]).collect()
        } else {
            (0..k).map(|i| self.0[(pos + k - i) % k]).collect()
        };
        Hole(seq)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::synthesis::families;
    use proptest::prelude::*;

    #[test]
    fn induced_subgraph_examples() {
        let c5 = Graph::cycle(5);
        let (g, map) = c5.induced_subgraph(&[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(g, c5);
        assert_eq!(map, vec![0, 1, 2, 3, 4]);

        let (p, _) = c5.induced_subgraph(&[0, 1, 2]).unwrap();
        assert!(p.is_path_between(0, 2));
        assert_eq!(p.edge_count(), 2);

        let (cube, side) = families::cube_with_sides();
        let (g, _) = cube.induced_subgraph(&side.0).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 0);

        assert!(matches!(c5.induced_subgraph(&[0, 7]), Err(Error::VertexOutOfRange { vertex: 7, .. })));
    }

    #[test]
    fn component_examples() {
        assert_eq!(Graph::cycle(5).connected_components(), vec![vec![0, 1, 2, 3, 4]]);
        let g = Graph::cycle(5).disjoint_union(&Graph::cycle(4));
        let sizes: Vec<usize> = g.connected_components().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![5, 4]);
        let (cube, _) = families::cube_with_sides();
        let (g, _) = cube.without(&[3]);
        assert_eq!(g.connected_components().len(), 1);
        assert_eq!(g.n(), 7);
    }

    #[test]
    fn shortest_path_examples() {
        let c6 = Graph::cycle(6);
        let all: Vec<usize> = (0..6).collect();
        assert_eq!(c6.shortest_path_within(0, 3, &all, None).unwrap().0, vec![0, 1, 2, 3]);

        // rim 0..5, centre 6 on 0, 2, 4
        let w = families::wheel(6, &[0, 2, 4]);
        let p = w.shortest_path_within(0, 2, &[1, 3, 4, 5], Some(6)).unwrap();
        assert_eq!(p.0, vec![0, 1, 2]);
        assert_eq!(w.shortest_path_within(0, 4, &[5], Some(6)).unwrap().0, vec![0, 5, 4]);
        assert!(w.shortest_path_within(0, 4, &[1, 2, 3], Some(6)).is_none());
    }

    #[test]
    fn articulation_points() {
        let g = families::cycles_sharing_vertex(5, 5);
        assert_eq!(g.articulation_points_avoiding(&vec![false; g.n()]), vec![0]);
        assert!(Graph::cycle(6).articulation_points_avoiding(&[false; 6]).is_empty());
        assert_eq!(Graph::path(4).articulation_points_avoiding(&[false; 4]), vec![1, 2]);
    }

    #[test]
    fn hole_order_and_canonical() {
        let g = Graph::cycle(7).permuted(&[3, 0, 6, 1, 5, 2, 4]).unwrap();
        let order = g.hole_order().unwrap();
        assert!(g.is_hole(&order));
        let h = Hole(vec![4, 2, 9, 7]).canonical();
        assert_eq!(h.0, vec![2, 4, 7, 9]);
    }

    #[test]
    fn isomorphism_small() {
        let g = Graph::cycle(6);
        let h = g.permuted(&[2, 4, 0, 5, 1, 3]).unwrap();
        assert!(g.is_isomorphic(&h));
        assert!(!g.is_isomorphic(&Graph::cycle(3).disjoint_union(&Graph::cycle(3))));
        let (cube, _) = families::cube_with_sides();
        assert!(!cube.is_isomorphic(&families::wheel(6, &[0, 2, 4]).disjoint_union(&Graph::empty(1))));
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[k] {
                            edges.push((u, v));
                        }
                        k += 1;
                    }
                }
                Graph::from_edges(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn shortest_paths_are_induced(g in arb_graph(10), a in 0usize..10, b in 0usize..10) {
            let (a, b) = (a % g.n(), b % g.n());
            let all: Vec<usize> = g.vertices().collect();
            if let Some(p) = g.shortest_path_within(a, b, &all, None) {
                prop_assert!(g.is_induced_path(&p.0));
                prop_assert_eq!(p.first(), a);
                prop_assert_eq!(p.last(), b);
            }
        }

        #[test]
        fn components_refine_under_restriction(g in arb_graph(10), mask in any::<u16>()) {
            let s: Vec<usize> = g.vertices().filter(|&v| mask >> v & 1 == 1).collect();
            let (h, map) = g.induced_subgraph(&s).unwrap();
            let parent = g.connected_components();
            let owner = |v: usize| parent.iter().position(|c| c.contains(&v)).unwrap();
            for comp in h.connected_components() {
                let first = owner(map[comp[0]]);
                prop_assert!(comp.iter().all(|&v| owner(map[v]) == first));
            }
        }

        #[test]
        fn permuted_graphs_are_isomorphic(g in arb_graph(8), seed in any::<u64>()) {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let mut perm: Vec<usize> = g.vertices().collect();
            perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
            let h = g.permuted(&perm).unwrap();
            let iso = g.isomorphism(&h).unwrap();
            for (u, v) in g.edges() {
                prop_assert!(h.has_edge(iso[u], iso[v]));
            }
        }
    }
}
