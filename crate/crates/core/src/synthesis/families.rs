//! Small named graphs used throughout the tests and fixtures.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::glue::{glue, GluingRecipe};
use crate::basic::{DaisyDescriptor, Petal};
use crate::graph::{Graph, Hole};

/// The cube with its two colour classes: `0..4` and `4..8`, where `j` and
/// `4 + j` are antipodal.
pub fn cube_with_sides() -> (Graph, (Vec<usize>, Vec<usize>)) {
    let mut edges = Vec::new();
    for i in 0..4 {
        for j in 0..4 {
            if i != j {
                edges.push((i, 4 + j));
            }
        }
    }
    (Graph::from_edges(8, edges).unwrap(), ((0..4).collect(), (4..8).collect()))
}

pub fn cube() -> Graph {
    cube_with_sides().0
}

/// Rim `0..k` in cyclic order, centre `k` adjacent to the listed rim
/// vertices.
pub fn wheel(k: usize, spokes: &[usize]) -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    edges.extend(spokes.iter().map(|&s| (s, k)));
    Graph::from_edges(k + 1, edges).unwrap()
}

/// A p-cycle on `0..p` and a q-cycle through 0 and `p..p+q-1`.
pub fn cycles_sharing_vertex(p: usize, q: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..p).map(|i| (i, (i + 1) % p)).collect();
    let second: Vec<usize> = std::iter::once(0).chain(p..p + q - 1).collect();
    edges.extend((0..q).map(|i| (second[i], second[(i + 1) % q])));
    Graph::from_edges(p + q - 1, edges).unwrap()
}

/// A p-cycle on `0..p` and a q-cycle through the edge 0-1.
pub fn cycles_sharing_edge(p: usize, q: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..p).map(|i| (i, (i + 1) % p)).collect();
    let second: Vec<usize> = [1, 0].into_iter().chain(p..p + q - 2).collect();
    edges.extend((1..q).map(|i| (second[i], second[(i + 1) % q])));
    Graph::from_edges(p + q - 2, edges).unwrap()
}

/// The daisy on hole `0..k` with petals given as
/// `(centre index, petal length, spoke positions within the petal)`.
/// Petal vertices are numbered after the hole, petal by petal. The result
/// is not checked; see [`crate::basic::verify_daisy`].
pub fn daisy(k: usize, petals: &[(usize, usize, &[usize])]) -> (Graph, DaisyDescriptor) {
    let mut edges: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    let mut next = k;
    let mut ps = Vec::new();
    for &(center, len, spokes) in petals {
        let path: Vec<usize> = (next..next + len).collect();
        next += len;
        edges.extend(path.windows(2).map(|w| (w[0], w[1])));
        edges.push(((center + k - 1) % k, path[0]));
        edges.push(((center + 1) % k, path[len - 1]));
        edges.extend(spokes.iter().map(|&s| (center, path[s])));
        ps.push(Petal { center, spokes: spokes.iter().map(|&s| path[s]).collect(), path });
    }
    let g = Graph::from_edges(next, edges).unwrap();
    (g, DaisyDescriptor { hole: Hole((0..k).collect()), petals: ps })
}

/// The full k-daisy whose petals are `x m y` with `m` the only spoke.
pub fn full_daisy(k: usize) -> (Graph, DaisyDescriptor) {
    let petals: Vec<(usize, usize, &[usize])> = (0..k).map(|i| (i, 3, &[1usize][..])).collect();
    daisy(k, &petals)
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, edges).unwrap()
}

/// Two copies of the wheel on C6 with spokes 0, 2, 4 glued along a proper
/// 2-separator (rim vertices 0 and 2 of each).
pub fn two_wheels_on_2_separator() -> Graph {
    let w = wheel(6, &[0, 2, 4]);
    glue(&GluingRecipe::TwoSep { gx: w.clone(), gy: w, q: vec![0, 1, 2], p: vec![0, 1, 2] }).unwrap()
}

/// Erdős–Rényi `G(n, p)` from a seed.
pub fn random_graph(seed: u64, n: usize, p: f64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basic::verify_daisy;

    #[test]
    fn family_shapes() {
        let (c, (a, b)) = cube_with_sides();
        assert_eq!(c.edge_count(), 12);
        for (&x, &y) in a.iter().zip(&b) {
            assert!(!c.has_edge(x, y));
        }
        assert_eq!(cycles_sharing_vertex(5, 4).n(), 8);
        let e = cycles_sharing_edge(5, 5);
        assert_eq!((e.n(), e.edge_count()), (8, 9));
        assert_eq!(petersen().edge_count(), 15);
        let (g, d) = daisy(6, &[(1, 3, &[1]), (2, 5, &[1, 3])]);
        assert!(verify_daisy(&g, &d));
        assert_eq!(two_wheels_on_2_separator().n(), 10);
    }
}
