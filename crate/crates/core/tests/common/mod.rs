#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ttwfree::synthesis::{random_member, random_member_with, GeneratorConfig, Subclass};
use ttwfree::Graph;

/// Exact treewidth by dynamic programming over vertex subsets: the best
/// elimination ordering, where eliminating `v` after the set `S` costs the
/// number of outside vertices reachable from `v` through `S`.
pub fn brute_treewidth(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 16, "subset DP is for small graphs");
    if g.edge_count() == 0 {
        return 0;
    }
    let full = (1usize << n) - 1;
    let q = |s: usize, v: usize| -> usize {
        let mut seen = 1usize << v;
        let mut stack = vec![v];
        let mut count = 0;
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if seen >> w & 1 == 1 {
                    continue;
                }
                seen |= 1 << w;
                if s >> w & 1 == 1 {
                    stack.push(w);
                } else {
                    count += 1;
                }
            }
        }
        count
    };
    let mut tw = vec![usize::MAX; full + 1];
    tw[0] = 0;
    for s in 1..=full {
        let mut best = usize::MAX;
        for v in 0..n {
            if s >> v & 1 == 1 {
                let rest = s & !(1 << v);
                best = best.min(tw[rest].max(q(rest, v)));
            }
        }
        tw[s] = best;
    }
    tw[full]
}

/// Toggles `k` random vertex pairs.
pub fn perturb(g: &Graph, seed: u64, k: usize) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut h = g.clone();
    if g.n() < 2 {
        return h;
    }
    for _ in 0..k {
        let u = rng.gen_range(0..g.n());
        let mut v = rng.gen_range(0..g.n() - 1);
        if v >= u {
            v += 1;
        }
        h = h.toggle_edge(u, v).unwrap();
    }
    h
}

pub fn subclass_of(seed: u64) -> Option<Subclass> {
    match seed % 4 {
        0 => None,
        1 => Some(Subclass::EvenWheelFree),
        2 => Some(Subclass::EvenHoleFree),
        _ => Some(Subclass::Bipartite),
    }
}

/// A member with `lo..=hi` vertices, cycling through the subclasses.
pub fn member(seed: u64, lo: usize, hi: usize) -> Graph {
    let size = lo + (seed as usize).wrapping_mul(7) % (hi - lo + 1);
    random_member(seed, size, subclass_of(seed)).unwrap()
}

/// An atomic member of roughly `size` vertices.
pub fn atomic_member(seed: u64, size: usize) -> Graph {
    let cfg = GeneratorConfig { atomic: true, ..GeneratorConfig::with_subclass(subclass_of(seed)) };
    random_member_with(seed, size, &cfg).unwrap().graph
}
