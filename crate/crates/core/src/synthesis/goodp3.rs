//! Good P3s: `acb` is good when no `ab`-path avoiding `c` has an internal
//! vertex adjacent to `c`.

use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracles::{find_pattern_with, for_each_hole, OracleLimits, PatternKind};
use crate::separators::find_clique_separator;

/// Exhaustive search is limited to this many vertices.
pub const ENUMERATION_LIMIT: usize = 32;
/// The hole enumeration behind the characterisation is limited to this
/// many vertices.
pub const CHARACTERIZATION_LIMIT: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GoodP3Strategy {
    /// Search every induced `ab`-path of `g \ c`.
    Enumeration,
    /// Hole through `acb`, no wheel centred at `c` through `a` and `b`, no
    /// wheel through `acb` centred at a neighbour of `c`. Needs an atomic
    /// (theta, triangle)-free graph.
    Characterization,
}

pub fn is_good_p3(g: &Graph, a: usize, c: usize, b: usize, strategy: GoodP3Strategy) -> Result<bool> {
    let n = g.n();
    for v in [a, c, b] {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
    }
    if !g.is_induced_path(&[a, c, b]) {
        return Err(Error::Precondition(format!("{a} {c} {b} is not an induced path")));
    }
    match strategy {
        GoodP3Strategy::Enumeration => {
            if n > ENUMERATION_LIMIT {
                return Err(Error::SizeLimit { what: "good P3 enumeration", n, limit: ENUMERATION_LIMIT });
            }
            Ok(!bad_path_exists(g, a, c, b))
        }
        GoodP3Strategy::Characterization => characterize(g, a, c, b),
    }
}

/// Whether some induced `ab`-path of `g \ c` has an internal neighbour of
/// `c`.
fn bad_path_exists(g: &Graph, a: usize, c: usize, b: usize) -> bool {
    struct Search<'a> {
        g: &'a Graph,
        b: usize,
        c: usize,
        on_path: Vec<bool>,
        // number of path vertices, other than the last one, adjacent to v
        blocked: Vec<u32>,
    }
    impl Search<'_> {
        fn extend(&mut self, last: usize, hits: usize) -> bool {
            let g = self.g;
            for &w in g.neighbors(last) {
                if self.on_path[w] || self.blocked[w] > 0 {
                    continue;
                }
                if w == self.b {
                    if hits > 0 {
                        return true;
                    }
                    continue;
                }
                for &u in g.neighbors(last) {
                    self.blocked[u] += 1;
                }
                self.on_path[w] = true;
                let found = self.extend(w, hits + usize::from(g.has_edge(w, self.c)));
                self.on_path[w] = false;
                for &u in g.neighbors(last) {
                    self.blocked[u] -= 1;
                }
                if found {
                    return true;
                }
            }
            false
        }
    }
    let mut s = Search { g, b, c, on_path: vec![false; g.n()], blocked: vec![0; g.n()] };
    s.on_path[a] = true;
    s.on_path[c] = true;
    s.extend(a, 0)
}

fn characterize(g: &Graph, a: usize, c: usize, b: usize) -> Result<bool> {
    Ok(good_p3_conditions(g, a, c, b)?.iter().all(|&x| x))
}

/// The three conditions of the characterisation, in order: a hole goes
/// through `acb`; no wheel `(H, c)` has `a, b` in `H`; no wheel `(H, c')`
/// with `c'` adjacent to `c` has `a, c, b` in `H`.
pub fn good_p3_conditions(g: &Graph, a: usize, c: usize, b: usize) -> Result<[bool; 3]> {
    let n = g.n();
    if n > CHARACTERIZATION_LIMIT {
        return Err(Error::SizeLimit { what: "good P3 characterization", n, limit: CHARACTERIZATION_LIMIT });
    }
    if !g.is_induced_path(&[a, c, b]) {
        return Err(Error::Precondition(format!("{a} {c} {b} is not an induced path")));
    }
    if find_clique_separator(g).is_some() {
        return Err(Error::Precondition("the graph is not atomic".into()));
    }
    let limits = OracleLimits { pattern: CHARACTERIZATION_LIMIT, ..OracleLimits::default() };
    for kind in [PatternKind::Triangle, PatternKind::Theta] {
        if find_pattern_with(g, kind, &limits)?.is_some() {
            return Err(Error::Precondition(format!("the graph contains a {kind}")));
        }
    }
    let all: Vec<usize> = g.vertices().collect();
    let hole = g.shortest_path_within(a, b, &all, Some(c)).is_some();
    let (mut centre_ok, mut spoke_ok) = (true, true);
    let _ = for_each_hole(g, |h| {
        let has = |v: usize| h.contains(&v);
        let rim_count = |x: usize| h.iter().filter(|&&v| g.has_edge(x, v)).count();
        if has(a) && has(b) && !has(c) && rim_count(c) >= 3 {
            centre_ok = false;
        }
        if has(a) && has(b) && has(c) && g.neighbors(c).iter().any(|&d| !has(d) && rim_count(d) >= 3) {
            spoke_ok = false;
        }
        if centre_ok || spoke_ok {
            ControlFlow::Continue(())
        } else {
            ControlFlow::Break(())
        }
    });
    Ok([hole, centre_ok, spoke_ok])
}

/// Adds the edge `cc'` between two non-adjacent degree-2 vertices. Returns
/// the new graph and the neighbours `a < b` of `c` in `g`. The graph has a
/// hole through `c` and `c'` exactly when `a c b` is not good in the result.
pub fn goodp3_gadget(g: &Graph, c: usize, c2: usize) -> Result<(Graph, usize, usize)> {
    let n = g.n();
    for v in [c, c2] {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        if g.degree(v) != 2 {
            return Err(Error::Precondition(format!("vertex {v} must have degree 2")));
        }
    }
    if c == c2 || g.has_edge(c, c2) {
        return Err(Error::Precondition("c and c' must be distinct and non-adjacent".into()));
    }
    let (a, b) = (g.neighbors(c)[0], g.neighbors(c)[1]);
    if g.has_edge(a, b) {
        return Err(Error::Precondition("the neighbours of c must be non-adjacent".into()));
    }
    Ok((g.with_edge(c, c2)?, a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::hole_through;
    use crate::synthesis::families;
    use GoodP3Strategy::*;

    #[test]
    fn pentagon_and_wheel() {
        let c5 = Graph::cycle(5);
        assert_eq!(is_good_p3(&c5, 0, 1, 2, Enumeration), Ok(true));
        assert_eq!(is_good_p3(&c5, 0, 1, 2, Characterization), Ok(true));
        let w = families::wheel(6, &[0, 2, 4]);
        assert_eq!(is_good_p3(&w, 0, 6, 2, Enumeration), Ok(false));
        assert_eq!(is_good_p3(&w, 0, 6, 2, Characterization), Ok(false));
        assert!(is_good_p3(&w, 0, 1, 3, Enumeration).is_err());
    }

    #[test]
    fn hole_condition_is_needed() {
        // two petals centred at hole vertices 1 and 2: some P3 passes both
        // wheel conditions without lying on a hole, and is not good
        let (g, _) = families::daisy(6, &[(1, 3, &[1]), (2, 3, &[1])]);
        let mut witnessed = false;
        for c in g.vertices() {
            for &a in g.neighbors(c) {
                for &b in g.neighbors(c) {
                    if a < b && !g.has_edge(a, b) {
                        let e = is_good_p3(&g, a, c, b, Enumeration).unwrap();
                        assert_eq!(e, is_good_p3(&g, a, c, b, Characterization).unwrap(), "{a} {c} {b}");
                        if good_p3_conditions(&g, a, c, b).unwrap() == [false, true, true] {
                            assert!(!e);
                            witnessed = true;
                        }
                    }
                }
            }
        }
        assert!(witnessed);
    }

    #[test]
    fn gadget_examples() {
        let c6 = Graph::cycle(6);
        let (g2, a, b) = goodp3_gadget(&c6, 0, 3).unwrap();
        assert_eq!((a, b), (1, 5));
        assert!(hole_through(&c6, 0, 3).unwrap().is_some());
        assert_eq!(is_good_p3(&g2, a, 0, b, Enumeration), Ok(false));

        let g = families::cycles_sharing_vertex(4, 4);
        let (g2, a, b) = goodp3_gadget(&g, 1, 5).unwrap();
        assert!(hole_through(&g, 1, 5).unwrap().is_none());
        assert_eq!(is_good_p3(&g2, a, 1, b, Enumeration), Ok(true));

        assert!(goodp3_gadget(&c6, 0, 1).is_err());
    }
}
