//! Seeded random class members. A graph grows from one basic block by
//! repeatedly gluing a fresh basic block onto it along a clique, a proper
//! 2-separator or a proper P3-separator. Every output is re-checked by
//! [`analyze`]; a failed check is reported as an error, never retried.

use rand::distributions::WeightedIndex;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use super::families;
use super::glue::{glue, GluingRecipe};
use super::Subclass;
use crate::analysis::analyze;
use crate::basic::DaisyDescriptor;
use crate::decompose::find_ears;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::separators::find_clique_separator;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeamKind {
    Clique,
    TwoSep,
    P3,
}

#[derive(Clone, Debug)]
pub struct GeneratorConfig {
    pub subclass: Option<Subclass>,
    /// Only 2-separator and P3 gluings (the output is atomic); the size is
    /// then approximate.
    pub atomic: bool,
    /// Relative weights of hole, wheel, daisy (two or more petals) and cube
    /// blocks.
    pub block_weights: [u32; 4],
    /// Relative weights of clique, 2-separator and P3 gluings.
    pub seam_weights: [u32; 3],
    /// Largest hole of a sampled block.
    pub max_hole: usize,
    /// Largest sampled block.
    pub max_block: usize,
}

impl Default for GeneratorConfig {
    fn default() -> Self {
        GeneratorConfig {
            subclass: None,
            atomic: false,
            block_weights: [2, 3, 4, 1],
            seam_weights: [2, 3, 3],
            max_hole: 9,
            max_block: 30,
        }
    }
}

impl GeneratorConfig {
    pub fn with_subclass(subclass: Option<Subclass>) -> Self {
        GeneratorConfig { subclass, ..Self::default() }
    }
}

/// A generated member with the gluings that built it.
#[derive(Clone, Debug)]
pub struct Generated {
    pub graph: Graph,
    pub seams: Vec<SeamKind>,
}

/// A random member on exactly `size` vertices.
pub fn random_member(seed: u64, size: usize, subclass: Option<Subclass>) -> Result<Graph> {
    random_member_with(seed, size, &GeneratorConfig::with_subclass(subclass)).map(|g| g.graph)
}

pub fn random_member_with(seed: u64, size: usize, cfg: &GeneratorConfig) -> Result<Generated> {
    if size == 0 {
        return Err(Error::Precondition("target size must be at least 1".into()));
    }
    let mut gen = Gen { rng: ChaCha8Rng::seed_from_u64(seed), cfg, seams: Vec::new() };
    let graph = gen.run(size)?;
    verify(&graph, cfg)?;
    Ok(Generated { graph, seams: gen.seams })
}

fn verify(g: &Graph, cfg: &GeneratorConfig) -> Result<()> {
    let r = analyze(g)?;
    let ok = r.ttw_free
        && match cfg.subclass {
            None => true,
            Some(Subclass::EvenWheelFree) => r.even_wheel_free,
            Some(Subclass::EvenHoleFree) => r.even_hole_free,
            Some(Subclass::Bipartite) => r.bipartite_theta_wac_free,
        };
    if !ok {
        return Err(Error::InvalidRecipe(format!("generated graph failed verification: {:?}", g.edges().collect::<Vec<_>>())));
    }
    if cfg.atomic && find_clique_separator(g).is_some() {
        return Err(Error::InvalidRecipe("generated graph is not atomic".into()));
    }
    Ok(())
}

/// A fresh basic block; `daisy` is set for holes, wheels and daisies.
struct Block {
    graph: Graph,
    daisy: Option<DaisyDescriptor>,
}

struct Gen<'a> {
    rng: ChaCha8Rng,
    cfg: &'a GeneratorConfig,
    seams: Vec<SeamKind>,
}

impl Gen<'_> {
    fn min_hole(&self) -> usize {
        if self.cfg.subclass == Some(Subclass::EvenHoleFree) {
            5
        } else {
            4
        }
    }

    fn run(&mut self, size: usize) -> Result<Graph> {
        if size < self.min_hole() {
            if self.cfg.atomic {
                return Err(Error::Unsatisfiable(format!(
                    "no atomic member of this class has {size} vertices"
                )));
            }
            let mut g = Graph::empty(1);
            if size >= 2 {
                g = Graph::complete(2);
            }
            while g.n() < size {
                g = self.pendant(&g)?;
            }
            return Ok(g);
        }
        let mut g = self.start_block(size).graph;
        let mut two_sep_done = false;
        let mut stalls = 0;
        while g.n() < size && stalls < 40 {
            let remaining = size - g.n();
            let mut w = self.cfg.seam_weights;
            if self.cfg.atomic {
                w[0] = 0;
                if two_sep_done {
                    w[2] = 0;
                }
            }
            if w.iter().all(|&x| x == 0) {
                break;
            }
            let seam = match WeightedIndex::new(w).expect("weights").sample(&mut self.rng) {
                0 => SeamKind::Clique,
                1 => SeamKind::TwoSep,
                _ => SeamKind::P3,
            };
            let next = match seam {
                SeamKind::Clique => self.clique_step(&g, remaining)?,
                SeamKind::TwoSep => self.two_sep_step(&g, remaining)?,
                SeamKind::P3 => self.p3_step(&g, remaining)?,
            };
            match next {
                Some(h) => {
                    g = h;
                    two_sep_done |= seam == SeamKind::TwoSep;
                    self.seams.push(seam);
                    stalls = 0;
                }
                None => stalls += 1,
            }
        }
        if !self.cfg.atomic {
            while g.n() < size {
                g = self.pendant(&g)?;
            }
        }
        Ok(g)
    }

    fn pendant(&mut self, g: &Graph) -> Result<Graph> {
        let v = self.rng.gen_range(0..g.n());
        self.seams.push(SeamKind::Clique);
        glue(&GluingRecipe::Clique { gx: g.clone(), gy: Graph::complete(2), kx: vec![v], ky: vec![0] })
    }

    fn start_block(&mut self, size: usize) -> Block {
        let mut w = self.cfg.block_weights;
        if self.cfg.atomic && size.abs_diff(8) > 2 {
            w[3] = 0;
        }
        for _ in 0..20 {
            if let Some(b) = self.block(size, w) {
                return b;
            }
        }
        self.hole(size.min(self.cfg.max_hole.max(self.min_hole())))
    }

    /// Samples a block with at most `budget` vertices.
    fn block(&mut self, budget: usize, mut w: [u32; 4]) -> Option<Block> {
        let budget = budget.min(self.cfg.max_block);
        if self.cfg.subclass == Some(Subclass::EvenHoleFree) || budget < 8 {
            w[3] = 0;
        }
        if w.iter().all(|&x| x == 0) {
            return None;
        }
        match WeightedIndex::new(w).expect("weights").sample(&mut self.rng) {
            0 => self.daisy(budget, 0, 0),
            1 => self.daisy(budget, 1, 1),
            2 => self.daisy(budget, 2, usize::MAX),
            _ => Some(Block { graph: families::cube(), daisy: None }),
        }
    }

    fn hole(&mut self, k: usize) -> Block {
        let k = match self.cfg.subclass {
            Some(Subclass::EvenHoleFree) if k.is_multiple_of(2) => k - 1,
            Some(Subclass::Bipartite) if k % 2 == 1 => k - 1,
            _ => k,
        };
        let (graph, d) = families::daisy(k, &[]);
        Block { graph, daisy: Some(d) }
    }

    /// Sector lengths allowed by the subclass: odd for even-hole-free, even
    /// for bipartite.
    fn sector_len(&mut self) -> usize {
        match self.cfg.subclass {
            Some(Subclass::EvenHoleFree) => *[3, 3, 5].choose(&mut self.rng).unwrap(),
            Some(Subclass::Bipartite) => *[2, 2, 4].choose(&mut self.rng).unwrap(),
            _ => self.rng.gen_range(2..=4),
        }
    }

    /// Spokes per petal: odd unless even wheels are allowed.
    fn spoke_count(&mut self) -> usize {
        match self.cfg.subclass {
            Some(Subclass::EvenWheelFree | Subclass::EvenHoleFree) => *[1, 1, 3].choose(&mut self.rng).unwrap(),
            _ => self.rng.gen_range(1..=3),
        }
    }

    /// A daisy with between `lo` and `hi` petals and at most `budget`
    /// vertices.
    fn daisy(&mut self, budget: usize, lo: usize, hi: usize) -> Option<Block> {
        let kmin = self.min_hole();
        let kmax = self.cfg.max_hole.min(budget);
        let ks: Vec<usize> = (kmin..=kmax)
            .filter(|&k| match self.cfg.subclass {
                Some(Subclass::EvenHoleFree) => k % 2 == 1,
                Some(Subclass::Bipartite) => k % 2 == 0,
                _ => true,
            })
            .collect();
        let &k = ks.choose(&mut self.rng)?;
        let mut petals = self.rng.gen_range(lo..=hi.min(k).max(lo));
        // full daisies carry the width-4 cases, so draw them on purpose
        if hi >= k && self.rng.gen_bool(0.3) {
            petals = k;
        }
        if petals > k {
            return None;
        }
        let mut left = budget - k;
        let mut specs: Vec<(usize, usize, Vec<usize>)> = Vec::new();
        let first = self.rng.gen_range(0..k);
        for j in 0..petals {
            let mut s = self.spoke_count();
            let mut sectors: Vec<usize> = (0..=s).map(|_| self.sector_len()).collect();
            let mut len = sectors.iter().sum::<usize>() - 1;
            if len > left {
                // the smallest petal: one spoke between two short sectors
                let short = if self.cfg.subclass == Some(Subclass::EvenHoleFree) { 3 } else { 2 };
                s = 1;
                sectors = vec![short, short];
                len = 2 * short - 1;
                if len > left {
                    return None;
                }
            }
            left -= len;
            let mut spokes = Vec::new();
            let mut pos = 0;
            for l in &sectors[..s] {
                pos += l;
                spokes.push(pos - 1);
            }
            specs.push(((first + j) % k, len, spokes));
        }
        let petals: Vec<(usize, usize, &[usize])> = specs.iter().map(|(c, l, s)| (*c, *l, &s[..])).collect();
        let (graph, d) = families::daisy(k, &petals);
        Some(Block { graph, daisy: Some(d) })
    }

    fn clique_step(&mut self, g: &Graph, remaining: usize) -> Result<Option<Graph>> {
        // 0: disjoint union, 1: a vertex, 2: an edge
        let size = *[0, 1, 1, 2, 2].choose(&mut self.rng).unwrap();
        let kx: Vec<usize> = match size {
            0 => vec![],
            1 => vec![self.rng.gen_range(0..g.n())],
            _ => match g.edges().collect::<Vec<_>>().choose(&mut self.rng) {
                Some(&(u, v)) => vec![u, v],
                None => return Ok(None),
            },
        };
        let budget = remaining + size;
        let block = if budget >= 2 && self.rng.gen_bool(0.15) {
            Block { graph: Graph::complete(2), daisy: None }
        } else {
            match self.block(budget, self.cfg.block_weights) {
                Some(b) => b,
                None => return Ok(None),
            }
        };
        let gy = block.graph;
        let ky: Vec<usize> = match size {
            0 => vec![],
            1 => vec![self.rng.gen_range(0..gy.n())],
            _ => {
                let &(u, v) = gy.edges().collect::<Vec<_>>().choose(&mut self.rng).expect("blocks have edges");
                vec![u, v]
            }
        };
        if gy.n() - size > remaining {
            return Ok(None);
        }
        glue(&GluingRecipe::Clique { gx: g.clone(), gy, kx, ky }).map(Some)
    }

    /// Picks a random induced path of length at least 2 whose interior has
    /// degree 2, and whose length has the requested parity.
    fn thread(&mut self, g: &Graph, parity: Option<usize>) -> Option<Vec<usize>> {
        let mut chains = deg2_chains(g);
        chains.shuffle(&mut self.rng);
        for chain in chains {
            let mut cands = Vec::new();
            for i in 0..chain.len() {
                for j in i + 2..chain.len() {
                    if parity.is_none_or(|p| (j - i) % 2 == p) {
                        cands.push((i, j));
                    }
                }
            }
            cands.shuffle(&mut self.rng);
            for (i, j) in cands.into_iter().take(8) {
                let path = chain[i..=j].to_vec();
                if g.is_induced_path(&path) {
                    return Some(path);
                }
            }
        }
        None
    }

    fn two_sep_step(&mut self, g: &Graph, remaining: usize) -> Result<Option<Graph>> {
        let Some(q) = self.thread(g, None) else { return Ok(None) };
        let lq = q.len() - 1;
        let parity = match self.cfg.subclass {
            Some(Subclass::EvenHoleFree) => Some((lq + 1) % 2),
            Some(Subclass::Bipartite) => Some(lq % 2),
            _ => None,
        };
        let mut w = self.cfg.block_weights;
        w[3] = 0;
        let Some(block) = self.block(remaining + lq + 3, w) else { return Ok(None) };
        let Some(p) = self.thread(&block.graph, parity) else { return Ok(None) };
        let added = block.graph.n() as isize - (p.len() - 1) as isize - lq as isize;
        if added < 1 || added as usize > remaining {
            return Ok(None);
        }
        glue(&GluingRecipe::TwoSep { gx: g.clone(), gy: block.graph, q, p }).map(Some)
    }

    fn p3_step(&mut self, g: &Graph, remaining: usize) -> Result<Option<Graph>> {
        let mut w = self.cfg.block_weights;
        w[0] = 0;
        w[3] = 0;
        if self.rng.gen_bool(0.5) {
            // g supplies an ear, the block a sector
            let mut ears = find_ears(g);
            ears.shuffle(&mut self.rng);
            for ear in ears.into_iter().take(6) {
                let q: Vec<usize> = std::iter::once(ear.a).chain(ear.path.iter().copied()).chain([ear.b]).collect();
                let spokes = ear.path.iter().filter(|&&v| g.has_edge(v, ear.c)).count();
                if self.cfg.subclass.is_some() && g.degree(ear.c) != 2 + spokes {
                    continue;
                }
                let Some(block) = self.block(remaining + q.len() + 2, w) else { continue };
                let d = block.daisy.as_ref().expect("daisy block");
                let Some(petal) = d.petals.choose(&mut self.rng) else { continue };
                let (prev, cy, next) = d.anchors(petal);
                let mut marks = vec![prev];
                marks.extend(petal.spokes.iter().copied());
                marks.push(next);
                let mut walk = vec![prev];
                walk.extend(petal.path.iter().copied());
                walk.push(next);
                let s = self.rng.gen_range(0..marks.len() - 1);
                let i = walk.iter().position(|&v| v == marks[s]).unwrap();
                let j = walk.iter().position(|&v| v == marks[s + 1]).unwrap();
                let p = walk[i..=j].to_vec();
                let added = block.graph.n() as isize - 3 - (p.len() as isize - 2) - (q.len() as isize - 2);
                if added < 1 || added as usize > remaining {
                    continue;
                }
                let r = GluingRecipe::P3 { gx: g.clone(), gy: block.graph, cx: ear.c, q, cy, p };
                if let Ok(h) = glue(&r) {
                    return Ok(Some(h));
                }
            }
            Ok(None)
        } else {
            // the block supplies a petal, g a tight degree-2 path
            let mut chains = deg2_chains(g);
            chains.shuffle(&mut self.rng);
            for chain in chains.into_iter().take(8) {
                let Some((p, cy)) = self.tight_path(g, &chain) else { continue };
                let Some(block) = self.block(remaining + p.len() + 4, w) else { continue };
                let d = block.daisy.as_ref().expect("daisy block");
                let Some(petal) = d.petals.choose(&mut self.rng) else { continue };
                let (prev, cx, next) = d.anchors(petal);
                let q: Vec<usize> = std::iter::once(prev).chain(petal.path.iter().copied()).chain([next]).collect();
                let added = block.graph.n() as isize - 3 - (p.len() as isize - 2) - (q.len() as isize - 2);
                if added < 1 || added as usize > remaining {
                    continue;
                }
                let r = GluingRecipe::P3 { gx: block.graph, gy: g.clone(), cx, q, cy, p };
                if let Ok(h) = glue(&r) {
                    return Ok(Some(h));
                }
            }
            Ok(None)
        }
    }

    /// A subpath of `chain` whose ends have a common neighbour `c` that
    /// sees nothing else of it.
    fn tight_path(&mut self, g: &Graph, chain: &[usize]) -> Option<(Vec<usize>, usize)> {
        let mut cands = Vec::new();
        for i in 0..chain.len() {
            for j in i + 2..chain.len() {
                for &c in g.neighbors(chain[i]) {
                    if g.has_edge(c, chain[j])
                        && !chain[i..=j].contains(&c)
                        && chain[i + 1..j].iter().all(|&v| !g.has_edge(v, c))
                        && g.is_induced_path(&chain[i..=j])
                    {
                        cands.push((chain[i..=j].to_vec(), c));
                    }
                }
            }
        }
        cands.choose(&mut self.rng).cloned()
    }
}

/// Maximal runs of degree-2 vertices together with their end neighbours.
/// A cycle component is returned once, as an open walk around it.
fn deg2_chains(g: &Graph) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for s in g.vertices() {
        if seen[s] || g.degree(s) != 2 {
            continue;
        }
        seen[s] = true;
        // walk both ways from s
        let mut sides = Vec::new();
        let mut cyclic = false;
        for &start in g.neighbors(s) {
            let mut side = Vec::new();
            let (mut prev, mut cur) = (s, start);
            loop {
                if cur == s {
                    cyclic = true;
                    break;
                }
                side.push(cur);
                if g.degree(cur) != 2 || seen[cur] {
                    break;
                }
                seen[cur] = true;
                let nb = g.neighbors(cur);
                let next = if nb[0] == prev { nb[1] } else { nb[0] };
                prev = cur;
                cur = next;
            }
            sides.push(side);
            if cyclic {
                break;
            }
        }
        if cyclic {
            let mut walk = vec![s];
            walk.extend(sides.pop().unwrap());
            out.push(walk);
        } else {
            let mut walk: Vec<usize> = sides[0].iter().rev().copied().collect();
            walk.push(s);
            walk.extend(sides[1].iter().copied());
            out.push(walk);
        }
    }
    out
}
