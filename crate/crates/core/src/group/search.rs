//! Individualization-refinement search for automorphism groups.
//!
//! The first path of the search tree fixes a base `b_0, b_1, ...`. Working from
//! the deepest level up, every vertex `w` of the target cell at level `k` is
//! tested for membership in the orbit of `b_k` under the pointwise stabilizer
//! of `b_0..b_{k-1}`; each success yields a generator. The group order is the
//! product of those orbit lengths.

use num_bigint::BigUint;

use super::partition::{mix, Colored, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Mode {
    Full,
    /// Stop at the first non-identity automorphism.
    FirstNontrivial,
}

#[derive(Debug, Clone)]
pub(crate) struct SearchOutcome {
    pub generators: Vec<Vec<usize>>,
    pub orbit_lengths: Vec<usize>,
}

impl SearchOutcome {
    pub fn order(&self) -> BigUint {
        self.orbit_lengths
            .iter()
            .fold(BigUint::from(1u32), |acc, &k| acc * BigUint::from(k))
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        let (big, small) = if self.size[a] >= self.size[b] {
            (a, b)
        } else {
            (b, a)
        };
        self.parent[small] = big;
        self.size[big] += self.size[small];
    }

    pub fn union_perm(&mut self, image: &[usize]) {
        for (v, &w) in image.iter().enumerate() {
            self.union(v, w);
        }
    }

    pub fn class_size(&mut self, x: usize) -> usize {
        let r = self.find(x);
        self.size[r]
    }
}

struct Level {
    part: Partition,
    target: (usize, usize),
    base: usize,
}

struct Searcher<'a> {
    g: &'a Colored,
    levels: Vec<Level>,
    /// `traces[k]` is the trace of the first-path node at depth `k`.
    traces: Vec<u64>,
    leaf: Vec<usize>,
}

fn step(g: &Colored, part: &mut Partition, v: usize) -> u64 {
    let s = part.individualize(v);
    let t = part.refine(g, &[s]);
    mix(t, s as u64)
}

impl<'a> Searcher<'a> {
    fn new(g: &'a Colored) -> Self {
        let mut part = Partition::from_colors(g);
        let starts = part.cell_starts();
        let mut traces = vec![part.refine(g, &starts)];
        let mut levels = Vec::new();
        while let Some((s, e)) = part.target_cell() {
            let base = *part.elems[s..e].iter().min().expect("non-empty cell");
            levels.push(Level {
                part: part.clone(),
                target: (s, e),
                base,
            });
            traces.push(step(g, &mut part, base));
        }
        Searcher {
            g,
            levels,
            traces,
            leaf: part.elems,
        }
    }

    /// Looks for a leaf below `part` (a node at `depth`) that matches the first leaf.
    fn descend(&self, part: &Partition, depth: usize) -> Option<Vec<usize>> {
        if part.is_discrete() {
            if depth != self.levels.len() {
                return None;
            }
            let mut image = vec![0; self.g.n];
            for (i, &v) in self.leaf.iter().enumerate() {
                image[v] = part.elems[i];
            }
            return self.g.is_automorphism(&image).then_some(image);
        }
        let (s, e) = self.levels.get(depth)?.target;
        if part.cell_end(s) != Some(e) {
            return None;
        }
        for &u in &part.elems[s..e] {
            let mut child = part.clone();
            if step(self.g, &mut child, u) != self.traces[depth + 1] {
                continue;
            }
            if let Some(image) = self.descend(&child, depth + 1) {
                return Some(image);
            }
        }
        None
    }

    fn run(&self, mode: Mode) -> SearchOutcome {
        let n = self.g.n;
        let depth = self.levels.len();
        let mut generators: Vec<Vec<usize>> = Vec::new();
        let mut orbit_lengths = vec![1; depth];
        for k in (0..depth).rev() {
            let level = &self.levels[k];
            let mut uf = UnionFind::new(n);
            for gen in &generators {
                uf.union_perm(gen);
            }
            let (s, e) = level.target;
            let mut cell = level.part.elems[s..e].to_vec();
            cell.sort_unstable();
            for w in cell {
                if w == level.base || uf.find(w) == uf.find(level.base) {
                    continue;
                }
                let mut child = level.part.clone();
                if step(self.g, &mut child, w) != self.traces[k + 1] {
                    continue;
                }
                if let Some(image) = self.descend(&child, k + 1) {
                    uf.union_perm(&image);
                    generators.push(image);
                    if mode == Mode::FirstNontrivial {
                        return SearchOutcome {
                            generators,
                            orbit_lengths: vec![],
                        };
                    }
                }
            }
            orbit_lengths[k] = uf.class_size(level.base);
        }
        SearchOutcome {
            generators,
            orbit_lengths,
        }
    }
}

pub(crate) fn search(g: &Colored, mode: Mode) -> SearchOutcome {
    Searcher::new(g).run(mode)
}

/// A non-identity automorphism of the coloured graph, if one exists.
pub(crate) fn nontrivial_automorphism(g: &Colored) -> Option<Vec<usize>> {
    search(g, Mode::FirstNontrivial).generators.pop()
}
