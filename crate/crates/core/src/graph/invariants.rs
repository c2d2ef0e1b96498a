use std::collections::BTreeSet;

use super::{Graph, GraphError};

/// Largest order accepted by [`Graph::chromatic_number`].
pub const DEFAULT_CHROMATIC_CAP: usize = 20;

/// A maximum clique: its size and the lexicographically smallest vertex set achieving it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clique {
    pub size: usize,
    pub vertices: Vec<usize>,
}

impl Graph {
    /// Δ(G). Zero for the empty graph.
    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn open_neighborhood(&self, v: usize) -> Result<BTreeSet<usize>, GraphError> {
        if v >= self.order() {
            return Err(GraphError::OutOfRange {
                vertex: v,
                n: self.order(),
            });
        }
        Ok(self.neighbors(v).iter().copied().collect())
    }

    /// No two distinct vertices share an open neighborhood.
    pub fn is_r_thin(&self) -> bool {
        let mut seen: BTreeSet<&[usize]> = BTreeSet::new();
        (0..self.order()).all(|v| seen.insert(self.neighbors(v)))
    }

    /// ω(G) with a witness clique.
    pub fn clique_number(&self) -> Clique {
        let n = self.order();
        if n == 0 {
            return Clique {
                size: 0,
                vertices: vec![],
            };
        }
        let mut best = Clique {
            size: 0,
            vertices: vec![],
        };
        let mut current = Vec::new();
        let all: Vec<usize> = (0..n).collect();
        self.bron_kerbosch(&mut current, all, Vec::new(), &mut best);
        best
    }

    fn bron_kerbosch(
        &self,
        current: &mut Vec<usize>,
        candidates: Vec<usize>,
        excluded: Vec<usize>,
        best: &mut Clique,
    ) {
        if candidates.is_empty() {
            if excluded.is_empty() {
                let mut found = current.clone();
                found.sort_unstable();
                if found.len() > best.size || (found.len() == best.size && found < best.vertices) {
                    best.size = found.len();
                    best.vertices = found;
                }
            }
            return;
        }
        // Ties matter for the lexicographic witness, so only prune strictly smaller branches.
        if current.len() + candidates.len() < best.size {
            return;
        }
        let pivot = candidates
            .iter()
            .chain(excluded.iter())
            .copied()
            .max_by_key(|&u| candidates.iter().filter(|&&w| self.has_edge(u, w)).count())
            .expect("non-empty");
        let branch: Vec<usize> = candidates
            .iter()
            .copied()
            .filter(|&v| !self.has_edge(pivot, v))
            .collect();
        let mut candidates = candidates;
        let mut excluded = excluded;
        for v in branch {
            let nc = candidates
                .iter()
                .copied()
                .filter(|&w| self.has_edge(v, w))
                .collect();
            let nx = excluded
                .iter()
                .copied()
                .filter(|&w| self.has_edge(v, w))
                .collect();
            current.push(v);
            self.bron_kerbosch(current, nc, nx, best);
            current.pop();
            candidates.retain(|&w| w != v);
            excluded.push(v);
        }
    }

    /// χ(G) by exact backtracking, refusing graphs above [`DEFAULT_CHROMATIC_CAP`].
    pub fn chromatic_number(&self) -> Result<usize, GraphError> {
        self.chromatic_number_with_cap(DEFAULT_CHROMATIC_CAP)
    }

    pub fn chromatic_number_with_cap(&self, cap: usize) -> Result<usize, GraphError> {
        let n = self.order();
        if n > cap {
            return Err(GraphError::SizeLimitExceeded {
                what: "chromatic number",
                n,
                cap,
            });
        }
        if n == 0 {
            return Ok(0);
        }
        let lower = self.clique_number().size.max(1);
        let upper = self.greedy_colors();
        for k in lower..upper {
            let mut colors = vec![usize::MAX; n];
            if self.colorable(k, &mut colors, 0) {
                return Ok(k);
            }
        }
        Ok(upper)
    }

    fn greedy_colors(&self) -> usize {
        let mut colors = vec![usize::MAX; self.order()];
        let mut used = 0;
        for v in 0..self.order() {
            let taken: BTreeSet<usize> = self.neighbors(v).iter().map(|&u| colors[u]).collect();
            let c = (0..).find(|c| !taken.contains(c)).unwrap();
            colors[v] = c;
            used = used.max(c + 1);
        }
        used
    }

    /// DSATUR-ordered backtracking: colour the most constrained vertex next.
    fn colorable(&self, k: usize, colors: &mut [usize], colored: usize) -> bool {
        let n = self.order();
        if colored == n {
            return true;
        }
        let saturation = |v: usize, colors: &[usize]| {
            self.neighbors(v)
                .iter()
                .filter(|&&u| colors[u] != usize::MAX)
                .map(|&u| colors[u])
                .collect::<BTreeSet<_>>()
        };
        let v = (0..n)
            .filter(|&v| colors[v] == usize::MAX)
            .max_by_key(|&v| {
                (
                    saturation(v, colors).len(),
                    self.degree(v),
                    std::cmp::Reverse(v),
                )
            })
            .expect("uncolored vertex");
        let taken = saturation(v, colors);
        let max_used = colors
            .iter()
            .filter(|&&c| c != usize::MAX)
            .max()
            .map_or(0, |c| c + 1);
        // Colours beyond the first unused one are interchangeable.
        for c in 0..k.min(max_used + 1) {
            if !taken.contains(&c) {
                colors[v] = c;
                if self.colorable(k, colors, colored + 1) {
                    return true;
                }
                colors[v] = usize::MAX;
            }
        }
        false
    }
}
