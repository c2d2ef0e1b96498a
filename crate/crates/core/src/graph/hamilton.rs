use super::{Graph, GraphError};

/// Largest order accepted by the Hamiltonian searches unless overridden.
pub const DEFAULT_HAMILTON_CAP: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HamiltonLimits {
    pub max_order: usize,
    /// Stop after this many cycles.
    pub max_cycles: usize,
}

impl Default for HamiltonLimits {
    fn default() -> Self {
        HamiltonLimits {
            max_order: DEFAULT_HAMILTON_CAP,
            max_cycles: usize::MAX,
        }
    }
}

impl Graph {
    /// Every Hamiltonian cycle once: starting at vertex 0, oriented so the
    /// second vertex is smaller than the last.
    pub fn hamiltonian_cycles(&self) -> Result<Vec<Vec<usize>>, GraphError> {
        self.hamiltonian_cycles_with(HamiltonLimits::default())
    }

    pub fn hamiltonian_cycles_with(
        &self,
        limits: HamiltonLimits,
    ) -> Result<Vec<Vec<usize>>, GraphError> {
        let n = self.order();
        if n > limits.max_order {
            return Err(GraphError::SizeLimitExceeded {
                what: "Hamiltonian cycle enumeration",
                n,
                cap: limits.max_order,
            });
        }
        let mut out = Vec::new();
        if n < 3 || self.min_degree() < 2 || !self.is_connected() {
            return Ok(out);
        }
        let mut walk = CycleWalk {
            g: self,
            path: vec![0],
            visited: vec![false; n],
            out: &mut out,
            max_cycles: limits.max_cycles,
        };
        walk.visited[0] = true;
        walk.extend();
        Ok(out)
    }

    pub fn has_hamiltonian_cycle(&self) -> Result<bool, GraphError> {
        let limits = HamiltonLimits {
            max_cycles: 1,
            ..HamiltonLimits::default()
        };
        Ok(!self.hamiltonian_cycles_with(limits)?.is_empty())
    }

    /// Traceability by dynamic programming over vertex subsets.
    pub fn has_hamiltonian_path(&self) -> Result<bool, GraphError> {
        self.has_hamiltonian_path_with_cap(DEFAULT_HAMILTON_CAP)
    }

    pub fn has_hamiltonian_path_with_cap(&self, cap: usize) -> Result<bool, GraphError> {
        let n = self.order();
        if n > cap {
            return Err(GraphError::SizeLimitExceeded {
                what: "Hamiltonian path search",
                n,
                cap,
            });
        }
        if n <= 1 {
            return Ok(true);
        }
        if !self.is_connected() {
            return Ok(false);
        }
        let full = (1usize << n) - 1;
        let nbr_mask: Vec<usize> = (0..n)
            .map(|v| self.neighbors(v).iter().fold(0, |m, &u| m | (1 << u)))
            .collect();
        // reach[mask] = set of end vertices of a path covering exactly `mask`.
        let mut reach = vec![0usize; 1 << n];
        for v in 0..n {
            reach[1 << v] = 1 << v;
        }
        for mask in 1..=full {
            let ends = reach[mask];
            if ends == 0 {
                continue;
            }
            if mask == full {
                return Ok(true);
            }
            for (v, &nbrs) in nbr_mask.iter().enumerate() {
                if ends & (1 << v) != 0 {
                    let mut next = nbrs & !mask;
                    while next != 0 {
                        let u = next.trailing_zeros() as usize;
                        next &= next - 1;
                        reach[mask | (1 << u)] |= 1 << u;
                    }
                }
            }
        }
        Ok(false)
    }
}

struct CycleWalk<'a> {
    g: &'a Graph,
    path: Vec<usize>,
    visited: Vec<bool>,
    out: &'a mut Vec<Vec<usize>>,
    max_cycles: usize,
}

impl CycleWalk<'_> {
    fn extend(&mut self) {
        if self.out.len() >= self.max_cycles {
            return;
        }
        let n = self.g.order();
        let end = *self.path.last().unwrap();
        if self.path.len() == n {
            if self.g.has_edge(end, 0) && self.path[1] < self.path[n - 1] {
                self.out.push(self.path.clone());
            }
            return;
        }
        if !self.viable(end) {
            return;
        }
        for &next in self.g.neighbors(end) {
            if self.visited[next] {
                continue;
            }
            self.visited[next] = true;
            self.path.push(next);
            self.extend();
            self.path.pop();
            self.visited[next] = false;
        }
    }

    /// Each unvisited vertex still needs two usable cycle neighbours.
    fn viable(&self, end: usize) -> bool {
        (0..self.g.order()).filter(|&u| !self.visited[u]).all(|u| {
            self.g
                .neighbors(u)
                .iter()
                .filter(|&&x| !self.visited[x] || x == end || x == 0)
                .count()
                >= 2
        })
    }
}
