//! Simple undirected graphs on dense vertex ids `0..n`.

mod bfs;
pub mod graph6;
mod hamilton;
mod invariants;
mod labeling;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use bfs::BfsTree;
pub use hamilton::{HamiltonLimits, DEFAULT_HAMILTON_CAP};
pub use invariants::{Clique, DEFAULT_CHROMATIC_CAP};
pub use labeling::{EdgeLabeling, Labeling, LabelingKind, VertexLabeling};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph of order {n}")]
    OutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("{what}: order {n} exceeds the configured cap {cap}")]
    SizeLimitExceeded {
        what: &'static str,
        n: usize,
        cap: usize,
    },
    #[error("graph6 parse error: {0}")]
    Parse(String),
    #[error("labeling error: {0}")]
    Labeling(String),
}

/// An undirected edge, smaller endpoint first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(usize, usize);

impl Edge {
    /// Normalizes the endpoint order. Panics on a loop.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "an edge needs two distinct endpoints");
        if a < b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn u(&self) -> usize {
        self.0
    }

    pub fn v(&self) -> usize {
        self.1
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.0, self.1)
    }

    /// The other endpoint, if `x` is one of them.
    pub fn other(&self, x: usize) -> Option<usize> {
        if x == self.0 {
            Some(self.1)
        } else if x == self.1 {
            Some(self.0)
        } else {
            None
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

impl Serialize for Edge {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Edge {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

impl std::str::FromStr for Edge {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GraphError::Labeling(format!("bad edge key {s:?}, expected \"u-v\""));
        let (a, b) = s.split_once('-').ok_or_else(bad)?;
        let a: usize = a.trim().parse().map_err(|_| bad())?;
        let b: usize = b.trim().parse().map_err(|_| bad())?;
        if a == b {
            return Err(GraphError::SelfLoop(a));
        }
        Ok(Edge::new(a, b))
    }
}

/// A simple undirected graph. Immutable once built.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    matrix: Vec<bool>,
    edges: Vec<Edge>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn new(n: usize, pairs: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut matrix = vec![false; n * n];
        for &(u, v) in pairs {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::OutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            matrix[u * n + v] = true;
            matrix[v * n + u] = true;
        }
        Ok(Self::from_matrix(n, matrix))
    }

    pub fn empty(n: usize) -> Self {
        Self::from_matrix(n, vec![false; n * n])
    }

    fn from_matrix(n: usize, matrix: Vec<bool>) -> Self {
        let mut adj = vec![Vec::new(); n];
        let mut edges = Vec::new();
        for u in 0..n {
            for v in 0..n {
                if matrix[u * n + v] {
                    adj[u].push(v);
                    if u < v {
                        edges.push(Edge(u, v));
                    }
                }
            }
        }
        Graph {
            n,
            adj,
            matrix,
            edges,
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.matrix[u * self.n + v]
    }

    /// Sorted neighbors of `v`. Panics if `v` is out of range.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// All edges in ascending `(u, v)` order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Position of `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        if u == v || !self.has_edge(u, v) {
            return None;
        }
        self.edges.binary_search(&Edge::new(u, v)).ok()
    }

    /// Returns the graph with vertex `v` renamed to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let pairs: Vec<_> = self.edges.iter().map(|e| (perm[e.0], perm[e.1])).collect();
        Graph::new(self.n, &pairs).expect("permutation keeps edges valid")
    }

    /// Subgraph induced by deleting `v`; remaining vertices keep their relative order.
    pub fn without_vertex(&self, v: usize) -> Graph {
        let rename = |x: usize| if x > v { x - 1 } else { x };
        let pairs: Vec<_> = self
            .edges
            .iter()
            .filter(|e| e.0 != v && e.1 != v)
            .map(|e| (rename(e.0), rename(e.1)))
            .collect();
        Graph::new(self.n - 1, &pairs).expect("deleting a vertex keeps edges valid")
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.component_of(0).len() == self.n
    }

    /// Vertex sets of the connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if !seen[s] {
                let comp = self.component_of(s);
                for &v in &comp {
                    seen[v] = true;
                }
                out.push(comp);
            }
        }
        out
    }

    fn component_of(&self, s: usize) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        let mut stack = vec![s];
        seen[s] = true;
        let mut comp = Vec::new();
        while let Some(x) = stack.pop() {
            comp.push(x);
            for &y in &self.adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        comp.sort_unstable();
        comp
    }

    /// True if some connected component is a single edge.
    pub fn has_k2_component(&self) -> bool {
        self.components()
            .iter()
            .any(|c| c.len() == 2 && self.has_edge(c[0], c[1]))
    }

    pub fn degree_sum(&self) -> usize {
        self.adj.iter().map(Vec::len).sum()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field(
                "edges",
                &self.edges.iter().map(|e| e.endpoints()).collect::<Vec<_>>(),
            )
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_triangle() {
        let g = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.size(), 3);
        assert_eq!(g.neighbors(1), &[0, 2]);
    }

    #[test]
    fn single_vertex() {
        let g = Graph::new(1, &[]).unwrap();
        assert_eq!((g.order(), g.size()), (1, 0));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::new(4, &[(0, 1), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.size(), 2);
        assert_eq!(g.degree_sum(), 2 * g.size());
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            Graph::new(3, &[(0, 3)]),
            Err(GraphError::OutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::new(3, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
    }

    #[test]
    fn edge_keys_parse() {
        let e: Edge = "4-1".parse().unwrap();
        assert_eq!(e.endpoints(), (1, 4));
        assert_eq!(e.to_string(), "1-4");
        assert!("3-3".parse::<Edge>().is_err());
        assert!("x".parse::<Edge>().is_err());
    }

    #[test]
    fn k2_component_detection() {
        let g = Graph::new(5, &[(0, 1), (2, 3), (3, 4)]).unwrap();
        assert!(g.has_k2_component());
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(!g.has_k2_component());
    }

    #[test]
    fn vertex_deletion_renumbers() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let h = g.without_vertex(1);
        assert_eq!(h.order(), 3);
        assert_eq!(h.size(), 2);
        assert!(h.has_edge(1, 2) && h.has_edge(0, 2));
    }
}
