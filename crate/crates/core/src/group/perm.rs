use std::fmt;

use serde::{Deserialize, Serialize};

use super::GroupError;
use crate::graph::{Edge, Graph};

/// A bijection on `0..n`, stored as its image array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self, GroupError> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &x in &image {
            if x >= n || seen[x] {
                return Err(GroupError::NotABijection);
            }
            seen[x] = true;
        }
        Ok(Permutation(image))
    }

    pub(crate) fn from_vec_unchecked(image: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(image.clone()).is_ok());
        Permutation(image)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation(self.0.iter().map(|&x| other.0[x]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Permutation(inv)
    }

    /// Points moved by the permutation.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(i, x)| i != *x)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn map_edge(&self, e: Edge) -> Edge {
        Edge::new(self.0[e.u()], self.0[e.v()])
    }

    /// The induced permutation on `g.edges()` indices. `None` if an edge leaves the edge set.
    pub fn on_edges(&self, g: &Graph) -> Option<Vec<usize>> {
        g.edges()
            .iter()
            .map(|&e| {
                let f = self.map_edge(e);
                g.edge_index(f.u(), f.v())
            })
            .collect()
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = GroupError;

    fn try_from(v: Vec<usize>) -> Result<Self, Self::Error> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.0
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.0)
    }
}
