//! Generators for the graph families under study, with isomorphism dedup
//! for the exhaustive enumerations.

mod halin;
mod mop;
mod mycielski;
mod small;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

pub use halin::{
    enumerate_halin, enumerate_halin_structures, halin_from_plane_tree, HalinJson, HalinStructure,
    PlaneTree, DEFAULT_HALIN_CAP,
};
pub use mop::{enumerate_mops, DEFAULT_MOP_CAP};
pub use mycielski::{
    mycielski_sequence, mycielski_sequence_with_cap, mycielskian, Mycielskian, MycielskianMap,
    DEFAULT_MYCIELSKI_CAP,
};
pub use small::{
    clique4_graph, clique4_graphs, enumerate_connected, enumerate_graphs, DEFAULT_CONNECTED_CAP,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("bad parameters for {family}: {reason}")]
    BadParams {
        family: &'static str,
        reason: String,
    },
    #[error("{family} order {n} exceeds the configured cap {cap}")]
    SizeLimitExceeded {
        family: &'static str,
        n: usize,
        cap: usize,
    },
    #[error("invalid plane tree: {0}")]
    InvalidTree(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn bad(family: &'static str, reason: impl Into<String>) -> FamilyError {
    FamilyError::BadParams {
        family,
        reason: reason.into(),
    }
}

/// The standard families, numbered canonically: paths and cycles in order,
/// the hub of a wheel or star is vertex 0, the parts of `K_{p,q}` are
/// `0..p` and `p..p+q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Standard {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    /// Hub joined to a rim of the given length.
    Wheel(usize),
    /// `K_{1,k}`.
    Star(usize),
}

pub fn gen_standard(kind: Standard) -> Result<Graph, FamilyError> {
    let graph = |n: usize, pairs: Vec<(usize, usize)>| Ok(Graph::new(n, &pairs)?);
    match kind {
        Standard::Path(n) => {
            if n == 0 {
                return Err(bad("path", "needs at least one vertex"));
            }
            graph(n, (1..n).map(|i| (i - 1, i)).collect())
        }
        Standard::Cycle(n) => {
            if n < 3 {
                return Err(bad("cycle", "needs at least three vertices"));
            }
            graph(n, (0..n).map(|i| (i, (i + 1) % n)).collect())
        }
        Standard::Complete(n) => {
            if n == 0 {
                return Err(bad("complete", "needs at least one vertex"));
            }
            graph(
                n,
                (0..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .collect(),
            )
        }
        Standard::CompleteBipartite(p, q) => {
            if p == 0 || q == 0 {
                return Err(bad("complete_bipartite", "both parts must be non-empty"));
            }
            graph(
                p + q,
                (0..p)
                    .flat_map(|i| (0..q).map(move |j| (i, p + j)))
                    .collect(),
            )
        }
        Standard::Wheel(k) => {
            if k < 3 {
                return Err(bad("wheel", "rim needs at least three vertices"));
            }
            let mut pairs: Vec<_> = (1..=k).map(|i| (0, i)).collect();
            pairs.extend((0..k).map(|i| (1 + i, 1 + (i + 1) % k)));
            graph(k + 1, pairs)
        }
        Standard::Star(k) => {
            if k == 0 {
                return Err(bad("star", "needs at least one leaf"));
            }
            graph(k + 1, (1..=k).map(|i| (0, i)).collect())
        }
    }
}
