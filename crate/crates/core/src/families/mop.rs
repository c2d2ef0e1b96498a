use std::collections::BTreeSet;

use super::FamilyError;
use crate::graph::Graph;
use crate::group::canonical_key;

pub const DEFAULT_MOP_CAP: usize = 12;

/// A MOP together with its outer cycle.
struct Mop {
    edges: Vec<(usize, usize)>,
    cycle: Vec<usize>,
}

/// All maximal outerplanar graphs of order `n` up to isomorphism, in a
/// deterministic order. Each level adds an ear (a new vertex joined to two
/// consecutive outer-cycle vertices) to every class of the previous level.
pub fn enumerate_mops(n: usize, cap: usize) -> Result<Vec<Graph>, FamilyError> {
    if n < 3 {
        return Err(FamilyError::BadParams {
            family: "mop",
            reason: "order starts at 3".into(),
        });
    }
    if n > cap {
        return Err(FamilyError::SizeLimitExceeded {
            family: "mop",
            n,
            cap,
        });
    }
    let mut level = vec![Mop {
        edges: vec![(0, 1), (1, 2), (0, 2)],
        cycle: vec![0, 1, 2],
    }];
    for order in 3..n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for mop in &level {
            for i in 0..order {
                let (a, b) = (mop.cycle[i], mop.cycle[(i + 1) % order]);
                let mut edges = mop.edges.clone();
                edges.push((a, order));
                edges.push((b, order));
                let key = canonical_key(&Graph::new(order + 1, &edges)?);
                if seen.insert(key) {
                    let mut cycle = mop.cycle.clone();
                    cycle.insert(i + 1, order);
                    next.push(Mop { edges, cycle });
                }
            }
        }
        level = next;
    }
    level.iter().map(|m| Ok(Graph::new(n, &m.edges)?)).collect()
}
