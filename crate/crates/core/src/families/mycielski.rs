use serde::Serialize;

use super::FamilyError;
use crate::graph::Graph;

/// Largest index `i` accepted for `M_i` by default; `M_7` has 95 vertices.
pub const DEFAULT_MYCIELSKI_CAP: usize = 7;

/// Where the parts of `mu(G)` live: `v_i = i`, `u_i = n + i`, `w = 2n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MycielskianMap {
    pub base_n: usize,
    pub v_ids: Vec<usize>,
    pub u_ids: Vec<usize>,
    pub w_id: usize,
}

impl MycielskianMap {
    pub fn new(base_n: usize) -> Self {
        MycielskianMap {
            base_n,
            v_ids: (0..base_n).collect(),
            u_ids: (base_n..2 * base_n).collect(),
            w_id: 2 * base_n,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mycielskian {
    pub graph: Graph,
    pub map: MycielskianMap,
}

pub fn mycielskian(g: &Graph) -> Mycielskian {
    let n = g.order();
    let map = MycielskianMap::new(n);
    let mut pairs = Vec::with_capacity(3 * g.size() + n);
    for e in g.edges() {
        let (i, j) = e.endpoints();
        pairs.push((map.v_ids[i], map.v_ids[j]));
        pairs.push((map.u_ids[i], map.v_ids[j]));
        pairs.push((map.v_ids[i], map.u_ids[j]));
    }
    pairs.extend(map.u_ids.iter().map(|&u| (u, map.w_id)));
    let graph = Graph::new(2 * n + 1, &pairs).expect("mycielskian edges are in range");
    Mycielskian { graph, map }
}

/// `M_2 = K_2`, `M_i = mu(M_{i-1})`.
pub fn mycielski_sequence(i: usize) -> Result<Graph, FamilyError> {
    mycielski_sequence_with_cap(i, DEFAULT_MYCIELSKI_CAP)
}

pub fn mycielski_sequence_with_cap(i: usize, cap: usize) -> Result<Graph, FamilyError> {
    if i < 2 {
        return Err(FamilyError::BadParams {
            family: "mycielski",
            reason: "index starts at 2".into(),
        });
    }
    if i > cap {
        return Err(FamilyError::SizeLimitExceeded {
            family: "mycielski",
            n: i,
            cap,
        });
    }
    let mut g = Graph::new(2, &[(0, 1)])?;
    for _ in 2..i {
        g = mycielskian(&g).graph;
    }
    Ok(g)
}
