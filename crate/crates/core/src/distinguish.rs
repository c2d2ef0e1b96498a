//! Exact distinguishing numbers D(G) and distinguishing indices D'(G).
//!
//! For `d = 1, 2, ...` labelings are enumerated depth-first in lexicographic
//! order over vertices (or edges) by id, so the first witness found is the
//! lexicographically least distinguishing labeling with `d` labels. Three
//! prunings keep that witness intact:
//!
//! * labels are assigned as restricted growth strings, since renaming labels
//!   never turns a distinguishing labeling into a non-distinguishing one;
//! * a prefix is abandoned when a non-identity automorphism preserves the
//!   assigned labels and fixes every unassigned vertex (edge), because every
//!   completion is then preserved by it;
//! * when Aut(G) is small enough to materialize, a prefix is abandoned when a
//!   group element mapping the prefix onto itself yields a lexicographically
//!   smaller prefix, since the least witness is least in its orbit.

use std::time::{Duration, Instant};

use serde::Serialize;
use thiserror::Error;

use crate::graph::{
    graph6, EdgeLabeling, Graph, GraphError, Labeling, LabelingKind, VertexLabeling,
};
use crate::group::partition::Colored;
use crate::group::{self, search, GroupError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DistinguishError {
    #[error("no distinguishing {kind:?} labeling with at most {max_d} labels")]
    BudgetExceeded { kind: LabelingKind, max_d: usize },
    #[error("{what} {value} exceeds the configured cap {cap}")]
    SizeLimitExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },
    #[error("search gave up after {0} nodes")]
    NodeBudgetExhausted(u64),
    #[error("distinguishing index is undefined for graphs with a K2 component")]
    UndefinedForK2Component,
    #[error("distinguishing index needs at least two vertices")]
    TooSmall,
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Limits for the exact searches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchCaps {
    pub max_vertices: usize,
    pub max_edges: usize,
    /// Group elements are materialized for orbit pruning only up to this order.
    pub element_cap: usize,
    pub orbit_pruning: bool,
    pub node_budget: u64,
}

impl Default for SearchCaps {
    fn default() -> Self {
        SearchCaps {
            max_vertices: 24,
            max_edges: 40,
            element_cap: 50_000,
            orbit_pruning: true,
            node_budget: 50_000_000,
        }
    }
}

impl SearchCaps {
    pub fn unpruned() -> Self {
        SearchCaps {
            orbit_pruning: false,
            ..SearchCaps::default()
        }
    }
}

#[derive(Debug, Clone)]
pub struct DistinguishingResult {
    pub kind: LabelingKind,
    pub value: usize,
    pub witness: Labeling,
    pub elapsed: Duration,
}

/// One JSON row: `{graph6, n, m, "D" | "D'", witness, elapsed_ms}`.
#[derive(Debug, Clone, Serialize)]
pub struct ResultRow {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    #[serde(rename = "D", skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    #[serde(rename = "D'", skip_serializing_if = "Option::is_none")]
    pub d_index: Option<usize>,
    pub witness: Labeling,
    pub elapsed_ms: u128,
}

impl DistinguishingResult {
    pub fn to_row(&self, g: &Graph) -> ResultRow {
        let (d, d_index) = match self.kind {
            LabelingKind::Vertex => (Some(self.value), None),
            LabelingKind::Edge => (None, Some(self.value)),
        };
        ResultRow {
            graph6: graph6::to_graph6(g),
            n: g.order(),
            m: g.size(),
            d,
            d_index,
            witness: self.witness.clone(),
            elapsed_ms: self.elapsed.as_millis(),
        }
    }
}

pub fn distinguishing_number(
    g: &Graph,
    max_d: usize,
) -> Result<DistinguishingResult, DistinguishError> {
    distinguishing_number_with(g, max_d, &SearchCaps::default())
}

pub fn distinguishing_number_with(
    g: &Graph,
    max_d: usize,
    caps: &SearchCaps,
) -> Result<DistinguishingResult, DistinguishError> {
    if g.order() > caps.max_vertices {
        return Err(DistinguishError::SizeLimitExceeded {
            what: "order",
            value: g.order(),
            cap: caps.max_vertices,
        });
    }
    exact(g, LabelingKind::Vertex, max_d, caps)
}

pub fn distinguishing_index(
    g: &Graph,
    max_d: usize,
) -> Result<DistinguishingResult, DistinguishError> {
    distinguishing_index_with(g, max_d, &SearchCaps::default())
}

pub fn distinguishing_index_with(
    g: &Graph,
    max_d: usize,
    caps: &SearchCaps,
) -> Result<DistinguishingResult, DistinguishError> {
    if g.order() < 2 {
        return Err(DistinguishError::TooSmall);
    }
    if g.has_k2_component() {
        return Err(DistinguishError::UndefinedForK2Component);
    }
    if g.size() > caps.max_edges {
        return Err(DistinguishError::SizeLimitExceeded {
            what: "size",
            value: g.size(),
            cap: caps.max_edges,
        });
    }
    exact(g, LabelingKind::Edge, max_d, caps)
}

fn exact(
    g: &Graph,
    kind: LabelingKind,
    max_d: usize,
    caps: &SearchCaps,
) -> Result<DistinguishingResult, DistinguishError> {
    let start = Instant::now();
    let items = match kind {
        LabelingKind::Vertex => g.order(),
        LabelingKind::Edge => g.size(),
    };
    let aut = group::automorphisms(g)?;
    let item_perms = if caps.orbit_pruning {
        aut.elements(caps.element_cap).map(|elements| {
            elements
                .iter()
                .filter(|p| !p.is_identity())
                .map(|p| match kind {
                    LabelingKind::Vertex => p.as_slice().to_vec(),
                    LabelingKind::Edge => p.on_edges(g).expect("automorphisms map edges to edges"),
                })
                .collect::<Vec<_>>()
        })
    } else {
        None
    };
    let mut search = ItemSearch::new(g, kind, items, caps.node_budget);
    if let Some(perms) = item_perms {
        search.set_orbit_pruning(perms);
    }
    for d in 1..=max_d.min(items.max(1)) {
        if let Some(labels) = search.run(d as u32, true, None)? {
            return Ok(DistinguishingResult {
                kind,
                value: d,
                witness: to_labeling(g, kind, labels)?,
                elapsed: start.elapsed(),
            });
        }
    }
    Err(DistinguishError::BudgetExceeded { kind, max_d })
}

/// Depth-first search for a distinguishing labeling with at most `d` labels,
/// trying `preferred[i]` first at position `i`. No label-renaming or orbit
/// pruning is applied, so the seed is the first leaf visited.
pub fn find_labeling_seeded(
    g: &Graph,
    kind: LabelingKind,
    d: usize,
    preferred: &[u32],
    node_budget: u64,
) -> Result<Option<Labeling>, DistinguishError> {
    let items = match kind {
        LabelingKind::Vertex => g.order(),
        LabelingKind::Edge => g.size(),
    };
    if preferred.len() != items {
        return Err(GraphError::Labeling(format!(
            "seed covers {} items, expected {items}",
            preferred.len()
        ))
        .into());
    }
    let mut search = ItemSearch::new(g, kind, items, node_budget);
    let found = search.run(d as u32, false, Some(preferred))?;
    Ok(found
        .map(|labels| to_labeling(g, kind, labels))
        .transpose()?)
}

fn to_labeling(g: &Graph, kind: LabelingKind, labels: Vec<u32>) -> Result<Labeling, GraphError> {
    Ok(match kind {
        LabelingKind::Vertex => Labeling::Vertex(VertexLabeling::new(labels)?),
        LabelingKind::Edge => Labeling::Edge(EdgeLabeling::new(g, &labels)?),
    })
}

struct ItemSearch<'a> {
    g: &'a Graph,
    kind: LabelingKind,
    items: usize,
    /// Non-identity group elements acting on item indices.
    perms: Vec<Vec<usize>>,
    /// `prefix_stab[k]`: indices into `perms` mapping items `0..k` onto themselves.
    prefix_stab: Vec<Vec<usize>>,
    labels: Vec<u32>,
    d: u32,
    nodes: u64,
    node_budget: u64,
}

impl<'a> ItemSearch<'a> {
    fn new(g: &'a Graph, kind: LabelingKind, items: usize, node_budget: u64) -> Self {
        ItemSearch {
            g,
            kind,
            items,
            perms: Vec::new(),
            prefix_stab: vec![Vec::new(); items + 1],
            labels: vec![0; items],
            d: 0,
            nodes: 0,
            node_budget,
        }
    }

    fn set_orbit_pruning(&mut self, perms: Vec<Vec<usize>>) {
        for (idx, p) in perms.iter().enumerate() {
            let mut running_max = 0;
            for k in 1..=self.items {
                running_max = running_max.max(p[k - 1]);
                if running_max == k - 1 {
                    self.prefix_stab[k].push(idx);
                }
            }
        }
        self.perms = perms;
    }

    fn run(
        &mut self,
        d: u32,
        canonical: bool,
        preferred: Option<&[u32]>,
    ) -> Result<Option<Vec<u32>>, DistinguishError> {
        self.d = d;
        self.labels.iter_mut().for_each(|l| *l = 0);
        if self.items == 0 {
            let preserved = self.preserved_with_free_rest(0);
            return Ok((!preserved).then(Vec::new));
        }
        if self.dfs(0, 0, canonical, preferred)? {
            Ok(Some(self.labels.clone()))
        } else {
            Ok(None)
        }
    }

    fn dfs(
        &mut self,
        k: usize,
        max_used: u32,
        canonical: bool,
        preferred: Option<&[u32]>,
    ) -> Result<bool, DistinguishError> {
        let top = if canonical {
            self.d.min(max_used + 1)
        } else {
            self.d
        };
        let first = preferred.map(|p| p[k]).filter(|&l| l >= 1 && l <= top);
        let order = first
            .into_iter()
            .chain((1..=top).filter(|&l| Some(l) != first));
        for label in order.collect::<Vec<_>>() {
            self.nodes += 1;
            if self.nodes > self.node_budget {
                return Err(DistinguishError::NodeBudgetExhausted(self.node_budget));
            }
            self.labels[k] = label;
            if canonical && !self.least_in_orbit(k + 1) {
                continue;
            }
            if self.preserved_with_free_rest(k + 1) {
                continue;
            }
            if k + 1 == self.items || self.dfs(k + 1, max_used.max(label), canonical, preferred)? {
                return Ok(true);
            }
        }
        self.labels[k] = 0;
        Ok(false)
    }

    fn least_in_orbit(&self, k: usize) -> bool {
        let l = &self.labels;
        self.prefix_stab[k].iter().all(|&idx| {
            let p = &self.perms[idx];
            for i in 0..k {
                let (moved, here) = (l[p[i]], l[i]);
                if moved != here {
                    return moved > here;
                }
            }
            true
        })
    }

    /// Some non-identity automorphism keeps the first `k` labels and fixes every later item.
    fn preserved_with_free_rest(&self, k: usize) -> bool {
        let fresh = |i: usize| self.d + 1 + i as u32;
        let colored = match self.kind {
            LabelingKind::Vertex => {
                let colors: Vec<u64> = (0..self.items)
                    .map(|i| if i < k { self.labels[i] } else { fresh(i) } as u64)
                    .collect();
                Colored::build(self.g, Some(&colors), None)
            }
            LabelingKind::Edge => {
                let colors: Vec<u32> = (0..self.items)
                    .map(|i| if i < k { self.labels[i] } else { fresh(i) })
                    .collect();
                Colored::build(self.g, None, Some(&colors))
            }
        };
        search::nontrivial_automorphism(&colored).is_some()
    }
}

/// Exact value against a claimed upper bound.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct BoundCheck {
    pub kind: LabelingKind,
    pub exact: usize,
    pub bound: usize,
    pub holds: bool,
}

pub fn verify_bound(
    g: &Graph,
    theorem_bound: usize,
    kind: LabelingKind,
) -> Result<BoundCheck, DistinguishError> {
    let result = match kind {
        LabelingKind::Vertex => distinguishing_number(g, g.order().max(1))?,
        LabelingKind::Edge => distinguishing_index(g, g.size().max(1))?,
    };
    Ok(BoundCheck {
        kind,
        exact: result.value,
        bound: theorem_bound,
        holds: result.value <= theorem_bound,
    })
}
