//! Constructive distinguishing labelings. Every procedure builds a labeling
//! and then certifies it with the labeled automorphism search; nothing is
//! returned on the strength of the construction alone.

use serde::Serialize;
use thiserror::Error;

use crate::distinguish::{self, DistinguishError};
use crate::families::{self, FamilyError, HalinStructure, Mycielskian};
use crate::graph::{
    EdgeLabeling, Graph, GraphError, HamiltonLimits, Labeling, LabelingKind, VertexLabeling,
};
use crate::group::{self, GroupError, Permutation};

/// Node budget for the seeded two-label searches.
pub const SEEDED_NODE_BUDGET: u64 = 20_000_000;

/// Which construction produced a labeling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Construction {
    CycleVertex,
    CycleEdge,
    Clique4Bfs,
    UniqueHamiltonianCycle,
    MopVertex,
    MopEdge,
    HalinVertex4,
    HalinVertex3,
    HalinVertex2,
    HalinEdge,
    MycielskianVertex,
    MycielskianEdge,
    MycielskiCopy,
    ExactSearch,
}

impl Construction {
    pub fn as_str(&self) -> &'static str {
        match self {
            Construction::CycleVertex => "cycle-vertex",
            Construction::CycleEdge => "cycle-edge",
            Construction::Clique4Bfs => "clique4-bfs",
            Construction::UniqueHamiltonianCycle => "unique-hamiltonian-cycle",
            Construction::MopVertex => "mop-vertex",
            Construction::MopEdge => "mop-edge",
            Construction::HalinVertex4 => "halin-vertex-4",
            Construction::HalinVertex3 => "halin-vertex-3",
            Construction::HalinVertex2 => "halin-vertex-2",
            Construction::HalinEdge => "halin-edge",
            Construction::MycielskianVertex => "mycielskian-vertex",
            Construction::MycielskianEdge => "mycielskian-edge",
            Construction::MycielskiCopy => "mycielski-copy",
            Construction::ExactSearch => "exact-search",
        }
    }
}

impl std::fmt::Display for Construction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertifiedLabeling {
    pub theorem: Construction,
    pub labels_used: usize,
    pub labeling: Labeling,
    pub certified: bool,
    /// The bound the construction promises.
    #[serde(skip)]
    pub bound: usize,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("construction failed: {reason}")]
    ConstructionFailed {
        reason: String,
        counterexample: Option<Permutation>,
    },
    #[error("K_3 is the exception; it needs {} labels", .0.labels_used)]
    K3Exception(Box<CertifiedLabeling>),
    #[error("K_4 is the exception; it needs {} labels", .0.labels_used)]
    K4Exception(Box<CertifiedLabeling>),
    #[error("graph has two vertices with the same open neighbourhood")]
    NotRThin,
    #[error("base labeling is not distinguishing")]
    BaseNotDistinguishing,
    #[error("cycle needs at least 3 vertices, got {0}")]
    TooSmall(usize),
    #[error(transparent)]
    Distinguish(#[from] DistinguishError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn precondition(msg: impl Into<String>) -> ConstructError {
    ConstructError::PreconditionFailed(msg.into())
}

/// Runs the labeled automorphism search and checks the promised bound.
pub fn certify(
    g: &Graph,
    labeling: Labeling,
    theorem: Construction,
    bound: usize,
) -> Result<CertifiedLabeling, ConstructError> {
    if let Some(p) = group::preserving_automorphism(g, &labeling)? {
        return Err(ConstructError::ConstructionFailed {
            reason: format!("{theorem} labeling is preserved by a non-identity automorphism"),
            counterexample: Some(p),
        });
    }
    let labels_used = labeling.label_count();
    if labels_used > bound {
        return Err(ConstructError::ConstructionFailed {
            reason: format!("{theorem} used {labels_used} labels, bound is {bound}"),
            counterexample: None,
        });
    }
    Ok(CertifiedLabeling {
        theorem,
        labels_used,
        labeling,
        certified: true,
        bound,
    })
}

/// Labels for a cycle read in cyclic order: three labels up to length 5,
/// otherwise label 2 at positions 0, 1 and 3 and label 1 elsewhere.
pub fn cycle_pattern(n: usize) -> Vec<u32> {
    match n {
        0..=2 => vec![1; n],
        3 => vec![1, 2, 3],
        4 => vec![1, 2, 3, 1],
        5 => vec![1, 2, 3, 1, 1],
        _ => {
            let mut p = vec![1; n];
            for i in [0, 1, 3] {
                p[i] = 2;
            }
            p
        }
    }
}

fn cycle_bound(n: usize) -> usize {
    if n <= 5 {
        3
    } else {
        2
    }
}

pub fn cycle_vertex_labeling(n: usize) -> Result<CertifiedLabeling, ConstructError> {
    if n < 3 {
        return Err(ConstructError::TooSmall(n));
    }
    let g = families::gen_standard(families::Standard::Cycle(n))?;
    let l = Labeling::Vertex(VertexLabeling::new(cycle_pattern(n))?);
    certify(&g, l, Construction::CycleVertex, cycle_bound(n))
}

/// Edge `{i, i+1}` of `C_n` gets the label at position `i` of the cycle pattern.
pub fn cycle_edge_labeling(n: usize) -> Result<CertifiedLabeling, ConstructError> {
    if n < 3 {
        return Err(ConstructError::TooSmall(n));
    }
    let g = families::gen_standard(families::Standard::Cycle(n))?;
    let labels = labels_along_cycle(&g, &(0..n).collect::<Vec<_>>(), &cycle_pattern(n), 1);
    let l = Labeling::Edge(EdgeLabeling::new(&g, &labels)?);
    certify(&g, l, Construction::CycleEdge, cycle_bound(n))
}

/// Edge labels aligned with `g.edges()`: cycle edge `{c[i], c[i+1]}` gets
/// `pattern[i]`, every other edge gets `rest`.
fn labels_along_cycle(g: &Graph, cycle: &[usize], pattern: &[u32], rest: u32) -> Vec<u32> {
    let mut labels = vec![rest; g.size()];
    for (i, &p) in pattern.iter().enumerate() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        labels[g.edge_index(a, b).expect("cycle edge")] = p;
    }
    labels
}

fn all_k4s(g: &Graph) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..g.order() {
        let up = |x: usize| g.neighbors(x).iter().copied().filter(move |&y| y > x);
        for b in up(a) {
            for c in up(b).filter(|&c| g.has_edge(a, c)) {
                for d in up(c).filter(|&d| g.has_edge(a, d) && g.has_edge(b, d)) {
                    out.push([a, b, c, d]);
                }
            }
        }
    }
    out
}

fn factorial_capped(k: usize, cap: u64) -> u64 {
    (1..=k as u64)
        .try_fold(1u64, |acc, x| acc.checked_mul(x))
        .unwrap_or(cap)
        .min(cap)
}

/// At most `max_degree - 1` labels for a connected graph with clique number 4
/// and maximum degree at least 5. A K_4 `v0 v1 v2 v3` is labeled
/// `D-1, 1, 2, 3`, the rest of `N(v0)` gets distinct labels from
/// `{1..D-2} \ {3}`, and the children of every later BFS vertex get distinct
/// labels from `{1..D-1}`. While another K_4 repeats the label set of the
/// first, or a preserving automorphism survives, the label of one offending
/// vertex is moved among its BFS siblings.
pub fn clique4_bfs_labeling(g: &Graph) -> Result<CertifiedLabeling, ConstructError> {
    if !g.is_connected() {
        return Err(precondition("graph is disconnected"));
    }
    let clique = g.clique_number();
    if clique.size != 4 {
        return Err(precondition(format!(
            "clique number is {}, need 4",
            clique.size
        )));
    }
    let delta = g.max_degree();
    if delta < 5 {
        return Err(precondition(format!(
            "maximum degree is {delta}, need at least 5"
        )));
    }
    let n = g.order();
    let top = (delta - 1) as u32;
    let core: [usize; 4] = clique
        .vertices
        .clone()
        .try_into()
        .expect("clique of size 4");
    let v0 = core[0];
    let mut labels = vec![0u32; n];
    labels[v0] = top;
    for (i, &v) in core[1..].iter().enumerate() {
        labels[v] = i as u32 + 1;
    }
    let mut spare = (4..=top - 1).chain([1, 2]);
    for &x in g.neighbors(v0) {
        if labels[x] == 0 {
            labels[x] = spare
                .next()
                .expect("N(v0) has at most D - 3 further vertices");
        }
    }
    let tree = g.bfs_tree(v0)?;
    for &x in &tree.order {
        if x == v0 {
            continue;
        }
        for (i, c) in tree.children(x).into_iter().enumerate() {
            labels[c] = i as u32 + 1;
        }
    }
    let frozen = |v: usize| v == v0 || tree.parent[v] == Some(v0);
    let mut core_labels = [top, 1, 2, 3];
    core_labels.sort_unstable();
    let k4s = all_k4s(g);
    let attempts = (n as u64).saturating_mul(factorial_capped(delta, 1 << 32));
    for _ in 0..=attempts {
        let duplicate = k4s.iter().find(|q| {
            **q != core && {
                let mut ls = q.map(|v| labels[v]);
                ls.sort_unstable();
                ls == core_labels
            }
        });
        let target = match duplicate {
            Some(q) => q.iter().copied().find(|&v| !frozen(v)),
            None => {
                let l = Labeling::Vertex(VertexLabeling::new(labels.clone())?);
                match group::preserving_automorphism(g, &l)? {
                    None => return certify(g, l, Construction::Clique4Bfs, delta - 1),
                    Some(p) => p.support().into_iter().find(|&v| !frozen(v)),
                }
            }
        };
        let Some(t) = target else {
            return Err(ConstructError::ConstructionFailed {
                reason: "offending vertices all lie in the closed neighbourhood of v0".into(),
                counterexample: None,
            });
        };
        let siblings = tree.children(tree.parent[t].expect("t is not the root"));
        let next = labels[t] % top + 1;
        if let Some(&s) = siblings.iter().find(|&&s| labels[s] == next) {
            labels[s] = labels[t];
        }
        labels[t] = next;
    }
    Err(ConstructError::ConstructionFailed {
        reason: format!("repair loop gave up after {attempts} attempts"),
        counterexample: None,
    })
}

fn unique_hamiltonian_cycle(g: &Graph) -> Result<Vec<usize>, ConstructError> {
    let limits = HamiltonLimits {
        max_cycles: 2,
        ..HamiltonLimits::default()
    };
    let mut cycles = g.hamiltonian_cycles_with(limits)?;
    match cycles.len() {
        1 => Ok(cycles.pop().unwrap()),
        0 => Err(precondition("graph has no Hamiltonian cycle")),
        _ => Err(precondition("graph has more than one Hamiltonian cycle")),
    }
}

/// Two labels for a graph of order at least 6 with exactly one Hamiltonian
/// cycle: the asymmetric cycle pattern laid along that cycle.
pub fn unique_hamiltonian_labeling(g: &Graph) -> Result<CertifiedLabeling, ConstructError> {
    let n = g.order();
    if n < 6 {
        return Err(precondition(format!("order {n} is below 6")));
    }
    let cycle = unique_hamiltonian_cycle(g)?;
    let pattern = cycle_pattern(n);
    let mut labels = vec![0; n];
    for (i, &v) in cycle.iter().enumerate() {
        labels[v] = pattern[i];
    }
    let l = Labeling::Vertex(VertexLabeling::new(labels)?);
    certify(g, l, Construction::UniqueHamiltonianCycle, 2)
}

fn exact_witness(g: &Graph, kind: LabelingKind) -> Result<CertifiedLabeling, ConstructError> {
    let r = match kind {
        LabelingKind::Vertex => distinguish::distinguishing_number(g, g.order())?,
        LabelingKind::Edge => distinguish::distinguishing_index(g, g.size())?,
    };
    certify(g, r.witness, Construction::ExactSearch, r.value)
}

fn check_mop(g: &Graph) -> Result<Vec<usize>, ConstructError> {
    let n = g.order();
    if n < 3 || g.size() != 2 * n - 3 || !g.is_connected() {
        return Err(precondition("not a maximal outerplanar graph"));
    }
    unique_hamiltonian_cycle(g)
}

/// Two labels on every MOP except K_3.
pub fn mop_vertex_labeling(g: &Graph) -> Result<CertifiedLabeling, ConstructError> {
    check_mop(g)?;
    match g.order() {
        3 => Err(ConstructError::K3Exception(Box::new(exact_witness(
            g,
            LabelingKind::Vertex,
        )?))),
        4 | 5 => {
            let w = exact_witness(g, LabelingKind::Vertex)?;
            certify(g, w.labeling, Construction::MopVertex, 2)
        }
        _ => {
            let w = unique_hamiltonian_labeling(g)?;
            certify(g, w.labeling, Construction::MopVertex, 2)
        }
    }
}

/// Runs the seeded two-label edge search; `None` becomes `ConstructionFailed`.
fn seeded_edge_search(
    g: &Graph,
    seed: &[u32],
    theorem: Construction,
) -> Result<CertifiedLabeling, ConstructError> {
    match distinguish::find_labeling_seeded(g, LabelingKind::Edge, 2, seed, SEEDED_NODE_BUDGET)? {
        Some(l) => certify(g, l, theorem, 2),
        None => Err(ConstructError::ConstructionFailed {
            reason: format!(
                "no two-label distinguishing edge labeling exists for this {theorem} instance"
            ),
            counterexample: None,
        }),
    }
}

/// Two edge labels on every MOP except K_3, by a search seeded along the
/// Hamiltonian path left after dropping one outer edge.
pub fn mop_edge_labeling(g: &Graph) -> Result<CertifiedLabeling, ConstructError> {
    let cycle = check_mop(g)?;
    if g.order() == 3 {
        return Err(ConstructError::K3Exception(Box::new(exact_witness(
            g,
            LabelingKind::Edge,
        )?)));
    }
    let mut pattern = cycle_pattern(cycle.len().max(6));
    pattern.truncate(cycle.len() - 1);
    let seed = labels_along_cycle(g, &cycle, &pattern, 1);
    seeded_edge_search(g, &seed, Construction::MopEdge)
}

/// The strongest applicable leaf-cycle construction: two labels when no
/// internal vertex has degree 3 and there are at least six leaves, three
/// when no internal vertex has degree 3, otherwise the leaf cycle plus one
/// fresh label on every internal vertex.
pub fn halin_vertex_labeling(h: &HalinStructure) -> Result<CertifiedLabeling, ConstructError> {
    let tree = h.plane_tree.tree();
    let internal = h.internal_vertices();
    let leaves = h.leaf_cycle.len();
    let has_degree3 = internal.iter().any(|&v| tree.degree(v) == 3);
    let pattern = cycle_pattern(leaves);
    let mut labels = vec![0; h.graph.order()];
    for (i, &v) in h.leaf_cycle.iter().enumerate() {
        labels[v] = pattern[i];
    }
    let (theorem, bound, inner) = if !has_degree3 && leaves >= 6 {
        (Construction::HalinVertex2, 2, 1)
    } else if !has_degree3 {
        (Construction::HalinVertex3, 3, 1)
    } else {
        (
            Construction::HalinVertex4,
            4,
            pattern.iter().max().copied().unwrap_or(0) + 1,
        )
    };
    for v in internal {
        labels[v] = inner;
    }
    let l = Labeling::Vertex(VertexLabeling::new(labels)?);
    certify(&h.graph, l, theorem, bound)
}

/// Two edge labels on every Halin graph except K_4, by a search seeded
/// with the asymmetric pattern along a Hamiltonian cycle.
pub fn halin_edge_labeling(h: &HalinStructure) -> Result<CertifiedLabeling, ConstructError> {
    let g = &h.graph;
    if g.order() == 4 {
        return Err(ConstructError::K4Exception(Box::new(exact_witness(
            g,
            LabelingKind::Edge,
        )?)));
    }
    let limits = HamiltonLimits {
        max_cycles: 1,
        ..HamiltonLimits::default()
    };
    let cycle = g
        .hamiltonian_cycles_with(limits)?
        .pop()
        .ok_or_else(|| precondition("Halin graph without a Hamiltonian cycle"))?;
    let pattern = cycle_pattern(cycle.len().max(6));
    let seed = labels_along_cycle(g, &cycle, &pattern[..cycle.len()], 1);
    seeded_edge_search(g, &seed, Construction::HalinEdge)
}

fn check_mycielskian(g: &Graph, mu: &Mycielskian, min_order: usize) -> Result<(), ConstructError> {
    if mu.map.base_n != g.order() || mu.graph.order() != 2 * g.order() + 1 {
        return Err(precondition("Mycielskian does not belong to this graph"));
    }
    if g.order() < min_order {
        return Err(precondition(format!(
            "order {} is below {min_order}",
            g.order()
        )));
    }
    if !g.is_r_thin() {
        return Err(ConstructError::NotRThin);
    }
    Ok(())
}

/// Copies a distinguishing labeling of `g` onto both layers of `mu(g)` and
/// gives the apex a fresh label.
pub fn mycielskian_extend_vertex(
    g: &Graph,
    base: &VertexLabeling,
    mu: &Mycielskian,
) -> Result<CertifiedLabeling, ConstructError> {
    check_mycielskian(g, mu, 2)?;
    base.check_order(g)?;
    if !group::labeled_stabilizer_is_trivial(g, &Labeling::Vertex(base.clone()))? {
        return Err(ConstructError::BaseNotDistinguishing);
    }
    let labels = copy_vertex_labels(base, mu, base.max_label() + 1);
    let l = Labeling::Vertex(VertexLabeling::new(labels)?);
    certify(
        &mu.graph,
        l,
        Construction::MycielskianVertex,
        base.label_count() + 1,
    )
}

fn copy_vertex_labels(base: &VertexLabeling, mu: &Mycielskian, apex: u32) -> Vec<u32> {
    let mut labels = vec![0; mu.graph.order()];
    for (i, &c) in base.labels().iter().enumerate() {
        labels[mu.map.v_ids[i]] = c;
        labels[mu.map.u_ids[i]] = c;
    }
    labels[mu.map.w_id] = apex;
    labels
}

/// Edge labels of `mu(g)`: `v_i v_j`, `u_i v_j` and `v_i u_j` all copy the
/// label of `v_i v_j`; the apex edges get `apex`.
fn copy_edge_labels(g: &Graph, base: &EdgeLabeling, mu: &Mycielskian, apex: u32) -> Vec<u32> {
    let h = &mu.graph;
    let mut labels = vec![0; h.size()];
    let mut set =
        |a: usize, b: usize, c: u32| labels[h.edge_index(a, b).expect("edge of mu(G)")] = c;
    for &(e, c) in base.entries() {
        let (i, j) = e.endpoints();
        let m = &mu.map;
        set(m.v_ids[i], m.v_ids[j], c);
        set(m.u_ids[i], m.v_ids[j], c);
        set(m.v_ids[i], m.u_ids[j], c);
    }
    for i in 0..g.order() {
        set(mu.map.u_ids[i], mu.map.w_id, apex);
    }
    labels
}

pub fn mycielskian_extend_edge(
    g: &Graph,
    base: &EdgeLabeling,
    mu: &Mycielskian,
) -> Result<CertifiedLabeling, ConstructError> {
    if g.has_k2_component() {
        return Err(DistinguishError::UndefinedForK2Component.into());
    }
    check_mycielskian(g, mu, 3)?;
    base.check_graph(g)?;
    if !group::labeled_stabilizer_is_trivial(g, &Labeling::Edge(base.clone()))? {
        return Err(ConstructError::BaseNotDistinguishing);
    }
    let labels = copy_edge_labels(g, base, mu, base.max_label() + 1);
    let l = Labeling::Edge(EdgeLabeling::new(&mu.graph, &labels)?);
    certify(
        &mu.graph,
        l,
        Construction::MycielskianEdge,
        base.label_count() + 1,
    )
}

/// A distinguishing labeling of `M_i`: exact search up to `M_4`, then the
/// copy construction from `M_{i-1}` with label 1 on the apex (vertex case)
/// or on every apex edge (edge case).
pub fn mycielski_iterate_labeling(
    i: usize,
    kind: LabelingKind,
) -> Result<CertifiedLabeling, ConstructError> {
    mycielski_iterate_labeling_with_cap(i, kind, families::DEFAULT_MYCIELSKI_CAP)
}

pub fn mycielski_iterate_labeling_with_cap(
    i: usize,
    kind: LabelingKind,
    cap: usize,
) -> Result<CertifiedLabeling, ConstructError> {
    let g = families::mycielski_sequence_with_cap(i, cap)?;
    if i <= 4 {
        return exact_witness(&g, kind);
    }
    let prev = families::mycielski_sequence_with_cap(i - 1, cap)?;
    let base = mycielski_iterate_labeling_with_cap(i - 1, kind, cap)?;
    let mu = families::mycielskian(&prev);
    let labeling = match (&base.labeling, kind) {
        (Labeling::Vertex(b), LabelingKind::Vertex) => {
            Labeling::Vertex(VertexLabeling::new(copy_vertex_labels(b, &mu, 1))?)
        }
        (Labeling::Edge(b), LabelingKind::Edge) => Labeling::Edge(EdgeLabeling::new(
            &mu.graph,
            &copy_edge_labels(&prev, b, &mu, 1),
        )?),
        _ => unreachable!("base labeling has the requested kind"),
    };
    certify(
        &mu.graph,
        labeling,
        Construction::MycielskiCopy,
        base.labels_used,
    )
}
