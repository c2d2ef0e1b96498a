//! Survey and conjecture runners. Rows are computed on a worker pool and
//! emitted sorted by `(family, n, canonical form)`, so output does not depend
//! on scheduling.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::constructive::{self, CertifiedLabeling, ConstructError};
use crate::distinguish::{self, DistinguishError, SearchCaps};
use crate::families::{self, FamilyError, HalinStructure, Standard};
use crate::graph::{graph6, Graph, LabelingKind};
use crate::group::canonical_key;

pub const SCHEMA_VERSION: u32 = 1;

/// Column order of the survey CSV.
pub const SURVEY_COLUMNS: [&str; 22] = [
    "family",
    "name",
    "n",
    "m",
    "graph6",
    "max_degree",
    "clique_number",
    "chromatic_number",
    "exact_d",
    "exact_d_index",
    "exact_status",
    "vertex_theorem",
    "vertex_labels",
    "vertex_bound",
    "vertex_holds",
    "edge_theorem",
    "edge_labels",
    "edge_bound",
    "edge_holds",
    "exception",
    "error",
    "elapsed_ms",
];

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("invalid range {0:?}")]
    BadRange(String),
    #[error("worker pool: {0}")]
    Pool(String),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Distinguish(#[from] DistinguishError),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Mop,
    Halin,
    Mycielski,
    Clique4,
    Standard,
}

impl Family {
    pub fn as_str(&self) -> &'static str {
        match self {
            Family::Mop => "mop",
            Family::Halin => "halin",
            Family::Mycielski => "mycielski",
            Family::Clique4 => "clique4",
            Family::Standard => "standard",
        }
    }

    /// Default `n` range: order for the enumerated families, index for Mycielski
    /// graphs, largest order for the seeded clique-4 graphs.
    pub fn default_range(&self) -> (usize, usize) {
        match self {
            Family::Mop => (3, 9),
            Family::Halin => (4, 9),
            Family::Mycielski => (2, 5),
            Family::Clique4 => (9, 16),
            Family::Standard => (3, 8),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = ReportError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "mop" => Ok(Family::Mop),
            "halin" => Ok(Family::Halin),
            "mycielski" => Ok(Family::Mycielski),
            "clique4" => Ok(Family::Clique4),
            "standard" => Ok(Family::Standard),
            _ => Err(ReportError::UnknownFamily(s.to_string())),
        }
    }
}

/// Parses `"7"`, `"3..9"`, `"3..=9"` or `"3-9"` into an inclusive range.
pub fn parse_range(s: &str) -> Result<(usize, usize), ReportError> {
    let bad = || ReportError::BadRange(s.to_string());
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    let (lo, hi) = if let Some((a, b)) = s.split_once("..=") {
        (num(a)?, num(b)?)
    } else if let Some((a, b)) = s.split_once("..") {
        (num(a)?, num(b)?)
    } else if let Some((a, b)) = s.split_once('-') {
        (num(a)?, num(b)?)
    } else {
        let n = num(s)?;
        (n, n)
    };
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub family: Family,
    pub n_min: usize,
    pub n_max: usize,
    /// `None` runs both vertex and edge checks.
    pub kind: Option<LabelingKind>,
    pub max_vertices: usize,
    pub max_edges: usize,
    pub node_budget: u64,
    pub workers: usize,
    pub seed: u64,
    /// Number of seeded graphs for the clique-4 family.
    pub count: usize,
    /// Largest order for which the chromatic number is computed.
    pub chromatic_cap: usize,
}

impl RunConfig {
    pub fn new(family: Family) -> Self {
        let (n_min, n_max) = family.default_range();
        let caps = SearchCaps::default();
        RunConfig {
            family,
            n_min,
            n_max,
            kind: None,
            max_vertices: caps.max_vertices,
            max_edges: caps.max_edges,
            node_budget: caps.node_budget,
            workers: 0,
            seed: 1,
            count: 20,
            chromatic_cap: 20,
        }
    }

    pub fn caps(&self) -> SearchCaps {
        SearchCaps {
            max_vertices: self.max_vertices,
            max_edges: self.max_edges,
            node_budget: self.node_budget,
            ..SearchCaps::default()
        }
    }

    fn wants(&self, kind: LabelingKind) -> bool {
        self.kind.is_none_or(|k| k == kind)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SurveyRow {
    pub family: String,
    pub name: String,
    pub n: usize,
    pub m: usize,
    pub graph6: String,
    pub max_degree: usize,
    pub clique_number: usize,
    pub chromatic_number: Option<usize>,
    pub exact_d: Option<usize>,
    pub exact_d_index: Option<usize>,
    /// `exact`, or `bound-only` when a value was beyond the search caps.
    pub exact_status: String,
    pub vertex_theorem: Option<String>,
    pub vertex_labels: Option<usize>,
    pub vertex_bound: Option<usize>,
    pub vertex_holds: Option<bool>,
    pub edge_theorem: Option<String>,
    pub edge_labels: Option<usize>,
    pub edge_bound: Option<usize>,
    pub edge_holds: Option<bool>,
    pub exception: Option<String>,
    pub error: Option<String>,
    pub elapsed_ms: u128,
    #[serde(skip)]
    pub key: String,
    #[serde(skip)]
    pub witnesses: Vec<CertifiedLabeling>,
}

impl SurveyRow {
    pub fn is_violation(&self) -> bool {
        self.exception.is_none()
            && (self.vertex_holds == Some(false)
                || self.edge_holds == Some(false)
                || self.construction_failed())
    }

    fn construction_failed(&self) -> bool {
        self.error
            .as_deref()
            .is_some_and(|e| e.starts_with("construction failed"))
    }

    fn tag(&mut self, tag: &str) {
        match &mut self.exception {
            Some(t) if !t.split(';').any(|x| x == tag) => {
                t.push(';');
                t.push_str(tag);
            }
            Some(_) => {}
            None => self.exception = Some(tag.to_string()),
        }
    }

    fn push_error(&mut self, e: impl fmt::Display) {
        let msg = e.to_string();
        match &mut self.error {
            Some(t) => {
                t.push_str("; ");
                t.push_str(&msg);
            }
            None => self.error = Some(msg),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SurveySummary {
    pub rows: usize,
    pub violations: usize,
    pub errors: usize,
    pub exceptions: usize,
    pub bound_only: usize,
    /// Rows with chromatic number 4 and clique number 3.
    pub chi4_omega3: usize,
    pub violating_graphs: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SurveyReport {
    pub schema_version: u32,
    pub config: RunConfig,
    pub rows: Vec<SurveyRow>,
    pub summary: SurveySummary,
}

impl SurveyReport {
    /// 0 when clean, 2 on a violation outside the tagged exceptions, 1 on other errors.
    pub fn exit_code(&self) -> i32 {
        if self.summary.violations > 0 {
            2
        } else if self.summary.errors > 0 {
            1
        } else {
            0
        }
    }

    pub fn write_csv<W: std::io::Write>(
        &self,
        out: W,
        with_elapsed: bool,
    ) -> Result<(), ReportError> {
        let mut w = csv::Writer::from_writer(out);
        let columns = if with_elapsed {
            &SURVEY_COLUMNS[..]
        } else {
            &SURVEY_COLUMNS[..21]
        };
        w.write_record(columns)?;
        for r in &self.rows {
            let opt = |x: Option<usize>| x.map(|v| v.to_string()).unwrap_or_default();
            let flag = |x: Option<bool>| x.map(|v| v.to_string()).unwrap_or_default();
            let mut rec = vec![
                r.family.clone(),
                r.name.clone(),
                r.n.to_string(),
                r.m.to_string(),
                r.graph6.clone(),
                r.max_degree.to_string(),
                r.clique_number.to_string(),
                opt(r.chromatic_number),
                opt(r.exact_d),
                opt(r.exact_d_index),
                r.exact_status.clone(),
                r.vertex_theorem.clone().unwrap_or_default(),
                opt(r.vertex_labels),
                opt(r.vertex_bound),
                flag(r.vertex_holds),
                r.edge_theorem.clone().unwrap_or_default(),
                opt(r.edge_labels),
                opt(r.edge_bound),
                flag(r.edge_holds),
                r.exception.clone().unwrap_or_default(),
                r.error.clone().unwrap_or_default(),
            ];
            if with_elapsed {
                rec.push(r.elapsed_ms.to_string());
            }
            w.write_record(&rec)?;
        }
        w.flush()?;
        Ok(())
    }
}

/// What a survey row is built from.
enum Item {
    Graph { name: String, graph: Graph },
    Halin(HalinStructure),
    Mycielski(usize, Graph),
}

impl Item {
    fn graph(&self) -> &Graph {
        match self {
            Item::Graph { graph, .. } | Item::Mycielski(_, graph) => graph,
            Item::Halin(h) => &h.graph,
        }
    }
}

fn items(cfg: &RunConfig) -> Result<Vec<Item>, ReportError> {
    let mut out = Vec::new();
    let graph = |name: String, graph: Graph| Item::Graph { name, graph };
    match cfg.family {
        Family::Mop => {
            for n in cfg.n_min..=cfg.n_max {
                for g in families::enumerate_mops(n, families::DEFAULT_MOP_CAP)? {
                    out.push(graph(format!("mop{n}"), g));
                }
            }
        }
        Family::Halin => {
            for n in cfg.n_min..=cfg.n_max {
                out.extend(
                    families::enumerate_halin_structures(n, families::DEFAULT_HALIN_CAP)?
                        .into_iter()
                        .map(Item::Halin),
                );
            }
        }
        Family::Mycielski => {
            for i in cfg.n_min..=cfg.n_max {
                out.push(Item::Mycielski(i, families::mycielski_sequence(i)?));
            }
        }
        Family::Clique4 => {
            for (i, g) in families::clique4_graphs(cfg.count, cfg.seed, cfg.n_max)
                .into_iter()
                .enumerate()
            {
                out.push(graph(format!("clique4-{i}"), g));
            }
        }
        Family::Standard => {
            for n in cfg.n_min.max(3)..=cfg.n_max {
                out.push(graph(
                    format!("P{n}"),
                    families::gen_standard(Standard::Path(n))?,
                ));
                out.push(graph(
                    format!("C{n}"),
                    families::gen_standard(Standard::Cycle(n))?,
                ));
                out.push(graph(
                    format!("K{n}"),
                    families::gen_standard(Standard::Complete(n))?,
                ));
                if n >= 4 {
                    out.push(graph(
                        format!("W{}", n - 1),
                        families::gen_standard(Standard::Wheel(n - 1))?,
                    ));
                }
                if n % 2 == 0 {
                    let p = n / 2;
                    out.push(graph(
                        format!("K{p},{p}"),
                        families::gen_standard(Standard::CompleteBipartite(p, p))?,
                    ));
                }
            }
        }
    }
    Ok(out)
}

fn is_planar_family(f: Family) -> bool {
    matches!(f, Family::Mop | Family::Halin)
}

/// Fills the construction columns for one labeling kind.
fn record(
    row: &mut SurveyRow,
    kind: LabelingKind,
    result: Result<CertifiedLabeling, ConstructError>,
    exact: Option<usize>,
) {
    let (labeling, tag) = match result {
        Ok(c) => (c, None),
        Err(ConstructError::K3Exception(w)) => (*w, Some("K3")),
        Err(ConstructError::K4Exception(w)) => (*w, Some("K4")),
        Err(ConstructError::Distinguish(DistinguishError::UndefinedForK2Component)) => return,
        Err(e) => {
            row.push_error(e);
            return;
        }
    };
    // exceptions are judged against the two-label bound they miss
    let bound = if tag.is_some() { 2 } else { labeling.bound };
    let holds =
        labeling.certified && labeling.labels_used <= bound && exact.is_none_or(|d| d <= bound);
    match kind {
        LabelingKind::Vertex => {
            row.vertex_theorem = Some(labeling.theorem.to_string());
            row.vertex_labels = Some(labeling.labels_used);
            row.vertex_bound = Some(bound);
            row.vertex_holds = Some(holds);
        }
        LabelingKind::Edge => {
            row.edge_theorem = Some(labeling.theorem.to_string());
            row.edge_labels = Some(labeling.labels_used);
            row.edge_bound = Some(bound);
            row.edge_holds = Some(holds);
        }
    }
    if let Some(t) = tag {
        row.tag(t);
    }
    row.witnesses.push(labeling);
}

fn exact_value(
    row: &mut SurveyRow,
    g: &Graph,
    kind: LabelingKind,
    caps: &SearchCaps,
) -> Option<usize> {
    let r = match kind {
        LabelingKind::Vertex => distinguish::distinguishing_number_with(g, g.order().max(1), caps),
        LabelingKind::Edge => distinguish::distinguishing_index_with(g, g.size().max(1), caps),
    };
    match r {
        Ok(r) => Some(r.value),
        Err(
            DistinguishError::SizeLimitExceeded { .. } | DistinguishError::NodeBudgetExhausted(_),
        ) => {
            row.exact_status = "bound-only".into();
            None
        }
        Err(DistinguishError::UndefinedForK2Component) => None,
        Err(e) => {
            row.push_error(e);
            None
        }
    }
}

fn survey_row(cfg: &RunConfig, item: &Item) -> SurveyRow {
    let start = Instant::now();
    let g = item.graph();
    let caps = cfg.caps();
    let clique = g.clique_number();
    let mut row = SurveyRow {
        family: cfg.family.to_string(),
        n: g.order(),
        m: g.size(),
        graph6: graph6::to_graph6(g),
        max_degree: g.max_degree(),
        clique_number: clique.size,
        exact_status: "exact".into(),
        key: canonical_key(g),
        ..SurveyRow::default()
    };
    row.name = match item {
        Item::Graph { name, .. } => name.clone(),
        Item::Halin(h) => format!("halin{}-l{}", g.order(), h.leaf_cycle.len()),
        Item::Mycielski(i, _) => format!("M{i}"),
    };
    if is_planar_family(cfg.family) && g.order() <= cfg.chromatic_cap {
        match g.chromatic_number_with_cap(cfg.chromatic_cap) {
            Ok(chi) => row.chromatic_number = Some(chi),
            Err(e) => row.push_error(e),
        }
    }
    for kind in [LabelingKind::Vertex, LabelingKind::Edge] {
        if !cfg.wants(kind) {
            continue;
        }
        let exact = exact_value(&mut row, g, kind, &caps);
        match kind {
            LabelingKind::Vertex => row.exact_d = exact,
            LabelingKind::Edge => row.exact_d_index = exact,
        }
        let built = match (item, kind) {
            (Item::Halin(h), LabelingKind::Vertex) => Some(constructive::halin_vertex_labeling(h)),
            (Item::Halin(h), LabelingKind::Edge) => Some(constructive::halin_edge_labeling(h)),
            (Item::Mycielski(i, _), k) => Some(constructive::mycielski_iterate_labeling(*i, k)),
            (Item::Graph { .. }, k) => match (cfg.family, k) {
                (Family::Mop, LabelingKind::Vertex) => Some(constructive::mop_vertex_labeling(g)),
                (Family::Mop, LabelingKind::Edge) => Some(constructive::mop_edge_labeling(g)),
                (Family::Clique4, LabelingKind::Vertex) => {
                    Some(constructive::clique4_bfs_labeling(g))
                }
                (Family::Standard, LabelingKind::Vertex) if row.name.starts_with('C') => {
                    Some(constructive::cycle_vertex_labeling(g.order()))
                }
                (Family::Standard, LabelingKind::Edge) if row.name.starts_with('C') => {
                    Some(constructive::cycle_edge_labeling(g.order()))
                }
                _ => None,
            },
        };
        if let Some(result) = built {
            record(&mut row, kind, result, exact);
        }
    }
    if cfg.family == Family::Halin {
        if let (Some(d), Some(b)) = (row.exact_d, row.vertex_bound) {
            if d == b && b > 2 {
                row.tag("equality");
            }
        }
    }
    row.elapsed_ms = start.elapsed().as_millis();
    row
}

fn pool(workers: usize) -> Result<rayon::ThreadPool, ReportError> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| ReportError::Pool(e.to_string()))
}

/// Runs every applicable construction and exact computation over the family.
pub fn survey(cfg: &RunConfig) -> Result<SurveyReport, ReportError> {
    let items = items(cfg)?;
    let mut rows: Vec<SurveyRow> =
        pool(cfg.workers)?.install(|| items.par_iter().map(|it| survey_row(cfg, it)).collect());
    rows.sort_by(|a, b| (&a.family, a.n, &a.key, &a.name).cmp(&(&b.family, b.n, &b.key, &b.name)));
    let mut summary = SurveySummary {
        rows: rows.len(),
        ..SurveySummary::default()
    };
    for r in &rows {
        if r.is_violation() {
            summary.violations += 1;
            summary.violating_graphs.push(r.graph6.clone());
        }
        if r.error.is_some() && !r.construction_failed() {
            summary.errors += 1;
        }
        if r.exception.is_some() {
            summary.exceptions += 1;
        }
        if r.exact_status == "bound-only" {
            summary.bound_only += 1;
        }
        if r.chromatic_number == Some(4) && r.clique_number == 3 {
            summary.chi4_omega3 += 1;
        }
    }
    Ok(SurveyReport {
        schema_version: SCHEMA_VERSION,
        config: cfg.clone(),
        rows,
        summary,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureRow {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub d: usize,
    pub d_mu: usize,
    pub d_index: usize,
    pub d_index_mu: usize,
    pub vertex_violation: bool,
    pub edge_violation: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConjectureReport {
    pub schema_version: u32,
    pub n_min: usize,
    pub n_max: usize,
    pub graphs: usize,
    pub rows: Vec<ConjectureRow>,
    /// Graphs with `D(mu(G)) > D(G)`.
    pub vertex_violations: Vec<String>,
    /// Graphs with `D'(mu(G)) > D'(G)`.
    pub edge_violations: Vec<String>,
}

impl ConjectureReport {
    pub fn to_json(&self) -> Result<String, ReportError> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn write_csv<W: std::io::Write>(&self, out: W) -> Result<(), ReportError> {
        let mut w = csv::Writer::from_writer(out);
        for r in &self.rows {
            w.serialize(r)?;
        }
        w.flush()?;
        Ok(())
    }
}

/// Caps for the conjecture run: `mu(K_6)` has 13 vertices and 51 edges.
pub fn conjecture_caps() -> SearchCaps {
    SearchCaps {
        max_edges: 64,
        ..SearchCaps::default()
    }
}

/// Compares `D(mu(G))` with `D(G)` and `D'(mu(G))` with `D'(G)` for every
/// connected graph of order `n_min..=n_max`. Violations are findings.
pub fn conjecture(
    n_min: usize,
    n_max: usize,
    workers: usize,
) -> Result<ConjectureReport, ReportError> {
    let n_min = n_min.max(3);
    let mut graphs = Vec::new();
    for n in n_min..=n_max {
        graphs.extend(families::enumerate_connected(
            n,
            families::DEFAULT_CONNECTED_CAP,
        )?);
    }
    let caps = conjecture_caps();
    let rows: Result<Vec<ConjectureRow>, DistinguishError> = pool(workers)?.install(|| {
        graphs
            .par_iter()
            .map(|g| {
                let mu = families::mycielskian(g).graph;
                let d = distinguish::distinguishing_number_with(g, g.order(), &caps)?.value;
                let d_mu = distinguish::distinguishing_number_with(&mu, mu.order(), &caps)?.value;
                let d_index = distinguish::distinguishing_index_with(g, g.size(), &caps)?.value;
                let d_index_mu =
                    distinguish::distinguishing_index_with(&mu, mu.size(), &caps)?.value;
                Ok(ConjectureRow {
                    graph6: graph6::to_graph6(g),
                    n: g.order(),
                    m: g.size(),
                    d,
                    d_mu,
                    d_index,
                    d_index_mu,
                    vertex_violation: d_mu > d,
                    edge_violation: d_index_mu > d_index,
                })
            })
            .collect()
    });
    let mut keyed: BTreeMap<(usize, usize, String), ConjectureRow> = BTreeMap::new();
    for (g, r) in graphs.iter().zip(rows?) {
        keyed.insert((g.order(), g.size(), canonical_key(g)), r);
    }
    let rows: Vec<ConjectureRow> = keyed.into_values().collect();
    Ok(ConjectureReport {
        schema_version: SCHEMA_VERSION,
        n_min,
        n_max,
        graphs: rows.len(),
        vertex_violations: rows
            .iter()
            .filter(|r| r.vertex_violation)
            .map(|r| r.graph6.clone())
            .collect(),
        edge_violations: rows
            .iter()
            .filter(|r| r.edge_violation)
            .map(|r| r.graph6.clone())
            .collect(),
        rows,
    })
}
