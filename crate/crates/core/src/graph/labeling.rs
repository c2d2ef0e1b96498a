use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::{Edge, Graph, GraphError};

/// Whether a labeling lives on vertices or on edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LabelingKind {
    Vertex,
    Edge,
}

impl std::str::FromStr for LabelingKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "vertex" => Ok(LabelingKind::Vertex),
            "edge" => Ok(LabelingKind::Edge),
            other => Err(format!("unknown labeling kind {other:?}")),
        }
    }
}

/// Labels on vertices `0..n`, all positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexLabeling {
    labels: Vec<u32>,
}

impl VertexLabeling {
    pub fn new(labels: Vec<u32>) -> Result<Self, GraphError> {
        if let Some(v) = labels.iter().position(|&l| l == 0) {
            return Err(GraphError::Labeling(format!("vertex {v} has label 0")));
        }
        Ok(VertexLabeling { labels })
    }

    pub fn constant(n: usize) -> Self {
        VertexLabeling { labels: vec![1; n] }
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn get(&self, v: usize) -> u32 {
        self.labels[v]
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Number of distinct labels used.
    pub fn label_count(&self) -> usize {
        self.labels.iter().collect::<BTreeSet<_>>().len()
    }

    pub fn max_label(&self) -> u32 {
        self.labels.iter().copied().max().unwrap_or(0)
    }

    pub fn check_order(&self, g: &Graph) -> Result<(), GraphError> {
        if self.labels.len() != g.order() {
            return Err(GraphError::Labeling(format!(
                "labeling covers {} vertices, graph has {}",
                self.labels.len(),
                g.order()
            )));
        }
        Ok(())
    }

    pub fn to_map(&self) -> BTreeMap<String, u32> {
        self.labels
            .iter()
            .enumerate()
            .map(|(v, &l)| (v.to_string(), l))
            .collect()
    }

    /// Parses `{"0": 1, "1": 2, ...}`; every vertex of `g` must appear.
    pub fn from_map(g: &Graph, map: &BTreeMap<String, u32>) -> Result<Self, GraphError> {
        let mut labels = vec![0u32; g.order()];
        for (key, &label) in map {
            let v: usize = key
                .trim()
                .parse()
                .map_err(|_| GraphError::Labeling(format!("bad vertex key {key:?}")))?;
            if v >= g.order() {
                return Err(GraphError::OutOfRange {
                    vertex: v,
                    n: g.order(),
                });
            }
            labels[v] = label;
        }
        if let Some(v) = labels.iter().position(|&l| l == 0) {
            return Err(GraphError::Labeling(format!("vertex {v} is unlabeled")));
        }
        Ok(VertexLabeling { labels })
    }
}

/// Labels on the edges of one graph, stored in that graph's edge order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeLabeling {
    entries: Vec<(Edge, u32)>,
}

impl EdgeLabeling {
    /// `labels[i]` goes on `g.edges()[i]`.
    pub fn new(g: &Graph, labels: &[u32]) -> Result<Self, GraphError> {
        if labels.len() != g.size() {
            return Err(GraphError::Labeling(format!(
                "labeling covers {} edges, graph has {}",
                labels.len(),
                g.size()
            )));
        }
        if let Some(i) = labels.iter().position(|&l| l == 0) {
            return Err(GraphError::Labeling(format!(
                "edge {} has label 0",
                g.edges()[i]
            )));
        }
        Ok(EdgeLabeling {
            entries: g
                .edges()
                .iter()
                .copied()
                .zip(labels.iter().copied())
                .collect(),
        })
    }

    pub fn constant(g: &Graph) -> Self {
        Self::new(g, &vec![1; g.size()]).expect("constant labels are positive")
    }

    pub fn entries(&self) -> &[(Edge, u32)] {
        &self.entries
    }

    pub fn labels(&self) -> Vec<u32> {
        self.entries.iter().map(|&(_, l)| l).collect()
    }

    pub fn get(&self, e: Edge) -> Option<u32> {
        self.entries
            .binary_search_by(|(x, _)| x.cmp(&e))
            .ok()
            .map(|i| self.entries[i].1)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn label_count(&self) -> usize {
        self.entries
            .iter()
            .map(|&(_, l)| l)
            .collect::<BTreeSet<_>>()
            .len()
    }

    pub fn max_label(&self) -> u32 {
        self.entries.iter().map(|&(_, l)| l).max().unwrap_or(0)
    }

    /// Confirms the labeling covers exactly the edges of `g`.
    pub fn check_graph(&self, g: &Graph) -> Result<(), GraphError> {
        let same = self.entries.len() == g.size()
            && self.entries.iter().zip(g.edges()).all(|((a, _), b)| a == b);
        if !same {
            return Err(GraphError::Labeling(
                "edge labeling does not match the graph's edge set".into(),
            ));
        }
        Ok(())
    }

    pub fn to_map(&self) -> BTreeMap<String, u32> {
        self.entries
            .iter()
            .map(|(e, l)| (e.to_string(), *l))
            .collect()
    }

    /// Parses `{"u-v": label, ...}`; every edge of `g` must appear, and nothing else.
    pub fn from_map(g: &Graph, map: &BTreeMap<String, u32>) -> Result<Self, GraphError> {
        let mut labels = vec![0u32; g.size()];
        for (key, &label) in map {
            let e: Edge = key.parse()?;
            let i = g
                .edge_index(e.u(), e.v())
                .ok_or_else(|| GraphError::Labeling(format!("{e} is not an edge of the graph")))?;
            labels[i] = label;
        }
        if let Some(i) = labels.iter().position(|&l| l == 0) {
            return Err(GraphError::Labeling(format!(
                "edge {} is unlabeled",
                g.edges()[i]
            )));
        }
        Self::new(g, &labels)
    }
}

/// Either kind of labeling.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Labeling {
    Vertex(VertexLabeling),
    Edge(EdgeLabeling),
}

impl Labeling {
    pub fn kind(&self) -> LabelingKind {
        match self {
            Labeling::Vertex(_) => LabelingKind::Vertex,
            Labeling::Edge(_) => LabelingKind::Edge,
        }
    }

    pub fn label_count(&self) -> usize {
        match self {
            Labeling::Vertex(l) => l.label_count(),
            Labeling::Edge(l) => l.label_count(),
        }
    }

    pub fn to_map(&self) -> BTreeMap<String, u32> {
        match self {
            Labeling::Vertex(l) => l.to_map(),
            Labeling::Edge(l) => l.to_map(),
        }
    }

    pub fn from_map(
        g: &Graph,
        kind: LabelingKind,
        map: &BTreeMap<String, u32>,
    ) -> Result<Self, GraphError> {
        Ok(match kind {
            LabelingKind::Vertex => Labeling::Vertex(VertexLabeling::from_map(g, map)?),
            LabelingKind::Edge => Labeling::Edge(EdgeLabeling::from_map(g, map)?),
        })
    }
}

impl Serialize for VertexLabeling {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_map().serialize(s)
    }
}

impl Serialize for EdgeLabeling {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_map().serialize(s)
    }
}

impl Serialize for Labeling {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_map().serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> Graph {
        Graph::new(3, &[(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn counts_distinct_labels() {
        let l = VertexLabeling::new(vec![2, 2, 1, 2, 1, 1]).unwrap();
        assert_eq!(l.label_count(), 2);
        assert!(VertexLabeling::new(vec![1, 0]).is_err());
    }

    #[test]
    fn vertex_json_shape() {
        let l = VertexLabeling::new(vec![1, 2, 3]).unwrap();
        let text = serde_json::to_string(&l).unwrap();
        assert_eq!(text, r#"{"0":1,"1":2,"2":3}"#);
        let map: BTreeMap<String, u32> = serde_json::from_str(&text).unwrap();
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        assert_eq!(VertexLabeling::from_map(&g, &map).unwrap(), l);
    }

    #[test]
    fn edge_json_shape() {
        let g = path3();
        let l = EdgeLabeling::new(&g, &[1, 2]).unwrap();
        let text = serde_json::to_string(&l).unwrap();
        assert_eq!(text, r#"{"0-1":1,"1-2":2}"#);
        let map: BTreeMap<String, u32> = serde_json::from_str(r#"{"2-1":2,"1-0":1}"#).unwrap();
        assert_eq!(EdgeLabeling::from_map(&g, &map).unwrap(), l);
    }

    #[test]
    fn incomplete_maps_are_rejected() {
        let g = path3();
        let map: BTreeMap<String, u32> = serde_json::from_str(r#"{"0-1":1}"#).unwrap();
        assert!(EdgeLabeling::from_map(&g, &map).is_err());
        let map: BTreeMap<String, u32> = serde_json::from_str(r#"{"0":1,"2":1}"#).unwrap();
        assert!(VertexLabeling::from_map(&g, &map).is_err());
        let map: BTreeMap<String, u32> =
            serde_json::from_str(r#"{"0-1":1,"1-2":1,"0-2":1}"#).unwrap();
        assert!(EdgeLabeling::from_map(&g, &map).is_err());
    }
}
