use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::FamilyError;
use crate::graph::Graph;
use crate::group::canonical_key;

pub const DEFAULT_HALIN_CAP: usize = 11;

/// A tree with a cyclic order of neighbours at every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneTree {
    tree: Graph,
    rotation: Vec<Vec<usize>>,
    root: usize,
}

impl PlaneTree {
    /// Checks that `tree` is a tree on at least four vertices with no vertex
    /// of degree two and that `rotation[v]` orders exactly the neighbours of `v`.
    pub fn new(tree: Graph, rotation: Vec<Vec<usize>>, root: usize) -> Result<Self, FamilyError> {
        let n = tree.order();
        let invalid = |msg: String| Err(FamilyError::InvalidTree(msg));
        if n < 4 {
            return invalid(format!("{n} vertices, need at least 4"));
        }
        if tree.size() != n - 1 || !tree.is_connected() {
            return invalid("not a tree".into());
        }
        if let Some(v) = (0..n).find(|&v| tree.degree(v) == 2) {
            return invalid(format!("vertex {v} has degree 2"));
        }
        if rotation.len() != n || root >= n {
            return invalid("rotation system does not match the tree".into());
        }
        for (v, order) in rotation.iter().enumerate() {
            let mut sorted = order.clone();
            sorted.sort_unstable();
            if sorted != tree.neighbors(v) {
                return invalid(format!(
                    "rotation at {v} is not a permutation of its neighbours"
                ));
            }
        }
        Ok(PlaneTree {
            tree,
            rotation,
            root,
        })
    }

    /// Neighbours in ascending order at every vertex, rooted at vertex 0.
    pub fn with_sorted_rotation(tree: Graph) -> Result<Self, FamilyError> {
        let rotation = (0..tree.order())
            .map(|v| tree.neighbors(v).to_vec())
            .collect();
        Self::new(tree, rotation, 0)
    }

    pub fn tree(&self) -> &Graph {
        &self.tree
    }

    pub fn rotation(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.tree.degree(v) == 1
    }

    /// Leaves in the order met by a depth-first walk that turns through each
    /// rotation starting just after the edge it arrived on.
    pub fn leaf_order(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![(self.root, None::<usize>)];
        while let Some((v, parent)) = stack.pop() {
            if self.is_leaf(v) {
                out.push(v);
            }
            let rot = &self.rotation[v];
            let start = parent.map_or(0, |p| rot.iter().position(|&x| x == p).unwrap() + 1);
            let children: Vec<usize> = (0..rot.len())
                .map(|i| rot[(start + i) % rot.len()])
                .filter(|&x| Some(x) != parent)
                .collect();
            for &c in children.iter().rev() {
                stack.push((c, Some(v)));
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalinStructure {
    pub plane_tree: PlaneTree,
    pub leaf_cycle: Vec<usize>,
    pub graph: Graph,
}

#[derive(Debug, Clone, Serialize)]
pub struct HalinJson {
    pub tree_edges: Vec<[usize; 2]>,
    pub child_order: Vec<Vec<usize>>,
    pub leaf_cycle: Vec<usize>,
}

impl HalinStructure {
    pub fn internal_vertices(&self) -> Vec<usize> {
        (0..self.graph.order())
            .filter(|&v| !self.plane_tree.is_leaf(v))
            .collect()
    }

    pub fn to_json(&self) -> HalinJson {
        HalinJson {
            tree_edges: self
                .plane_tree
                .tree
                .edges()
                .iter()
                .map(|e| [e.u(), e.v()])
                .collect(),
            child_order: self.plane_tree.rotation.clone(),
            leaf_cycle: self.leaf_cycle.clone(),
        }
    }
}

pub fn halin_from_plane_tree(t: PlaneTree) -> HalinStructure {
    let leaf_cycle = t.leaf_order();
    let mut pairs: Vec<(usize, usize)> = t.tree.edges().iter().map(|e| e.endpoints()).collect();
    let l = leaf_cycle.len();
    pairs.extend((0..l).map(|i| (leaf_cycle[i], leaf_cycle[(i + 1) % l])));
    let graph = Graph::new(t.tree.order(), &pairs).expect("leaf cycle stays in range");
    HalinStructure {
        plane_tree: t,
        leaf_cycle,
        graph,
    }
}

/// Free trees of order `n` up to isomorphism, by leaf addition.
fn trees(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty(1)];
    for order in 1..n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for t in &level {
            let base: Vec<_> = t.edges().iter().map(|e| e.endpoints()).collect();
            for v in 0..order {
                let mut pairs = base.clone();
                pairs.push((v, order));
                let g = Graph::new(order + 1, &pairs).expect("in range");
                if seen.insert(canonical_key(&g)) {
                    next.push(g);
                }
            }
        }
        level = next;
    }
    level
}

/// AHU code of the subtree hanging from `v` away from `parent`.
fn subtree_code(t: &Graph, v: usize, parent: Option<usize>) -> String {
    let mut codes: Vec<String> = t
        .neighbors(v)
        .iter()
        .filter(|&&c| Some(c) != parent)
        .map(|&c| subtree_code(t, c, Some(v)))
        .collect();
    codes.sort();
    format!("({})", codes.concat())
}

fn next_permutation(xs: &mut [usize]) -> bool {
    let Some(i) = (1..xs.len()).rev().find(|&i| xs[i - 1] < xs[i]) else {
        return false;
    };
    let j = (i..xs.len()).rev().find(|&j| xs[j] > xs[i - 1]).unwrap();
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

/// Distinct arrangements of `items`, where items in the same class are interchangeable.
fn arrangements(items: &[usize], class: impl Fn(usize) -> String) -> Vec<Vec<usize>> {
    let mut by_class: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    for &x in items {
        by_class.entry(class(x)).or_default().push(x);
    }
    let members: Vec<Vec<usize>> = by_class.into_values().collect();
    let mut seq: Vec<usize> = members
        .iter()
        .enumerate()
        .flat_map(|(k, m)| vec![k; m.len()])
        .collect();
    let mut out = Vec::new();
    loop {
        let mut next_of = vec![0; members.len()];
        out.push(
            seq.iter()
                .map(|&k| {
                    next_of[k] += 1;
                    members[k][next_of[k] - 1]
                })
                .collect(),
        );
        if !next_permutation(&mut seq) {
            return out;
        }
    }
}

/// One plane embedding per combination of child arrangements; arrangements
/// that differ only by swapping isomorphic subtrees are generated once.
fn embeddings(t: &Graph) -> Vec<PlaneTree> {
    let n = t.order();
    let root = (0..n)
        .find(|&v| t.degree(v) >= 3)
        .expect("trees here have an internal vertex");
    let mut parent = vec![None; n];
    let mut order = vec![root];
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        for &c in t.neighbors(v) {
            if Some(c) != parent[v] && c != root {
                parent[c] = Some(v);
                order.push(c);
            }
        }
        i += 1;
    }
    let mut choices: Vec<Vec<Vec<usize>>> = Vec::with_capacity(n);
    for (v, &up) in parent.iter().enumerate() {
        let children: Vec<usize> = t
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&c| Some(c) != up)
            .collect();
        let class = |c: usize| subtree_code(t, c, Some(v));
        let options = match up {
            None => {
                // a cyclic order: rotate a child of the least class to the front
                let first = *children.iter().min_by_key(|&&c| (class(c), c)).unwrap();
                let rest: Vec<usize> = children.iter().copied().filter(|&c| c != first).collect();
                arrangements(&rest, class)
                    .into_iter()
                    .map(|a| std::iter::once(first).chain(a).collect())
                    .collect()
            }
            Some(p) => arrangements(&children, class)
                .into_iter()
                .map(|a| std::iter::once(p).chain(a).collect())
                .collect(),
        };
        choices.push(options);
    }
    let mut out = Vec::new();
    let mut idx = vec![0; n];
    loop {
        let rotation: Vec<Vec<usize>> = (0..n).map(|v| choices[v][idx[v]].clone()).collect();
        out.push(PlaneTree::new(t.clone(), rotation, root).expect("valid by construction"));
        let Some(v) = (0..n).rev().find(|&v| idx[v] + 1 < choices[v].len()) else {
            return out;
        };
        idx[v] += 1;
        for w in idx.iter_mut().skip(v + 1) {
            *w = 0;
        }
    }
}

/// Every Halin graph of order `n` up to isomorphism, each with one plane tree producing it.
pub fn enumerate_halin_structures(
    n: usize,
    cap: usize,
) -> Result<Vec<HalinStructure>, FamilyError> {
    if n < 4 {
        return Err(FamilyError::BadParams {
            family: "halin",
            reason: "order starts at 4".into(),
        });
    }
    if n > cap {
        return Err(FamilyError::SizeLimitExceeded {
            family: "halin",
            n,
            cap,
        });
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for t in trees(n) {
        if (0..n).any(|v| t.degree(v) == 2) {
            continue;
        }
        for pt in embeddings(&t) {
            let h = halin_from_plane_tree(pt);
            if seen.insert(canonical_key(&h.graph)) {
                out.push(h);
            }
        }
    }
    Ok(out)
}

pub fn enumerate_halin(n: usize, cap: usize) -> Result<Vec<Graph>, FamilyError> {
    Ok(enumerate_halin_structures(n, cap)?
        .into_iter()
        .map(|h| h.graph)
        .collect())
}
