//! Brute-force oracles, independent of the library's search code.
#![allow(dead_code)]

use std::collections::BTreeSet;

use symbreak::graph::Graph;

/// Every permutation of `0..n`, in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

fn edge_set(g: &Graph) -> BTreeSet<(usize, usize)> {
    g.edges().iter().map(|e| e.endpoints()).collect()
}

fn maps_edges(g: &Graph, edges: &BTreeSet<(usize, usize)>, p: &[usize]) -> bool {
    edges.iter().all(|&(u, v)| g.has_edge(p[u], p[v]))
}

/// All automorphisms, found by testing every bijection.
pub fn brute_automorphisms(g: &Graph) -> Vec<Vec<usize>> {
    let edges = edge_set(g);
    all_permutations(g.order())
        .into_iter()
        .filter(|p| maps_edges(g, &edges, p))
        .collect()
}

/// Automorphisms acting on edge positions in `g.edges()`.
fn edge_actions(g: &Graph, autos: &[Vec<usize>]) -> Vec<Vec<usize>> {
    autos
        .iter()
        .map(|p| {
            g.edges()
                .iter()
                .map(|e| {
                    let (u, v) = e.endpoints();
                    g.edge_index(p[u], p[v]).unwrap()
                })
                .collect()
        })
        .collect()
}

fn is_identity(p: &[usize]) -> bool {
    p.iter().enumerate().all(|(i, &x)| i == x)
}

/// True iff only the identity (among `actions`) preserves `labels`.
pub fn only_identity_preserves(actions: &[Vec<usize>], labels: &[u32]) -> bool {
    actions
        .iter()
        .filter(|p| !is_identity(p))
        .all(|p| p.iter().enumerate().any(|(i, &j)| labels[i] != labels[j]))
}

/// Least `d` such that some labeling of `items` objects with labels `1..=d`
/// is preserved only by the identity, by plain enumeration of all `d^items`.
fn least_distinguishing(items: usize, actions: &[Vec<usize>]) -> usize {
    for d in 1..=items.max(1) as u32 {
        let mut labels = vec![1u32; items];
        loop {
            if only_identity_preserves(actions, &labels) {
                return d as usize;
            }
            let Some(i) = (0..items).rev().find(|&i| labels[i] < d) else {
                break;
            };
            labels[i] += 1;
            for l in labels.iter_mut().skip(i + 1) {
                *l = 1;
            }
        }
    }
    unreachable!("labels 1..=items always distinguish")
}

pub fn brute_distinguishing_number(g: &Graph) -> usize {
    least_distinguishing(g.order(), &brute_automorphisms(g))
}

pub fn brute_distinguishing_index(g: &Graph) -> usize {
    let autos = brute_automorphisms(g);
    least_distinguishing(g.size(), &edge_actions(g, &autos))
}

pub fn brute_vertex_labeling_distinguishes(g: &Graph, labels: &[u32]) -> bool {
    only_identity_preserves(&brute_automorphisms(g), labels)
}

pub fn brute_edge_labeling_distinguishes(g: &Graph, labels: &[u32]) -> bool {
    let autos = brute_automorphisms(g);
    only_identity_preserves(&edge_actions(g, &autos), labels)
}

/// Least adjacency code over all relabelings; equal codes mean isomorphic graphs.
pub fn brute_canonical_code(g: &Graph) -> Vec<bool> {
    let n = g.order();
    all_permutations(n)
        .into_iter()
        .map(|p| {
            let mut inv = vec![0; n];
            for (i, &x) in p.iter().enumerate() {
                inv[x] = i;
            }
            (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .map(|(i, j)| g.has_edge(inv[i], inv[j]))
                .collect()
        })
        .min()
        .unwrap_or_default()
}

/// Triangulations of a convex `n`-gon as sets of diagonals.
fn triangulations(verts: &[usize]) -> Vec<Vec<(usize, usize)>> {
    if verts.len() < 3 {
        return vec![vec![]];
    }
    let (a, b) = (verts[0], verts[verts.len() - 1]);
    let mut out = Vec::new();
    for k in 1..verts.len() - 1 {
        let left = triangulations(&verts[..=k]);
        let right = triangulations(&verts[k..]);
        for l in &left {
            for r in &right {
                let mut t = l.clone();
                t.extend(r);
                if k > 1 {
                    t.push((a, verts[k]));
                }
                if k < verts.len() - 2 {
                    t.push((verts[k], b));
                }
                out.push(t);
            }
        }
    }
    out
}

/// Number of triangulations of the `n`-gon up to rotation and reflection.
pub fn dihedral_triangulation_classes(n: usize) -> usize {
    let verts: Vec<usize> = (0..n).collect();
    let mut classes = BTreeSet::new();
    for t in triangulations(&verts) {
        let mut best: Option<Vec<(usize, usize)>> = None;
        for r in 0..n {
            for flip in [false, true] {
                let map = |v: usize| if flip { (n + r - v) % n } else { (v + r) % n };
                let mut image: Vec<(usize, usize)> = t
                    .iter()
                    .map(|&(u, v)| {
                        let (x, y) = (map(u), map(v));
                        (x.min(y), x.max(y))
                    })
                    .collect();
                image.sort_unstable();
                if best.as_ref().is_none_or(|b| image < *b) {
                    best = Some(image);
                }
            }
        }
        classes.insert(best.unwrap());
    }
    classes.len()
}

pub fn catalan(k: usize) -> usize {
    (0..k).fold(1usize, |c, i| c * 2 * (2 * i + 1) / (i + 2))
}

pub fn triangulation_count(n: usize) -> usize {
    triangulations(&(0..n).collect::<Vec<_>>()).len()
}
