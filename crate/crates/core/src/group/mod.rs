//! Automorphism groups and label-preserving stabilizers.
//!
//! Everything else in the crate leans on [`labeled_stabilizer_is_trivial`] as
//! its certificate, so the search here is exact: vertex and edge labels are
//! folded into the initial colouring and the stabilizer is found by the same
//! individualization-refinement search used for the full group.

mod canon;
pub(crate) mod partition;
mod perm;
pub(crate) mod search;

use std::collections::{HashSet, VecDeque};

use num_bigint::BigUint;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{graph6, EdgeLabeling, Graph, GraphError, Labeling, VertexLabeling};
use partition::Colored;
pub use perm::Permutation;
use search::{Mode, UnionFind};

/// Largest graph order accepted by [`automorphisms`] and friends unless overridden.
pub const DEFAULT_VERTEX_CAP: usize = 128;
/// Largest group that [`AutGroup::elements`] will materialize by default.
pub const DEFAULT_ELEMENT_CAP: usize = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("permutation has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("image array is not a bijection")]
    NotABijection,
    #[error("automorphism search: order {n} exceeds the configured cap {cap}")]
    SizeLimitExceeded { n: usize, cap: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Aut(G) as generators, exact order and orbit partition.
#[derive(Debug, Clone)]
pub struct AutGroup {
    n: usize,
    generators: Vec<Permutation>,
    order: BigUint,
    orbits: Vec<Vec<usize>>,
}

impl AutGroup {
    fn from_generators(n: usize, generators: Vec<Permutation>, order: BigUint) -> Self {
        let mut uf = UnionFind::new(n);
        for g in &generators {
            uf.union_perm(g.as_slice());
        }
        let mut classes: Vec<Vec<usize>> = vec![Vec::new(); n];
        for v in 0..n {
            let r = uf.find(v);
            classes[r].push(v);
        }
        let mut orbits: Vec<Vec<usize>> = classes.into_iter().filter(|c| !c.is_empty()).collect();
        orbits.sort();
        AutGroup {
            n,
            generators,
            order,
            orbits,
        }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.order == BigUint::from(1u32)
    }

    /// Orbits sorted by smallest member; each orbit ascending.
    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    /// Every group element, identity first, if the order is at most `cap`.
    pub fn elements(&self, cap: usize) -> Option<Vec<Permutation>> {
        if self.order > BigUint::from(cap) {
            return None;
        }
        let id = Permutation::identity(self.n);
        let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
        let mut out = vec![id.clone()];
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in &self.generators {
                let y = x.then(g);
                if seen.insert(y.clone()) {
                    out.push(y.clone());
                    queue.push_back(y);
                }
            }
        }
        debug_assert_eq!(BigUint::from(out.len()), self.order);
        Some(out)
    }

    pub fn to_json(&self) -> AutGroupJson {
        AutGroupJson {
            generators: self
                .generators
                .iter()
                .map(|p| p.as_slice().to_vec())
                .collect(),
            order: self.order.to_string(),
            orbits: self.orbits.clone(),
        }
    }
}

/// Wire form: generators as image arrays, order as a decimal string.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct AutGroupJson {
    pub generators: Vec<Vec<usize>>,
    pub order: String,
    pub orbits: Vec<Vec<usize>>,
}

fn check_cap(g: &Graph, cap: usize) -> Result<(), GroupError> {
    if g.order() > cap {
        return Err(GroupError::SizeLimitExceeded { n: g.order(), cap });
    }
    Ok(())
}

fn group_of(c: &Colored) -> AutGroup {
    let outcome = search::search(c, Mode::Full);
    let order = outcome.order();
    let gens = outcome
        .generators
        .into_iter()
        .map(Permutation::from_vec_unchecked)
        .collect();
    AutGroup::from_generators(c.n, gens, order)
}

pub fn automorphisms(g: &Graph) -> Result<AutGroup, GroupError> {
    automorphisms_with_cap(g, DEFAULT_VERTEX_CAP)
}

pub fn automorphisms_with_cap(g: &Graph, cap: usize) -> Result<AutGroup, GroupError> {
    check_cap(g, cap)?;
    Ok(group_of(&Colored::plain(g)))
}

/// The subgroup of Aut(G) preserving `labeling`.
pub fn labeled_automorphisms(g: &Graph, labeling: &Labeling) -> Result<AutGroup, GroupError> {
    check_cap(g, DEFAULT_VERTEX_CAP)?;
    Ok(group_of(&colored_for(g, labeling)?))
}

pub(crate) fn colored_for(g: &Graph, labeling: &Labeling) -> Result<Colored, GroupError> {
    Ok(match labeling {
        Labeling::Vertex(l) => {
            l.check_order(g)?;
            let colors: Vec<u64> = l.labels().iter().map(|&x| x as u64).collect();
            Colored::build(g, Some(&colors), None)
        }
        Labeling::Edge(l) => {
            l.check_graph(g)?;
            Colored::build(g, None, Some(&l.labels()))
        }
    })
}

fn check_len(expected: usize, found: usize) -> Result<(), GroupError> {
    if expected != found {
        return Err(GroupError::LengthMismatch { expected, found });
    }
    Ok(())
}

/// Edges go to edges and non-edges to non-edges.
pub fn is_automorphism(g: &Graph, p: &Permutation) -> Result<bool, GroupError> {
    check_len(g.order(), p.len())?;
    Ok(g.edges()
        .iter()
        .all(|e| g.has_edge(p.apply(e.u()), p.apply(e.v()))))
}

pub fn preserves_vertex_labeling(p: &Permutation, l: &VertexLabeling) -> Result<bool, GroupError> {
    check_len(l.len(), p.len())?;
    Ok((0..p.len()).all(|v| l.get(p.apply(v)) == l.get(v)))
}

/// The permutation acts on an edge `{a, b}` as `{p(a), p(b)}`. An edge whose
/// image is not an edge of `g` counts as not preserved.
pub fn preserves_edge_labeling(
    g: &Graph,
    p: &Permutation,
    l: &EdgeLabeling,
) -> Result<bool, GroupError> {
    check_len(g.order(), p.len())?;
    l.check_graph(g)?;
    Ok(l.entries()
        .iter()
        .all(|&(e, label)| l.get(p.map_edge(e)) == Some(label)))
}

/// A non-identity automorphism of `g` preserving `labeling`, if any exists.
pub fn preserving_automorphism(
    g: &Graph,
    labeling: &Labeling,
) -> Result<Option<Permutation>, GroupError> {
    check_cap(g, DEFAULT_VERTEX_CAP)?;
    let c = colored_for(g, labeling)?;
    Ok(search::nontrivial_automorphism(&c).map(Permutation::from_vec_unchecked))
}

/// True iff only the identity preserves `labeling`: the labeling is distinguishing.
pub fn labeled_stabilizer_is_trivial(g: &Graph, labeling: &Labeling) -> Result<bool, GroupError> {
    Ok(preserving_automorphism(g, labeling)?.is_none())
}

pub fn orbits(a: &AutGroup) -> Vec<Vec<usize>> {
    a.orbits.clone()
}

/// The canonical relabeling of `g`: isomorphic inputs give identical outputs.
pub fn canonical_form(g: &Graph) -> Graph {
    let position = canon::canonical_labeling(&Colored::plain(g));
    g.permuted(&position)
}

/// graph6 string of [`canonical_form`], usable as an isomorphism-class key.
pub fn canonical_key(g: &Graph) -> String {
    graph6::to_graph6(&canonical_form(g))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &pairs).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut pairs = vec![];
        for i in 0..n {
            for j in i + 1..n {
                pairs.push((i, j));
            }
        }
        Graph::new(n, &pairs).unwrap()
    }

    fn path(n: usize) -> Graph {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &pairs).unwrap()
    }

    fn grotzsch() -> Graph {
        let mut pairs = vec![];
        for i in 0..5 {
            let j = (i + 1) % 5;
            pairs.extend([(i, j), (5 + i, j), (i, 5 + j), (5 + i, 10)]);
        }
        Graph::new(11, &pairs).unwrap()
    }

    fn perm(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn group_orders() {
        assert_eq!(
            automorphisms(&cycle(6)).unwrap().order(),
            &BigUint::from(12u32)
        );
        assert_eq!(
            automorphisms(&complete(4)).unwrap().order(),
            &BigUint::from(24u32)
        );
        assert_eq!(
            automorphisms(&grotzsch()).unwrap().order(),
            &BigUint::from(10u32)
        );
        assert!(automorphisms(&Graph::empty(1)).unwrap().is_trivial());
    }

    #[test]
    fn large_symmetric_group_order() {
        // 30! overflows u64.
        let a = automorphisms(&complete(30)).unwrap();
        assert_eq!(a.to_json().order, "265252859812191058636308480000000");
        assert!(a.generators().len() <= 29);
    }

    #[test]
    fn generators_are_automorphisms() {
        for g in [cycle(7), complete(5), grotzsch(), path(6)] {
            for p in automorphisms(&g).unwrap().generators() {
                assert!(is_automorphism(&g, p).unwrap());
                assert!(!p.is_identity());
            }
        }
    }

    #[test]
    fn automorphism_checks() {
        let c4 = cycle(4);
        assert!(is_automorphism(&c4, &perm(&[1, 2, 3, 0])).unwrap());
        let p3 = path(3);
        assert!(is_automorphism(&p3, &perm(&[2, 1, 0])).unwrap());
        assert!(!is_automorphism(&p3, &perm(&[1, 2, 0])).unwrap());
        assert_eq!(
            is_automorphism(&p3, &perm(&[1, 0])),
            Err(GroupError::LengthMismatch {
                expected: 3,
                found: 2
            })
        );
    }

    #[test]
    fn vertex_label_preservation() {
        let l = VertexLabeling::new(vec![1, 2, 3]).unwrap();
        assert!(preserves_vertex_labeling(&Permutation::identity(3), &l).unwrap());
        assert!(!preserves_vertex_labeling(&perm(&[1, 2, 0]), &l).unwrap());
        let c = VertexLabeling::constant(4);
        for p in automorphisms(&cycle(4)).unwrap().elements(100).unwrap() {
            assert!(preserves_vertex_labeling(&p, &c).unwrap());
        }
    }

    #[test]
    fn edge_label_preservation() {
        let p3 = path(3);
        let swap = perm(&[2, 1, 0]);
        assert!(preserves_edge_labeling(&p3, &swap, &EdgeLabeling::constant(&p3)).unwrap());
        let l = EdgeLabeling::new(&p3, &[1, 2]).unwrap();
        assert!(!preserves_edge_labeling(&p3, &swap, &l).unwrap());
        let k3 = complete(3);
        let l = EdgeLabeling::new(&k3, &[1, 2, 3]).unwrap();
        for p in automorphisms(&k3).unwrap().elements(10).unwrap() {
            assert_eq!(
                preserves_edge_labeling(&k3, &p, &l).unwrap(),
                p.is_identity()
            );
        }
    }

    #[test]
    fn stabilizer_triviality() {
        let c6 = cycle(6);
        let l = Labeling::Vertex(VertexLabeling::new(vec![2, 2, 1, 2, 1, 1]).unwrap());
        assert!(labeled_stabilizer_is_trivial(&c6, &l).unwrap());
        let constant = Labeling::Vertex(VertexLabeling::constant(6));
        assert!(!labeled_stabilizer_is_trivial(&c6, &constant).unwrap());
        // Smallest asymmetric tree: a spider with legs 1, 2, 3.
        let tree = Graph::new(7, &[(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6)]).unwrap();
        let constant = Labeling::Vertex(VertexLabeling::constant(7));
        assert!(labeled_stabilizer_is_trivial(&tree, &constant).unwrap());
    }

    #[test]
    fn orbit_examples() {
        assert_eq!(
            orbits(&automorphisms(&cycle(5)).unwrap()),
            vec![vec![0, 1, 2, 3, 4]]
        );
        assert_eq!(
            orbits(&automorphisms(&path(3)).unwrap()),
            vec![vec![0, 2], vec![1]]
        );
        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(
            orbits(&automorphisms(&star).unwrap()),
            vec![vec![0], vec![1, 2, 3]]
        );
    }

    #[test]
    fn canonical_forms_match_on_relabeling() {
        let g = grotzsch();
        let p: Vec<usize> = (0..11).map(|i| (i * 7 + 3) % 11).collect();
        assert_eq!(canonical_key(&g), canonical_key(&g.permuted(&p)));
        assert_ne!(canonical_key(&cycle(6)), canonical_key(&path(6)));
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            automorphisms_with_cap(&cycle(10), 8),
            Err(GroupError::SizeLimitExceeded { n: 10, cap: 8 })
        ));
    }
}
