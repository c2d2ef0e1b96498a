mod common;

use proptest::prelude::*;
use proptest::sample::subsequence;

use symbreak::constructive;
use symbreak::distinguish;
use symbreak::families;
use symbreak::graph::{graph6, EdgeLabeling, Graph, Labeling, VertexLabeling};
use symbreak::group;

fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect()
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = all_pairs(n);
        let len = pairs.len();
        subsequence(pairs, 0..=len).prop_map(move |e| Graph::new(n, &e).unwrap())
    })
}

fn arb_graph_with_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

fn arb_connected(max_n: usize) -> impl Strategy<Value = Graph> {
    arb_graph(max_n).prop_filter("connected", |g| g.is_connected())
}

fn arb_tree(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n)
        .prop_flat_map(|n| {
            (
                Just(n),
                proptest::collection::vec(any::<prop::sample::Index>(), n - 1),
            )
        })
        .prop_map(|(n, picks)| {
            let pairs: Vec<_> = picks
                .iter()
                .enumerate()
                .map(|(i, p)| (p.index(i + 1), i + 1))
                .collect();
            Graph::new(n, &pairs).unwrap()
        })
}

fn is_triangle_free(g: &Graph) -> bool {
    g.edges().iter().all(|e| {
        let (u, v) = e.endpoints();
        !g.neighbors(u).iter().any(|&w| g.has_edge(v, w))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn invariants_survive_relabeling((g, p) in arb_graph_with_perm(7)) {
        let h = g.permuted(&p);
        prop_assert_eq!(group::canonical_key(&g), group::canonical_key(&h));
        let (ag, ah) = (group::automorphisms(&g).unwrap(), group::automorphisms(&h).unwrap());
        prop_assert_eq!(ag.order(), ah.order());
        let n = g.order();
        prop_assert_eq!(
            distinguish::distinguishing_number(&g, n).unwrap().value,
            distinguish::distinguishing_number(&h, n).unwrap().value
        );
        let (dg, dh) = (
            distinguish::distinguishing_index(&g, g.size().max(1)),
            distinguish::distinguishing_index(&h, h.size().max(1)),
        );
        prop_assert_eq!(dg.map(|r| r.value), dh.map(|r| r.value));
    }

    #[test]
    fn canonical_key_matches_brute_force(a in arb_graph(6), b in arb_graph(6)) {
        let same = a.order() == b.order() && common::brute_canonical_code(&a) == common::brute_canonical_code(&b);
        prop_assert_eq!(group::canonical_key(&a) == group::canonical_key(&b), same);
    }

    #[test]
    fn r_thin_matches_pairwise_check(g in arb_graph(9)) {
        let n = g.order();
        let naive = all_pairs(n).into_iter().all(|(u, v)| {
            let nu: Vec<_> = (0..n).filter(|&w| g.has_edge(u, w)).collect();
            let nv: Vec<_> = (0..n).filter(|&w| g.has_edge(v, w)).collect();
            nu != nv
        });
        prop_assert_eq!(g.is_r_thin(), naive);
    }

    #[test]
    fn bfs_levels_are_distances(g in arb_connected(10)) {
        let t = g.bfs_tree(0).unwrap();
        prop_assert_eq!(t.order.len(), g.order());
        for e in g.edges() {
            let (u, v) = e.endpoints();
            prop_assert!(t.level[u].abs_diff(t.level[v]) <= 1);
        }
        for v in 1..g.order() {
            let p = t.parent[v].unwrap();
            prop_assert!(g.has_edge(p, v));
            prop_assert_eq!(t.level[p] + 1, t.level[v]);
        }
    }

    #[test]
    fn degree_sum_is_twice_size(g in arb_graph(12)) {
        prop_assert_eq!((0..g.order()).map(|v| g.degree(v)).sum::<usize>(), 2 * g.size());
    }

    #[test]
    fn graph6_roundtrip(g in arb_graph(70)) {
        prop_assert_eq!(graph6::from_graph6(&graph6::to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn orbits_partition_and_divide_order(g in arb_graph(8)) {
        let a = group::automorphisms(&g).unwrap();
        let order = a.order().clone();
        let mut seen: Vec<usize> = a.orbits().iter().flatten().copied().collect();
        seen.sort_unstable();
        prop_assert_eq!(seen, (0..g.order()).collect::<Vec<_>>());
        for orbit in a.orbits() {
            prop_assert_eq!(&order % orbit.len(), 0u32.into());
        }
    }

    #[test]
    fn labeled_stabilizer_matches_brute_force(g in arb_graph(7), seed in proptest::collection::vec(1u32..=3, 7)) {
        let labels = seed[..g.order()].to_vec();
        let vl = Labeling::Vertex(VertexLabeling::new(labels.clone()).unwrap());
        prop_assert_eq!(
            group::labeled_stabilizer_is_trivial(&g, &vl).unwrap(),
            common::brute_vertex_labeling_distinguishes(&g, &labels)
        );
        let isolated = (0..g.order()).filter(|&v| g.degree(v) == 0).count();
        if g.has_k2_component() || isolated > 1 {
            return Ok(());
        }
        let edge_labels: Vec<u32> = (0..g.size()).map(|i| seed[i % 7]).collect();
        let el = Labeling::Edge(EdgeLabeling::new(&g, &edge_labels).unwrap());
        prop_assert_eq!(
            group::labeled_stabilizer_is_trivial(&g, &el).unwrap(),
            common::brute_edge_labeling_distinguishes(&g, &edge_labels)
        );
    }

    #[test]
    fn d_is_one_iff_group_trivial(g in arb_graph(7)) {
        let d = distinguish::distinguishing_number(&g, g.order()).unwrap().value;
        prop_assert_eq!(d == 1, group::automorphisms(&g).unwrap().is_trivial());
    }

    #[test]
    fn mycielskian_keeps_triangle_free(t in arb_tree(8)) {
        let mu = families::mycielskian(&t);
        prop_assert!(is_triangle_free(&mu.graph));
        prop_assert_eq!(mu.graph.size(), 3 * t.size() + t.order());
        prop_assert!(mu.graph.clique_number().size <= 2);
    }

    #[test]
    fn cycle_constructions_never_beat_exact(n in 3usize..=12) {
        let c = families::gen_standard(families::Standard::Cycle(n)).unwrap();
        let v = constructive::cycle_vertex_labeling(n).unwrap();
        let e = constructive::cycle_edge_labeling(n).unwrap();
        prop_assert!(v.certified && e.certified);
        prop_assert!(v.labels_used >= distinguish::distinguishing_number(&c, n).unwrap().value);
        prop_assert!(e.labels_used >= distinguish::distinguishing_index(&c, n).unwrap().value);
    }
}

#[test]
fn halin_graphs_stay_hamiltonian_after_vertex_deletion() {
    for n in 4..=9 {
        for g in families::enumerate_halin(n, families::DEFAULT_HALIN_CAP).unwrap() {
            assert!(g.has_hamiltonian_cycle().unwrap());
            for v in 0..n {
                assert!(
                    g.without_vertex(v).has_hamiltonian_cycle().unwrap(),
                    "{} minus {v}",
                    graph6::to_graph6(&g)
                );
            }
        }
    }
}

#[test]
fn mop_counts_match_triangulations() {
    for n in 3..=10 {
        assert_eq!(common::triangulation_count(n), common::catalan(n - 2));
        let mops = families::enumerate_mops(n, families::DEFAULT_MOP_CAP).unwrap();
        assert_eq!(mops.len(), common::dihedral_triangulation_classes(n));
    }
}

#[test]
fn mop_and_halin_constructions_never_beat_exact() {
    for n in 4..=8 {
        for g in families::enumerate_mops(n, families::DEFAULT_MOP_CAP).unwrap() {
            let c = constructive::mop_vertex_labeling(&g).unwrap();
            assert!(c.labels_used >= distinguish::distinguishing_number(&g, n).unwrap().value);
        }
        for h in families::enumerate_halin_structures(n, families::DEFAULT_HALIN_CAP).unwrap() {
            let c = constructive::halin_vertex_labeling(&h).unwrap();
            assert!(
                c.labels_used
                    >= distinguish::distinguishing_number(&h.graph, n)
                        .unwrap()
                        .value
            );
        }
    }
}
