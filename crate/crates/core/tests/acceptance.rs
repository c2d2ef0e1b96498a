//! Acceptance suite: one line per criterion, exact integers throughout.
//! Runs without the libtest harness so every line is always printed.

mod common;

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use symbreak::constructive::{self, ConstructError, Construction};
use symbreak::distinguish::{self, SearchCaps};
use symbreak::families::{self, Standard};
use symbreak::graph::{Graph, Labeling, LabelingKind};
use symbreak::group::{self, canonical_key};
use symbreak::report::{self, Family, RunConfig};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn std_graph(s: Standard) -> Graph {
    families::gen_standard(s).unwrap()
}

fn d(g: &Graph) -> usize {
    distinguish::distinguishing_number(g, g.order())
        .unwrap()
        .value
}

fn d_index(g: &Graph) -> usize {
    distinguish::distinguishing_index(g, g.size())
        .unwrap()
        .value
}

fn certified(g: &Graph, l: &Labeling) -> bool {
    group::labeled_stabilizer_is_trivial(g, l).unwrap()
}

fn known_values() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    let mut expect = |name: String, got: usize, want: usize| {
        checked += 1;
        ensure(got == want, || format!("{name} = {got}, expected {want}"))
    };
    for n in 3..=10 {
        let p = std_graph(Standard::Path(n));
        expect(format!("D(P_{n})"), d(&p), 2)?;
        expect(format!("D'(P_{n})"), d_index(&p), 2)?;
    }
    for n in 3..=12 {
        let c = std_graph(Standard::Cycle(n));
        let want = if n <= 5 { 3 } else { 2 };
        expect(format!("D(C_{n})"), d(&c), want)?;
        expect(format!("D'(C_{n})"), d_index(&c), want)?;
    }
    for n in 2..=7 {
        expect(format!("D(K_{n})"), d(&std_graph(Standard::Complete(n))), n)?;
    }
    for p in 4..=5 {
        let k = std_graph(Standard::CompleteBipartite(p, p));
        expect(format!("D(K_{p},{p})"), d(&k), p + 1)?;
        expect(format!("D'(K_{p},{p})"), d_index(&k), 2)?;
    }
    expect(
        "D'(K_3,3)".into(),
        d_index(&std_graph(Standard::CompleteBipartite(3, 3))),
        3,
    )?;
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 120.0, || format!("took {secs:.1}s"))?;
    Ok(format!("{checked} values in {secs:.2}s"))
}

fn mop_theorems() -> Outcome {
    let mut total = 0;
    for n in 3..=9 {
        let mops = families::enumerate_mops(n, families::DEFAULT_MOP_CAP).unwrap();
        let oracle = common::dihedral_triangulation_classes(n);
        ensure(mops.len() == oracle, || {
            format!("n={n}: {} MOPs, dihedral oracle says {oracle}", mops.len())
        })?;
        for g in &mops {
            total += 1;
            ensure(g.size() == 2 * n - 3, || {
                format!("n={n}: {} edges", g.size())
            })?;
            let (dv, de) = (d(g), d_index(g));
            if n == 3 {
                ensure(dv == 3 && de == 3, || format!("K_3 gave D={dv}, D'={de}"))?;
                for r in [
                    constructive::mop_vertex_labeling(g),
                    constructive::mop_edge_labeling(g),
                ] {
                    match r {
                        Err(ConstructError::K3Exception(w)) => {
                            ensure(w.labels_used == 3 && certified(g, &w.labeling), || {
                                "bad K_3 witness".into()
                            })?
                        }
                        other => return Err(format!("K_3 not flagged: {other:?}")),
                    }
                }
                continue;
            }
            ensure(dv <= 2 && de <= 2, || {
                format!("{}: D={dv}, D'={de}", canonical_key(g))
            })?;
            let v = constructive::mop_vertex_labeling(g).map_err(|e| e.to_string())?;
            let e = constructive::mop_edge_labeling(g).map_err(|e| e.to_string())?;
            for c in [&v, &e] {
                ensure(
                    c.certified && certified(g, &c.labeling) && c.labels_used <= 2,
                    || {
                        format!(
                            "{} {} failed to certify with 2 labels",
                            canonical_key(g),
                            c.theorem
                        )
                    },
                )?;
            }
        }
    }
    Ok(format!("{total} MOPs, counts match the dihedral oracle"))
}

fn halin_theorems() -> Outcome {
    let key = |s| canonical_key(&std_graph(s));
    let (k4, w4, w5) = (
        key(Standard::Complete(4)),
        key(Standard::Wheel(4)),
        key(Standard::Wheel(5)),
    );
    let mut total = 0;
    let mut seen = [false; 3];
    for n in 4..=9 {
        for h in families::enumerate_halin_structures(n, families::DEFAULT_HALIN_CAP).unwrap() {
            total += 1;
            let g = &h.graph;
            let k = canonical_key(g);
            let c = constructive::halin_vertex_labeling(&h).map_err(|e| e.to_string())?;
            let bound = match c.theorem {
                Construction::HalinVertex4 => 4,
                Construction::HalinVertex3 => 3,
                Construction::HalinVertex2 => 2,
                other => return Err(format!("unexpected construction {other}")),
            };
            ensure(certified(g, &c.labeling) && c.labels_used <= bound, || {
                format!("{k}: {} used {} labels", c.theorem, c.labels_used)
            })?;
            let dv = d(g);
            ensure(dv <= c.labels_used, || {
                format!("{k}: exact D {dv} above construction")
            })?;
            let de = d_index(g);
            if k == k4 {
                seen[0] = true;
                ensure(
                    dv == 4 && c.labels_used == 4 && h.plane_tree.tree().max_degree() == 3,
                    || format!("K_4: D={dv}, construction {}", c.labels_used),
                )?;
                ensure(de == 3, || format!("D'(K_4) = {de}"))?;
                ensure(
                    matches!(
                        constructive::halin_edge_labeling(&h),
                        Err(ConstructError::K4Exception(_))
                    ),
                    || "K_4 edge exception not flagged".into(),
                )?;
                continue;
            }
            if k == w4 || k == w5 {
                seen[if k == w4 { 1 } else { 2 }] = true;
                ensure(dv == 3, || format!("D(W_{}) = {dv}", n - 1))?;
            }
            ensure(de <= 2, || format!("{k}: D' = {de}"))?;
            let e = constructive::halin_edge_labeling(&h).map_err(|e| e.to_string())?;
            ensure(certified(g, &e.labeling) && e.labels_used <= 2, || {
                format!("{k}: edge labeling")
            })?;
        }
    }
    ensure(seen.iter().all(|&s| s), || {
        "K_4, W_4 or W_5 missing from the enumeration".into()
    })?;
    Ok(format!(
        "{total} Halin graphs; D(K_4)=4, D(W_4)=D(W_5)=3, D'(K_4)=3"
    ))
}

fn mycielski_results() -> Outcome {
    let m = |i| families::mycielski_sequence(i).unwrap();
    ensure(d(&m(2)) == 2, || "D(M_2)".into())?;
    ensure(d(&m(3)) == 3 && d_index(&m(3)) == 3, || "M_3 values".into())?;
    let m4 = m(4);
    ensure((m4.order(), m4.size()) == (11, 20), || "M_4 size".into())?;
    ensure(d(&m4) == 2 && d_index(&m4) == 2, || {
        format!("M_4: D={}, D'={}", d(&m4), d_index(&m4))
    })?;
    let m5 = m(5);
    ensure((m5.order(), m5.size()) == (23, 71), || "M_5 size".into())?;
    for kind in [LabelingKind::Vertex, LabelingKind::Edge] {
        let c = constructive::mycielski_iterate_labeling(5, kind).map_err(|e| e.to_string())?;
        ensure(
            c.theorem == Construction::MycielskiCopy
                && c.labels_used == 2
                && certified(&m5, &c.labeling),
            || format!("M_5 {kind:?} copy construction"),
        )?;
    }
    for i in 2..=6 {
        let g = m(i);
        let mu = families::mycielskian(&g);
        ensure(
            mu.graph.order() == 2 * g.order() + 1 && mu.graph.size() == 3 * g.size() + g.order(),
            || format!("size law fails at M_{}", i + 1),
        )?;
    }
    Ok("D(M_2)=2, D(M_3)=D'(M_3)=3, D(M_4)=D'(M_4)=2, M_5 certified with 2 labels".into())
}

fn extension_theorems() -> Outcome {
    let mut count = 0;
    for n in 3..=6 {
        for g in families::enumerate_connected(n, families::DEFAULT_CONNECTED_CAP).unwrap() {
            if !g.is_r_thin() {
                continue;
            }
            count += 1;
            let mu = families::mycielskian(&g);
            ensure(mu.graph.size() == 3 * g.size() + n, || "size law".into())?;
            let rv = distinguish::distinguishing_number(&g, n).unwrap();
            let Labeling::Vertex(base) = &rv.witness else {
                unreachable!()
            };
            let v = constructive::mycielskian_extend_vertex(&g, base, &mu)
                .map_err(|e| e.to_string())?;
            ensure(
                certified(&mu.graph, &v.labeling) && v.labels_used <= rv.value + 1,
                || format!("vertex extension on {}", canonical_key(&g)),
            )?;
            let re = distinguish::distinguishing_index(&g, g.size()).unwrap();
            let Labeling::Edge(base) = &re.witness else {
                unreachable!()
            };
            let e =
                constructive::mycielskian_extend_edge(&g, base, &mu).map_err(|e| e.to_string())?;
            ensure(
                certified(&mu.graph, &e.labeling) && e.labels_used <= re.value + 1,
                || format!("edge extension on {}", canonical_key(&g)),
            )?;
        }
    }
    Ok(format!("{count} connected R-thin graphs of order 3..6"))
}

fn clique4_theorem() -> Outcome {
    let graphs = families::clique4_graphs(30, 2024, 18);
    let mut exact = 0;
    for g in &graphs {
        let delta = g.max_degree();
        ensure(
            g.clique_number().size == 4 && delta >= 5 && g.is_connected(),
            || "premise not met".into(),
        )?;
        let c = constructive::clique4_bfs_labeling(g)
            .map_err(|e| format!("{}: {e}", canonical_key(g)))?;
        ensure(certified(g, &c.labeling) && c.labels_used < delta, || {
            format!("{} labels with max degree {delta}", c.labels_used)
        })?;
        if g.order() <= SearchCaps::default().max_vertices {
            exact += 1;
            let dv = d(g);
            ensure(dv < delta, || {
                format!("exact D {dv} with max degree {delta}")
            })?;
        }
    }
    Ok(format!(
        "{} seeded graphs certified, {exact} checked exactly",
        graphs.len()
    ))
}

fn oracle_equivalence() -> Outcome {
    let unpruned = SearchCaps::unpruned();
    let mut count = 0;
    for n in 1..=6 {
        for g in families::enumerate_connected(n, families::DEFAULT_CONNECTED_CAP).unwrap() {
            count += 1;
            let pruned = d(&g);
            let plain = distinguish::distinguishing_number_with(&g, n, &unpruned)
                .unwrap()
                .value;
            let brute = common::brute_distinguishing_number(&g);
            ensure(pruned == plain && plain == brute, || {
                format!(
                    "D mismatch on {}: {pruned}/{plain}/{brute}",
                    canonical_key(&g)
                )
            })?;
            if n >= 3 {
                let pruned = d_index(&g);
                let plain = distinguish::distinguishing_index_with(&g, g.size(), &unpruned)
                    .unwrap()
                    .value;
                let brute = common::brute_distinguishing_index(&g);
                ensure(pruned == plain && plain == brute, || {
                    format!(
                        "D' mismatch on {}: {pruned}/{plain}/{brute}",
                        canonical_key(&g)
                    )
                })?;
            }
        }
    }
    let mut orders = 0;
    for n in 1..=7 {
        for g in families::enumerate_connected(n, families::DEFAULT_CONNECTED_CAP).unwrap() {
            orders += 1;
            let brute = common::brute_automorphisms(&g).len();
            let order = group::automorphisms(&g).unwrap().order().to_string();
            ensure(order == brute.to_string(), || {
                format!("|Aut| of {}: {order} vs {brute}", canonical_key(&g))
            })?;
        }
    }
    Ok(format!(
        "{count} graphs agree on D and D', {orders} group orders match brute force"
    ))
}

fn conjecture_experiment() -> Outcome {
    let a = report::conjecture(3, 6, 1).map_err(|e| e.to_string())?;
    let b = report::conjecture(3, 6, 4).map_err(|e| e.to_string())?;
    let (ja, jb) = (a.to_json().unwrap(), b.to_json().unwrap());
    ensure(ja == jb, || "reports differ between runs".into())?;
    ensure(a.graphs == 2 + 6 + 21 + 112, || {
        format!("{} graphs", a.graphs)
    })?;
    let c5 = canonical_key(&std_graph(Standard::Cycle(5)));
    let row = a
        .rows
        .iter()
        .find(|r| canonical_key(&symbreak::graph::graph6::from_graph6(&r.graph6).unwrap()) == c5)
        .ok_or("C_5 missing")?;
    ensure(row.d == 3 && row.d_mu == 2, || format!("C_5 row {row:?}"))?;
    Ok(format!(
        "{} graphs, {} vertex and {} edge violations, byte-identical reruns",
        a.graphs,
        a.vertex_violations.len(),
        a.edge_violations.len()
    ))
}

fn everything_checkable() -> Outcome {
    let mut lines = Vec::new();
    for family in [
        Family::Mop,
        Family::Halin,
        Family::Mycielski,
        Family::Clique4,
        Family::Standard,
    ] {
        let cfg = RunConfig::new(family);
        let rep = report::survey(&cfg).map_err(|e| e.to_string())?;
        let s = &rep.summary;
        ensure(s.violations == 0 && s.errors == 0, || {
            format!("{family}: {s:?}")
        })?;
        for r in rep.rows.iter().filter(|r| r.exact_status == "bound-only") {
            ensure(r.n > cfg.max_vertices || r.m > cfg.max_edges, || {
                format!("{family} {} left unchecked", r.name)
            })?;
            ensure(
                r.vertex_holds.unwrap_or(true) && r.edge_holds.unwrap_or(true),
                || format!("{} not certified", r.name),
            )?;
        }
        lines.push(format!("{family} {}/{}", s.rows, s.bound_only));
    }
    Ok(format!(
        "default surveys clean (rows/bound-only): {}",
        lines.join(", ")
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("known values", known_values),
        ("maximal outerplanar graphs", mop_theorems),
        ("Halin graphs", halin_theorems),
        ("Mycielski graphs", mycielski_results),
        ("Mycielskian extensions", extension_theorems),
        ("clique number four", clique4_theorem),
        ("oracle equivalence", oracle_equivalence),
        ("conjecture experiment", conjecture_experiment),
        ("all results checked at desk scale", everything_checkable),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {} ({name}): PASS [{secs:.2}s] {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} ({name}): FAIL [{secs:.2}s] {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
