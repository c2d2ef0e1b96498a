use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::FamilyError;
use crate::graph::Graph;
use crate::group::canonical_key;

pub const DEFAULT_CONNECTED_CAP: usize = 7;

/// All graphs of order `n` up to isomorphism: each class of order `n - 1`
/// gets a new vertex joined to every possible neighbour subset.
pub fn enumerate_graphs(n: usize, cap: usize) -> Result<Vec<Graph>, FamilyError> {
    if n > cap {
        return Err(FamilyError::SizeLimitExceeded {
            family: "graphs",
            n,
            cap,
        });
    }
    let mut level = vec![Graph::empty(0)];
    for order in 0..n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for g in &level {
            let base: Vec<_> = g.edges().iter().map(|e| e.endpoints()).collect();
            for mask in 0u32..(1 << order) {
                let mut pairs = base.clone();
                pairs.extend(
                    (0..order)
                        .filter(|&v| mask >> v & 1 == 1)
                        .map(|v| (v, order)),
                );
                let h = Graph::new(order + 1, &pairs)?;
                if seen.insert(canonical_key(&h)) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    Ok(level)
}

pub fn enumerate_connected(n: usize, cap: usize) -> Result<Vec<Graph>, FamilyError> {
    Ok(enumerate_graphs(n, cap)?
        .into_iter()
        .filter(Graph::is_connected)
        .collect())
}

/// A connected graph with clique number 4 and maximum degree at least 5:
/// a K_4 on `0..4` grown by random pendant vertices, occasionally gluing on
/// further K_4 blocks at a single vertex. Deterministic in `seed`; the order
/// is at most `max_order + 2`.
pub fn clique4_graph(seed: u64, max_order: usize) -> Graph {
    let max_order = max_order.max(9);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs: Vec<(usize, usize)> = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let mut n = 4;
    let mut degree = vec![3usize; 4];
    let target = rng.gen_range(n + 4..=max_order);
    while n < target {
        let at = rng.gen_range(0..n);
        if n + 3 <= target && rng.gen_bool(0.15) {
            let block = [at, n, n + 1, n + 2];
            for i in 0..4 {
                for j in i + 1..4 {
                    pairs.push((block[i], block[j]));
                }
            }
            degree[at] += 3;
            degree.extend([3, 3, 3]);
            n += 3;
        } else {
            pairs.push((at, n));
            degree[at] += 1;
            degree.push(1);
            n += 1;
        }
    }
    while degree.iter().max().copied().unwrap_or(0) < 5 {
        let at = (0..n)
            .max_by_key(|&v| (degree[v], std::cmp::Reverse(v)))
            .unwrap();
        pairs.push((at, n));
        degree[at] += 1;
        degree.push(1);
        n += 1;
    }
    Graph::new(n, &pairs).expect("construction stays in range")
}

pub fn clique4_graphs(count: usize, seed: u64, max_order: usize) -> Vec<Graph> {
    (0..count as u64)
        .map(|i| clique4_graph(seed.wrapping_add(i), max_order))
        .collect()
}
