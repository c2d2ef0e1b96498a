//! Canonical relabeling for small graphs: the search-tree leaf with the least
//! (trace sequence, relabeled adjacency) pair, with automorphism pruning.

use std::cmp::Ordering;

use super::partition::{mix, Colored, Partition};
use super::search::UnionFind;

struct Best {
    traces: Vec<u64>,
    code: Vec<u32>,
    leaf: Vec<usize>,
}

struct Canon<'a> {
    g: &'a Colored,
    best: Option<Best>,
    autos: Vec<Vec<usize>>,
}

impl Canon<'_> {
    fn code(&self, leaf: &[usize]) -> Vec<u32> {
        let n = leaf.len();
        let mut code = Vec::with_capacity(n * (n + 1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                code.push(self.g.edge_color(leaf[i], leaf[j]));
            }
        }
        code
    }

    fn explore(&mut self, part: Partition, traces: &mut Vec<u64>, path: &mut Vec<usize>) {
        if let Some(best) = &self.best {
            let k = traces.len().min(best.traces.len());
            if traces[..k].cmp(&best.traces[..k]) == Ordering::Greater {
                return;
            }
        }
        let Some((s, e)) = part.target_cell() else {
            self.leaf(&part.elems, traces);
            return;
        };
        let mut cell = part.elems[s..e].to_vec();
        cell.sort_unstable();
        let mut explored: Vec<usize> = Vec::new();
        for w in cell {
            if !explored.is_empty() {
                let mut uf = UnionFind::new(self.g.n);
                for a in &self.autos {
                    if path.iter().all(|&p| a[p] == p) {
                        uf.union_perm(a);
                    }
                }
                let rw = uf.find(w);
                if explored.iter().any(|&x| uf.find(x) == rw) {
                    continue;
                }
            }
            let mut child = part.clone();
            let cs = child.individualize(w);
            let t = child.refine(self.g, &[cs]);
            traces.push(mix(t, cs as u64));
            path.push(w);
            self.explore(child, traces, path);
            path.pop();
            traces.pop();
            explored.push(w);
        }
    }

    fn leaf(&mut self, leaf: &[usize], traces: &[u64]) {
        let code = self.code(leaf);
        let replace = match &self.best {
            None => true,
            Some(best) => match traces.cmp(&best.traces) {
                Ordering::Less => true,
                Ordering::Greater => false,
                Ordering::Equal => match code.cmp(&best.code) {
                    Ordering::Less => true,
                    Ordering::Greater => false,
                    Ordering::Equal => {
                        let mut image = vec![0; leaf.len()];
                        for (i, &v) in best.leaf.iter().enumerate() {
                            image[v] = leaf[i];
                        }
                        self.autos.push(image);
                        false
                    }
                },
            },
        };
        if replace {
            self.best = Some(Best {
                traces: traces.to_vec(),
                code,
                leaf: leaf.to_vec(),
            });
        }
    }
}

/// `result[v]` is the canonical position of vertex `v`.
pub(crate) fn canonical_labeling(g: &Colored) -> Vec<usize> {
    let mut root = Partition::from_colors(g);
    let starts = root.cell_starts();
    let mut traces = vec![root.refine(g, &starts)];
    let mut canon = Canon {
        g,
        best: None,
        autos: Vec::new(),
    };
    canon.explore(root, &mut traces, &mut Vec::new());
    let best = canon.best.expect("search tree has a leaf");
    let mut position = vec![0; g.n];
    for (i, &v) in best.leaf.iter().enumerate() {
        position[v] = i;
    }
    position
}
