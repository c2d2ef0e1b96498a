//! Ordered partitions and colour refinement over edge-coloured graphs.

use std::collections::VecDeque;

use crate::graph::Graph;

pub(crate) fn mix(h: u64, x: u64) -> u64 {
    // splitmix64 finaliser over the running hash
    let mut z = h ^ x
        .wrapping_add(0x9e37_79b9_7f4a_7c15)
        .wrapping_add(h << 6)
        .wrapping_add(h >> 2);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn color_key(c: u32) -> u64 {
    mix(0x51_7cc1_b727_220a, c as u64) | 1
}

/// A graph whose vertices and edges carry colours. Edge colour 0 means "no edge".
#[derive(Debug, Clone)]
pub(crate) struct Colored {
    pub n: usize,
    pub nbrs: Vec<Vec<(usize, u32)>>,
    pub color: Vec<u32>,
    pub vertex_color: Vec<u64>,
}

impl Colored {
    pub fn plain(g: &Graph) -> Self {
        Self::build(g, None, None)
    }

    /// `edge_colors`, when given, is aligned with `g.edges()` and must be positive.
    pub fn build(g: &Graph, vertex_colors: Option<&[u64]>, edge_colors: Option<&[u32]>) -> Self {
        let n = g.order();
        let mut color = vec![0u32; n * n];
        let mut nbrs = vec![Vec::new(); n];
        for (i, e) in g.edges().iter().enumerate() {
            let c = edge_colors.map_or(1, |cs| cs[i]);
            debug_assert!(c > 0);
            let (u, v) = e.endpoints();
            color[u * n + v] = c;
            color[v * n + u] = c;
            nbrs[u].push((v, c));
            nbrs[v].push((u, c));
        }
        let vertex_color = vertex_colors.map_or_else(|| vec![0; n], |vc| vc.to_vec());
        Colored {
            n,
            nbrs,
            color,
            vertex_color,
        }
    }

    pub fn edge_color(&self, u: usize, v: usize) -> u32 {
        self.color[u * self.n + v]
    }

    /// True if `image` preserves vertex colours and coloured adjacency.
    pub fn is_automorphism(&self, image: &[usize]) -> bool {
        (0..self.n).all(|u| self.vertex_color[u] == self.vertex_color[image[u]])
            && (0..self.n).all(|u| {
                self.nbrs[u]
                    .iter()
                    .all(|&(v, c)| self.edge_color(image[u], image[v]) == c)
            })
    }
}

/// Ordered partition of `0..n` into contiguous cells of `elems`.
#[derive(Debug, Clone)]
pub(crate) struct Partition {
    pub elems: Vec<usize>,
    pos: Vec<usize>,
    start_of: Vec<usize>,
    /// Indexed by cell start; the exclusive end of that cell.
    end: Vec<usize>,
    cells: usize,
}

impl Partition {
    /// Cells are the vertex colour classes, ordered by colour.
    pub fn from_colors(g: &Colored) -> Self {
        let n = g.n;
        let mut elems: Vec<usize> = (0..n).collect();
        elems.sort_by_key(|&v| (g.vertex_color[v], v));
        let mut pos = vec![0; n];
        let mut start_of = vec![0; n];
        let mut end = vec![0; n + 1];
        let mut cells = 0;
        let mut s = 0;
        while s < n {
            let mut e = s + 1;
            while e < n && g.vertex_color[elems[e]] == g.vertex_color[elems[s]] {
                e += 1;
            }
            for (i, &v) in elems.iter().enumerate().take(e).skip(s) {
                pos[v] = i;
                start_of[v] = s;
            }
            end[s] = e;
            cells += 1;
            s = e;
        }
        Partition {
            elems,
            pos,
            start_of,
            end,
            cells,
        }
    }

    pub fn n(&self) -> usize {
        self.elems.len()
    }

    pub fn is_discrete(&self) -> bool {
        self.cells == self.n()
    }

    pub fn cell_starts(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.cells);
        let mut s = 0;
        while s < self.n() {
            out.push(s);
            s = self.end[s];
        }
        out
    }

    pub fn cell_end(&self, start: usize) -> Option<usize> {
        let n = self.n();
        if start < n && self.start_of[self.elems[start]] == start {
            Some(self.end[start])
        } else {
            None
        }
    }

    /// First non-singleton cell of minimum size, as `(start, end)`.
    pub fn target_cell(&self) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        let mut s = 0;
        while s < self.n() {
            let e = self.end[s];
            let len = e - s;
            if len > 1 && best.is_none_or(|(bs, be)| len < be - bs) {
                best = Some((s, e));
            }
            s = e;
        }
        best
    }

    /// Moves `v` into a singleton cell at the front of its cell; returns that cell's start.
    pub fn individualize(&mut self, v: usize) -> usize {
        let s = self.start_of[v];
        let e = self.end[s];
        debug_assert!(e - s > 1);
        let p = self.pos[v];
        let other = self.elems[s];
        self.elems.swap(s, p);
        self.pos[other] = p;
        self.pos[v] = s;
        self.end[s] = s + 1;
        self.end[s + 1] = e;
        for i in s + 1..e {
            self.start_of[self.elems[i]] = s + 1;
        }
        self.cells += 1;
        s
    }

    /// Refines to the coarsest equitable refinement reachable from `splitters`.
    /// Returns a trace hash that is invariant under isomorphism.
    pub fn refine(&mut self, g: &Colored, splitters: &[usize]) -> u64 {
        let n = self.n();
        let mut trace = mix(0, self.cells as u64);
        let mut queued = vec![false; n + 1];
        let mut queue = VecDeque::new();
        for &s in splitters {
            if !queued[s] {
                queued[s] = true;
                queue.push_back(s);
            }
        }
        let mut keys = vec![0u64; n];
        let mut touched = vec![false; n];
        let mut touched_verts = Vec::new();
        let mut touched_cells = Vec::new();
        while let Some(s) = queue.pop_front() {
            queued[s] = false;
            if self.is_discrete() {
                break;
            }
            let e = self.end[s];
            for i in s..e {
                let u = self.elems[i];
                for &(v, c) in &g.nbrs[u] {
                    if !touched[v] {
                        touched[v] = true;
                        touched_verts.push(v);
                    }
                    keys[v] = keys[v].wrapping_add(color_key(c));
                }
            }
            for &v in &touched_verts {
                touched_cells.push(self.start_of[v]);
            }
            touched_cells.sort_unstable();
            touched_cells.dedup();
            trace = mix(trace, s as u64);
            for &cs in &touched_cells {
                let ce = self.end[cs];
                if ce - cs == 1 {
                    continue;
                }
                let slice = &mut self.elems[cs..ce];
                slice.sort_unstable_by_key(|&v| (keys[v], v));
                if keys[slice[0]] == keys[slice[ce - cs - 1]] {
                    continue;
                }
                let mut a = cs;
                let mut parts = 0u64;
                while a < ce {
                    let k = keys[self.elems[a]];
                    let mut b = a + 1;
                    while b < ce && keys[self.elems[b]] == k {
                        b += 1;
                    }
                    for i in a..b {
                        let v = self.elems[i];
                        self.pos[v] = i;
                        self.start_of[v] = a;
                    }
                    self.end[a] = b;
                    trace = mix(trace, ((a as u64) << 32) ^ (b - a) as u64);
                    trace = mix(trace, k);
                    if !queued[a] {
                        queued[a] = true;
                        queue.push_back(a);
                    }
                    parts += 1;
                    a = b;
                }
                self.cells += parts as usize - 1;
            }
            for &v in &touched_verts {
                keys[v] = 0;
                touched[v] = false;
            }
            touched_verts.clear();
            touched_cells.clear();
        }
        mix(trace, self.cells as u64)
    }
}
