use std::collections::VecDeque;

use super::{Graph, GraphError};

/// Breadth-first spanning tree. Neighbours are explored in ascending id order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BfsTree {
    pub root: usize,
    /// `parent[root]` is `None`.
    pub parent: Vec<Option<usize>>,
    pub level: Vec<usize>,
    /// Vertices in visiting order.
    pub order: Vec<usize>,
}

impl BfsTree {
    /// Tree children of `v`, ascending.
    pub fn children(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = (0..self.parent.len())
            .filter(|&u| self.parent[u] == Some(v))
            .collect();
        out.sort_unstable();
        out
    }
}

impl Graph {
    pub fn bfs_tree(&self, root: usize) -> Result<BfsTree, GraphError> {
        let n = self.order();
        if root >= n {
            return Err(GraphError::OutOfRange { vertex: root, n });
        }
        let mut parent = vec![None; n];
        let mut level = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        let mut queue = VecDeque::from([root]);
        level[root] = 0;
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for &y in self.neighbors(x) {
                if level[y] == usize::MAX {
                    level[y] = level[x] + 1;
                    parent[y] = Some(x);
                    queue.push_back(y);
                }
            }
        }
        if order.len() != n {
            return Err(GraphError::Disconnected);
        }
        Ok(BfsTree {
            root,
            parent,
            level,
            order,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_levels() {
        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let t = c4.bfs_tree(0).unwrap();
        assert_eq!(t.level, vec![0, 1, 2, 1]);
        assert_eq!(t.parent[2], Some(1));
        assert_eq!(t.children(0), vec![1, 3]);
    }

    #[test]
    fn complete_and_path() {
        let k4 = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.bfs_tree(0).unwrap().level, vec![0, 1, 1, 1]);
        let p5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(p5.bfs_tree(0).unwrap().level, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn disconnected_fails() {
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        assert_eq!(g.bfs_tree(0), Err(GraphError::Disconnected));
    }
}
