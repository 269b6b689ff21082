//! Spanning forests and fundamental cycle bases.

use std::collections::VecDeque;

use crate::graph::{EdgeId, SimpleGraph};

/// A breadth-first maximal spanning forest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningForest {
    parent: Vec<Option<(usize, EdgeId)>>,
    root: Vec<usize>,
    depth: Vec<usize>,
    in_forest: Vec<bool>,
}

impl SpanningForest {
    /// BFS forest; each component is rooted at its smallest vertex and
    /// neighbors are explored in ascending order.
    pub fn bfs(g: &SimpleGraph) -> Self {
        let order: Vec<usize> = (0..g.n()).collect();
        Self::bfs_with_order(g, &order)
    }

    /// BFS forest where roots are picked, and neighbors explored, by their
    /// position in `order` (a permutation of the vertices).
    pub fn bfs_with_order(g: &SimpleGraph, order: &[usize]) -> Self {
        assert_eq!(order.len(), g.n(), "order must list every vertex once");
        let mut rank = vec![usize::MAX; g.n()];
        for (i, &v) in order.iter().enumerate() {
            rank[v] = i;
        }
        assert!(rank.iter().all(|&r| r != usize::MAX), "order must be a permutation");

        let mut parent = vec![None; g.n()];
        let mut root = vec![usize::MAX; g.n()];
        let mut depth = vec![0; g.n()];
        let mut in_forest = vec![false; g.m()];
        for &s in order {
            if root[s] != usize::MAX {
                continue;
            }
            root[s] = s;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let mut nbrs: Vec<(usize, EdgeId)> = g.neighbors(u).to_vec();
                nbrs.sort_by_key(|&(w, _)| rank[w]);
                for (w, id) in nbrs {
                    if root[w] == usize::MAX {
                        root[w] = s;
                        parent[w] = Some((u, id));
                        depth[w] = depth[u] + 1;
                        in_forest[id] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        Self { parent, root, depth, in_forest }
    }

    pub fn n(&self) -> usize {
        self.parent.len()
    }

    /// Parent vertex and the connecting edge, `None` at roots.
    pub fn parent(&self, v: usize) -> Option<(usize, EdgeId)> {
        self.parent[v]
    }

    pub fn root(&self, v: usize) -> usize {
        self.root[v]
    }

    pub fn roots(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.root[v] == v).collect()
    }

    pub fn depth(&self, v: usize) -> usize {
        self.depth[v]
    }

    pub fn contains_edge(&self, id: EdgeId) -> bool {
        self.in_forest[id]
    }

    pub fn forest_edges(&self) -> Vec<EdgeId> {
        (0..self.in_forest.len()).filter(|&id| self.in_forest[id]).collect()
    }

    /// Non-forest edges in id order.
    pub fn chords(&self) -> Vec<EdgeId> {
        (0..self.in_forest.len()).filter(|&id| !self.in_forest[id]).collect()
    }

    /// Whether this forest was built for `g` (same vertex and edge counts
    /// and forest edges really are edges of `g` joining parent and child).
    pub fn spans(&self, g: &SimpleGraph) -> bool {
        self.n() == g.n()
            && self.in_forest.len() == g.m()
            && (0..self.n()).all(|v| match self.parent[v] {
                None => self.root[v] == v,
                Some((p, id)) => g.edge_id(p, v) == Some(id) && self.in_forest[id],
            })
    }

    /// Tree path from `u` to `v` (both in the same component), inclusive.
    pub fn tree_path(&self, mut u: usize, mut v: usize) -> Vec<usize> {
        let mut head = vec![u];
        let mut tail = vec![v];
        while self.depth[u] > self.depth[v] {
            u = self.parent[u].unwrap().0;
            head.push(u);
        }
        while self.depth[v] > self.depth[u] {
            v = self.parent[v].unwrap().0;
            tail.push(v);
        }
        while u != v {
            u = self.parent[u].unwrap().0;
            v = self.parent[v].unwrap().0;
            head.push(u);
            tail.push(v);
        }
        tail.pop();
        head.extend(tail.into_iter().rev());
        head
    }
}

pub fn spanning_forest(g: &SimpleGraph) -> SpanningForest {
    SpanningForest::bfs(g)
}

/// The fundamental cycles of a graph with respect to a spanning forest.
///
/// Each cycle is the tree path between the chord's ends closed by the
/// chord, written starting at its smallest vertex and continuing toward
/// the smaller of that vertex's two cycle neighbors. The first vertex is
/// not repeated at the end.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FundamentalCycleBasis {
    cycles: Vec<Vec<usize>>,
    chords: Vec<EdgeId>,
}

impl FundamentalCycleBasis {
    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn chords(&self) -> &[EdgeId] {
        &self.chords
    }

    /// Edge ids of cycle `i`, in traversal order.
    pub fn cycle_edges(&self, g: &SimpleGraph, i: usize) -> Vec<EdgeId> {
        cycle_edge_ids(g, &self.cycles[i])
    }
}

pub(crate) fn cycle_edge_ids(g: &SimpleGraph, cycle: &[usize]) -> Vec<EdgeId> {
    let len = cycle.len();
    (0..len)
        .map(|i| g.edge_id(cycle[i], cycle[(i + 1) % len]).expect("consecutive cycle vertices are adjacent"))
        .collect()
}

/// Rotates and orients a cycle: smallest vertex first, then its smaller neighbor.
pub fn canonical_cycle(mut cycle: Vec<usize>) -> Vec<usize> {
    let len = cycle.len();
    if len < 3 {
        return cycle;
    }
    let pos = (0..len).min_by_key(|&i| cycle[i]).unwrap();
    cycle.rotate_left(pos);
    if cycle[len - 1] < cycle[1] {
        cycle[1..].reverse();
    }
    cycle
}

pub fn fundamental_cycles(g: &SimpleGraph, f: &SpanningForest) -> FundamentalCycleBasis {
    assert!(f.spans(g), "forest does not span the graph");
    let chords = f.chords();
    let cycles = chords
        .iter()
        .map(|&id| {
            let (u, v) = g.edge(id);
            canonical_cycle(f.tree_path(u, v))
        })
        .collect();
    FundamentalCycleBasis { cycles, chords }
}
