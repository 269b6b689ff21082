//! Bridges and biconnected components by a low-link depth-first scan.

use crate::gain_graph::GainGraph;
use crate::graph::{EdgeId, SimpleGraph};

/// A maximal 2-connected subgraph, or a bridge.
///
/// `vertices` is sorted, so the local graph keeps the orientation `u < v`
/// of every edge and gains carry over unchanged.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    vertices: Vec<usize>,
    edges: Vec<EdgeId>,
    graph: SimpleGraph,
}

impl Block {
    fn new(g: &SimpleGraph, mut edges: Vec<EdgeId>) -> Self {
        edges.sort_unstable();
        let mut vertices: Vec<usize> = edges.iter().flat_map(|&id| <[usize; 2]>::from(g.edge(id))).collect();
        vertices.sort_unstable();
        vertices.dedup();
        let local = |v: usize| vertices.binary_search(&v).expect("edge endpoint in block");
        let pairs: Vec<_> = edges.iter().map(|&id| g.edge(id)).map(|(u, v)| (local(u), local(v))).collect();
        let graph = SimpleGraph::new(vertices.len(), pairs).expect("subgraph of a simple graph");
        Self { vertices, edges, graph }
    }

    /// Global vertex of each local vertex.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Global edge ids, ascending; local edge `j` is global edge `edges()[j]`.
    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn is_bridge(&self) -> bool {
        self.edges.len() == 1
    }

    pub fn is_cycle(&self) -> bool {
        self.edges.len() >= 3 && self.edges.len() == self.vertices.len()
    }

    /// The block with the gains it carries in `g`.
    pub fn gain_graph(&self, g: &GainGraph) -> GainGraph {
        let gains = self.edges.iter().map(|&id| g.edge_gain(id)).collect();
        GainGraph::from_edge_gains(self.graph.clone(), g.group(), gains, g.is_mixed())
            .expect("restriction keeps gains valid")
    }
}

struct Scan<'a> {
    g: &'a SimpleGraph,
    disc: Vec<usize>,
    low: Vec<usize>,
    clock: usize,
    stack: Vec<EdgeId>,
    blocks: Vec<Vec<EdgeId>>,
    bridges: Vec<EdgeId>,
}

impl Scan<'_> {
    fn visit(&mut self, u: usize, via: Option<EdgeId>) {
        self.clock += 1;
        self.disc[u] = self.clock;
        self.low[u] = self.clock;
        for &(w, id) in self.g.neighbors(u) {
            if Some(id) == via {
                continue;
            }
            if self.disc[w] == 0 {
                self.stack.push(id);
                self.visit(w, Some(id));
                self.low[u] = self.low[u].min(self.low[w]);
                if self.low[w] > self.disc[u] {
                    self.bridges.push(id);
                }
                if self.low[w] >= self.disc[u] {
                    let mut block = Vec::new();
                    while let Some(e) = self.stack.pop() {
                        block.push(e);
                        if e == id {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if self.disc[w] < self.disc[u] {
                self.stack.push(id);
                self.low[u] = self.low[u].min(self.disc[w]);
            }
        }
    }
}

fn scan(g: &SimpleGraph) -> (Vec<Vec<EdgeId>>, Vec<EdgeId>) {
    let n = g.n();
    let mut s = Scan {
        g,
        disc: vec![0; n],
        low: vec![0; n],
        clock: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
        bridges: Vec::new(),
    };
    for v in 0..n {
        if s.disc[v] == 0 {
            s.visit(v, None);
        }
    }
    s.bridges.sort_unstable();
    (s.blocks, s.bridges)
}

/// Cut edges, ascending by id.
pub fn cut_edges(g: &SimpleGraph) -> Vec<EdgeId> {
    scan(g).1
}

/// Biconnected components; bridges come out as `K₂` blocks and isolated
/// vertices belong to no block. Ordered by smallest edge id.
pub fn block_decompose(g: &SimpleGraph) -> Vec<Block> {
    let mut blocks: Vec<Block> = scan(g).0.into_iter().map(|edges| Block::new(g, edges)).collect();
    blocks.sort_by_key(|b| b.edges[0]);
    blocks
}

/// Every block is a single edge or a cycle.
pub fn is_cactus(g: &SimpleGraph) -> bool {
    block_decompose(g).iter().all(|b| b.is_bridge() || b.is_cycle())
}

/// Connected, at least three vertices, and no cut vertex.
pub fn is_two_connected(g: &SimpleGraph) -> bool {
    if g.n() < 3 || !g.is_connected() {
        return false;
    }
    let blocks = block_decompose(g);
    blocks.len() == 1 && blocks[0].vertices.len() == g.n()
}
