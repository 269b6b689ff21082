//! Counting and sizing switching classes of mixed graphs.
//!
//! A graph with `m` edges has `3^m` mixed orientations. They fall into
//! between `3^{m-n+c}` and `4^{m-n+c}` switching classes. Class sizes have
//! closed forms for cycles, multiply over blocks, and for 2-connected plane
//! graphs follow from the face structure.

mod alpha;
mod blocks;
mod brute;
mod plane;

pub use alpha::{alpha, alpha_closed_form, alpha_vector, cycle_class_size, slot, ClassCountVector};
pub use blocks::{block_decompose, cut_edges, is_cactus, is_two_connected, Block};
pub use brute::{brute_force_census, orientation, Census, CensusClass};
pub use plane::{
    enumerate_gamma, gamma_is_nonempty, parse_face_structure, plane_class_count, plane_class_size, FaceStructure,
    GammaMatrix,
};

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gain_graph::GainGraph;
use crate::graph::SimpleGraph;
use crate::limits::{check_cap, Limits};
use crate::switching::{cycle_gain, fundamental_cycles, SpanningForest};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassCountBounds {
    #[serde(serialize_with = "ser_big")]
    pub lower: BigUint,
    #[serde(serialize_with = "ser_big")]
    pub upper: BigUint,
    /// Every fundamental cycle of the BFS basis has at least two edges on
    /// no other basis cycle, which forces the upper bound. `false` does not
    /// mean the bound is missed.
    pub upper_tight: bool,
    /// `m - n + c`.
    pub cyclomatic: usize,
}

fn ser_big<S: serde::Serializer>(x: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

/// `3^{m-n+c}` and `4^{m-n+c}`.
pub fn class_count_bounds(g: &SimpleGraph) -> ClassCountBounds {
    let d = g.cyclomatic_number();
    let basis = fundamental_cycles(g, &SpanningForest::bfs(g));
    let mut uses = vec![0usize; g.m()];
    let edge_sets: Vec<_> = (0..basis.len()).map(|i| basis.cycle_edges(g, i)).collect();
    for set in &edge_sets {
        for &e in set {
            uses[e] += 1;
        }
    }
    let upper_tight = edge_sets.iter().all(|set| set.iter().filter(|&&e| uses[e] == 1).count() >= 2);
    ClassCountBounds {
        lower: BigUint::from(3u8).pow(d as u32),
        upper: BigUint::from(4u8).pow(d as u32),
        upper_tight,
        cyclomatic: d,
    }
}

/// `3^{|S|}` for the set `S` of cut edges: a lower bound on every class size.
pub fn cut_edge_lower_bound(g: &SimpleGraph) -> BigUint {
    BigUint::from(3u8).pow(cut_edges(g).len() as u32)
}

/// Class size of a mixed graph as the product of its blocks' class sizes:
/// 3 per bridge, `α_x(ℓ)` per cycle block of length `ℓ` and gain `x`, and a
/// brute-force census for any other block.
pub fn class_size_by_blocks(g: &GainGraph, limits: &Limits) -> Result<BigUint> {
    if !g.is_mixed() {
        return Err(Error::NotMixed);
    }
    let mut size = BigUint::one();
    for block in block_decompose(g.graph()) {
        let local = block.gain_graph(g);
        if block.is_bridge() {
            size *= 3u8;
        } else if block.is_cycle() {
            let cycle = block_cycle(block.graph());
            size *= cycle_class_size(cycle.len(), cycle_gain(&local, &cycle)?)?;
        } else {
            check_cap("block edge count", block.graph().m(), limits.max_census_edges)?;
            let census = brute_force_census(block.graph(), limits)?;
            size *= census.size_of(&local);
        }
    }
    Ok(size)
}

/// Vertex order around a graph that is a single cycle.
fn block_cycle(g: &SimpleGraph) -> Vec<usize> {
    let mut cycle = vec![0];
    let mut prev = usize::MAX;
    let mut at = 0;
    loop {
        let next = g.neighbors(at).iter().map(|&(w, _)| w).find(|&w| w != prev).expect("degree two");
        if next == 0 {
            return cycle;
        }
        cycle.push(next);
        prev = at;
        at = next;
    }
}
