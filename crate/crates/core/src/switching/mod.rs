//! Switching equivalence of gain graphs.
//!
//! Two gain graphs on the same underlying graph are switching equivalent
//! exactly when their fundamental cycles (for any one maximal forest) carry
//! the same gains. The decision procedure normalizes both graphs so every
//! forest edge has gain 1, compares the remaining chord gains, and composes
//! the two normalizing switchings into a witness.

mod cycles;
mod forest;

pub use cycles::{chordless_cycles, is_chordless, simple_cycles};
pub use forest::{canonical_cycle, fundamental_cycles, spanning_forest, FundamentalCycleBasis, SpanningForest};

use serde::Serialize;

use crate::census::is_cactus;
use crate::error::{Error, Result};
use crate::gain::Gain;
use crate::gain_graph::{GainGraph, SwitchingFunction};
use crate::limits::{check_cap, Limits};

/// Product of the gains along a walk given as a vertex sequence.
pub fn walk_gain(g: &GainGraph, walk: &[usize]) -> Result<Gain> {
    let mut acc = g.group().one();
    for pair in walk.windows(2) {
        let step = g.gain(pair[0], pair[1]).ok_or(Error::NotAdjacent(pair[0], pair[1]))?;
        acc = acc * step;
    }
    Ok(acc)
}

/// Gain of the closed walk `cycle[0] -> ... -> cycle[last] -> cycle[0]`.
pub fn cycle_gain(g: &GainGraph, cycle: &[usize]) -> Result<Gain> {
    let mut closed = cycle.to_vec();
    if let Some(&first) = cycle.first() {
        closed.push(first);
    }
    walk_gain(g, &closed)
}

/// Gains of the fundamental cycles, ordered by chord edge id.
pub fn cycle_gain_profile(g: &GainGraph, basis: &FundamentalCycleBasis) -> Vec<Gain> {
    basis.cycles().iter().map(|c| cycle_gain(g, c).expect("basis cycles lie in the graph")).collect()
}

/// Switches `g` so every forest edge has gain 1.
///
/// The witness has `θ(root) = 1` in each component and `θ(w)` equal to the
/// gain of the forest path from `w` to its root.
pub fn normalize_to_forest(g: &GainGraph, f: &SpanningForest) -> (GainGraph, SwitchingFunction) {
    assert!(f.spans(g.graph()), "forest does not span the graph");
    let theta = forest_potential(g, f);
    let normalized = g.switch(&theta).expect("potential matches graph");
    (normalized, theta)
}

fn forest_potential(g: &GainGraph, f: &SpanningForest) -> SwitchingFunction {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| f.depth(v));
    let mut theta = vec![g.group().one(); n];
    for v in order {
        if let Some((p, _)) = f.parent(v) {
            theta[v] = g.gain(v, p).unwrap() * theta[p];
        }
    }
    SwitchingFunction::new(theta).expect("single group")
}

/// First fundamental cycle on which two gain graphs disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleMismatch {
    pub index: usize,
    pub cycle: Vec<usize>,
    pub left: Gain,
    pub right: Gain,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Equivalence {
    /// `θ` with `D(θ)⁻¹ H(a) D(θ) = H(b)`.
    Equivalent(SwitchingFunction),
    NotEquivalent(CycleMismatch),
    /// The underlying graphs differ, so the question does not apply.
    DifferentGraph,
}

impl Equivalence {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, Equivalence::Equivalent(_))
    }

    pub fn witness(&self) -> Option<&SwitchingFunction> {
        match self {
            Equivalence::Equivalent(theta) => Some(theta),
            _ => None,
        }
    }
}

/// Decides switching equivalence using the BFS forest of the shared graph.
pub fn switching_equivalent(a: &GainGraph, b: &GainGraph) -> Result<Equivalence> {
    if a.graph() != b.graph() {
        return Ok(Equivalence::DifferentGraph);
    }
    switching_equivalent_with_forest(a, b, &SpanningForest::bfs(a.graph()))
}

/// As [`switching_equivalent`], with a caller-chosen spanning forest.
pub fn switching_equivalent_with_forest(a: &GainGraph, b: &GainGraph, f: &SpanningForest) -> Result<Equivalence> {
    if a.group() != b.group() {
        return Err(Error::GroupMismatch { left: a.group().order(), right: b.group().order() });
    }
    if a.graph() != b.graph() {
        return Ok(Equivalence::DifferentGraph);
    }
    let (na, theta_a) = normalize_to_forest(a, f);
    let (nb, theta_b) = normalize_to_forest(b, f);
    if na.edge_gains() != nb.edge_gains() {
        let basis = fundamental_cycles(a.graph(), f);
        let index = basis
            .chords()
            .iter()
            .position(|&id| na.edge_gain(id) != nb.edge_gain(id))
            .expect("normalized graphs differ only on chords");
        let cycle = basis.cycles()[index].clone();
        let left = cycle_gain(a, &cycle)?;
        let right = cycle_gain(b, &cycle)?;
        return Ok(Equivalence::NotEquivalent(CycleMismatch { index, cycle, left, right }));
    }
    let theta = theta_a.compose(&theta_b.conj());
    debug_assert!(theta.witnesses(a, b));
    Ok(Equivalence::Equivalent(theta))
}

/// Compares gains on every chordless cycle (exhaustive; small graphs only).
pub fn cycle_gains_equal_chordless(a: &GainGraph, b: &GainGraph, limits: &Limits) -> Result<bool> {
    if a.graph() != b.graph() {
        return Ok(false);
    }
    check_cap("vertex count", a.n(), limits.max_cycle_vertices)?;
    for c in chordless_cycles(a.graph()) {
        if cycle_gain(a, &c)? != cycle_gain(b, &c)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every cycle has gain 1. Checking the fundamental cycles suffices.
pub fn is_balanced(g: &GainGraph) -> bool {
    let f = SpanningForest::bfs(g.graph());
    let (normalized, _) = normalize_to_forest(g, &f);
    normalized.edge_gains().iter().all(|x| x.is_one())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GainCharacter {
    /// Every cycle has gain 1 (vacuously so for forests).
    Balanced,
    /// Every cycle has gain -1.
    Negative,
    /// Every cycle has gain `i` or `-i`.
    Imaginary,
    MixedProfile,
}

/// Classifies the cycle gains of `g`.
///
/// On a cactus the fundamental cycles are all the cycles, so no search is
/// needed; otherwise every simple cycle is enumerated under the vertex cap.
pub fn gain_character(g: &GainGraph, limits: &Limits) -> Result<GainCharacter> {
    if is_balanced(g) {
        return Ok(GainCharacter::Balanced);
    }
    let gains: Vec<Gain> = if is_cactus(g.graph()) {
        let basis = fundamental_cycles(g.graph(), &SpanningForest::bfs(g.graph()));
        cycle_gain_profile(g, &basis)
    } else {
        check_cap("vertex count", g.n(), limits.max_cycle_vertices)?;
        simple_cycles(g.graph()).iter().map(|c| cycle_gain(g, c)).collect::<Result<_>>()?
    };
    let minus = g.group().minus_one();
    let i = g.group().imaginary_unit();
    if minus.is_some() && gains.iter().all(|&x| Some(x) == minus) {
        return Ok(GainCharacter::Negative);
    }
    if let Some(i) = i {
        if gains.iter().all(|&x| x == i || x == i.conj()) {
            return Ok(GainCharacter::Imaginary);
        }
    }
    Ok(GainCharacter::MixedProfile)
}

/// Whether `H` and `-H` are switching equivalent: exactly when the
/// underlying graph is bipartite.
pub fn equivalent_to_negation(g: &GainGraph) -> bool {
    g.graph().is_bipartite()
}

/// Switching taking `g` to its negation: `1` on one side of a bipartition
/// and `-1` on the other. `None` for non-bipartite graphs or odd order.
pub fn negation_witness(g: &GainGraph) -> Option<SwitchingFunction> {
    let minus = g.group().minus_one()?;
    let sides = g.graph().bipartition()?;
    let theta = sides.into_iter().map(|s| if s { minus } else { g.group().one() }).collect();
    Some(SwitchingFunction::new(theta).expect("single group"))
}
