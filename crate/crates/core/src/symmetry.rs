//! Automorphisms, their action on switching classes, and switching
//! isomorphism.
//!
//! A permutation `f` acts on a gain graph `g` on the same underlying graph
//! by `gain_f(u, v) = gain(f(u), f(v))`. The action is well defined on
//! switching classes, and two gain graphs on one graph are switching
//! isomorphic exactly when their classes share an orbit.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gain::Gain;
use crate::gain_graph::{GainGraph, SwitchingFunction};
use crate::graph::SimpleGraph;
use crate::limits::{check_cap, Limits};
use crate::switching::{cycle_gain_profile, fundamental_cycles, switching_equivalent, SpanningForest};

/// A bijection of `0..n`, stored as its image list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct VertexPermutation {
    image: Vec<usize>,
}

impl VertexPermutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &v in &image {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidPermutation(format!("{image:?} is not a bijection of 0..{n}")));
            }
        }
        Ok(Self { image })
    }

    pub fn identity(n: usize) -> Self {
        Self { image: (0..n).collect() }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.image[v]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len(), "permutations of different degree");
        Self { image: other.image.iter().map(|&v| self.image[v]).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut image = vec![0; self.len()];
        for (i, &v) in self.image.iter().enumerate() {
            image[v] = i;
        }
        Self { image }
    }
}

impl fmt::Display for VertexPermutation {
    /// One-line notation on 1-based labels.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.image.iter().map(|v| (v + 1).to_string()).collect();
        write!(f, "[{}]", labels.join(" "))
    }
}

/// A permutation group listed element by element, sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutGroup {
    n: usize,
    elements: Vec<VertexPermutation>,
}

impl AutGroup {
    fn from_elements(n: usize, mut elements: Vec<VertexPermutation>) -> Self {
        elements.sort();
        elements.dedup();
        Self { n, elements }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[VertexPermutation] {
        &self.elements
    }

    pub fn contains(&self, f: &VertexPermutation) -> bool {
        self.elements.binary_search(f).is_ok()
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let elements = self.elements.iter().filter(|f| other.contains(f)).cloned().collect();
        Self::from_elements(self.n, elements)
    }

    /// Contains the identity and is closed under products and inverses.
    pub fn is_group(&self) -> bool {
        self.contains(&VertexPermutation::identity(self.n))
            && self.elements.iter().all(|f| self.contains(&f.inverse()))
            && self.elements.iter().all(|f| self.elements.iter().all(|g| self.contains(&f.compose(g))))
    }

    /// A generating set, chosen greedily in element order.
    pub fn generators(&self) -> Vec<VertexPermutation> {
        let mut gens: Vec<VertexPermutation> = Vec::new();
        let mut generated: BTreeSet<VertexPermutation> = BTreeSet::from([VertexPermutation::identity(self.n)]);
        for f in &self.elements {
            if generated.contains(f) {
                continue;
            }
            gens.push(f.clone());
            let mut queue: VecDeque<VertexPermutation> = generated.iter().cloned().collect();
            while let Some(x) = queue.pop_front() {
                for g in &gens {
                    let y = g.compose(&x);
                    if generated.insert(y.clone()) {
                        queue.push_back(y);
                    }
                }
            }
            if generated.len() == self.order() {
                break;
            }
        }
        gens
    }
}

/// Backtracking over images of `0, 1, ...` in turn. A candidate image must
/// have the same degree and agree with every earlier vertex under `pair_ok`.
fn search<F>(g: &SimpleGraph, pair_ok: F) -> Vec<VertexPermutation>
where
    F: Fn(usize, usize, usize, usize) -> bool,
{
    fn go<F: Fn(usize, usize, usize, usize) -> bool>(
        g: &SimpleGraph,
        pair_ok: &F,
        image: &mut Vec<usize>,
        used: &mut [bool],
        out: &mut Vec<VertexPermutation>,
    ) {
        let v = image.len();
        if v == g.n() {
            out.push(VertexPermutation { image: image.clone() });
            return;
        }
        for w in 0..g.n() {
            if used[w] || g.degree(w) != g.degree(v) {
                continue;
            }
            if (0..v).all(|u| g.has_edge(u, v) == g.has_edge(image[u], w) && pair_ok(u, v, image[u], w)) {
                used[w] = true;
                image.push(w);
                go(g, pair_ok, image, used, out);
                image.pop();
                used[w] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(g, &pair_ok, &mut Vec::with_capacity(g.n()), &mut vec![false; g.n()], &mut out);
    out
}

/// `Aut(G)`.
pub fn automorphisms(g: &SimpleGraph, limits: &Limits) -> Result<AutGroup> {
    check_cap("vertex count", g.n(), limits.max_aut_vertices)?;
    Ok(AutGroup::from_elements(g.n(), search(g, |_, _, _, _| true)))
}

/// Automorphisms of the underlying graph with `gain(f(u), f(v)) = gain(u, v)`
/// on every edge.
pub fn gain_automorphisms(g: &GainGraph, limits: &Limits) -> Result<AutGroup> {
    check_cap("vertex count", g.n(), limits.max_aut_vertices)?;
    let elements = search(g.graph(), |u, v, fu, fv| g.gain(u, v) == g.gain(fu, fv));
    Ok(AutGroup::from_elements(g.n(), elements))
}

/// The three groups of a mixed graph with arc set `S`, and the gain
/// automorphism group checked against both intersection identities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedAutDecomposition {
    /// `Aut(G)` of the underlying graph.
    pub underlying: AutGroup,
    /// Automorphisms of the spanning mixed subgraph formed by the arcs.
    pub arcs: AutGroup,
    /// `Aut` of the spanning subgraph formed by the undirected edges.
    pub undirected: AutGroup,
    /// Automorphisms of the mixed graph itself.
    pub mixed: AutGroup,
}

impl MixedAutDecomposition {
    /// `Aut(G^φ) = Aut(G) ∩ Aut(G(S)^φ) = Aut(G(S)^φ) ∩ Aut(G(E∖S))`.
    pub fn identities_hold(&self) -> bool {
        self.mixed == self.underlying.intersection(&self.arcs) && self.mixed == self.arcs.intersection(&self.undirected)
    }
}

pub fn mixed_aut_decomposition(g: &GainGraph, limits: &Limits) -> Result<MixedAutDecomposition> {
    if !g.is_mixed() {
        return Err(Error::NotMixed);
    }
    let arc_ids = g.directed_edges();
    let arcs: Vec<(usize, usize, Gain)> = arc_ids
        .iter()
        .map(|&id| {
            let (u, v) = g.graph().edge(id);
            (u, v, g.edge_gain(id))
        })
        .collect();
    let arc_graph = GainGraph::new(g.n(), g.group(), &arcs, true)?;
    let plain = SimpleGraph::new(g.n(), (0..g.m()).filter(|id| !arc_ids.contains(id)).map(|id| g.graph().edge(id)))?;
    Ok(MixedAutDecomposition {
        underlying: automorphisms(g.graph(), limits)?,
        arcs: gain_automorphisms(&arc_graph, limits)?,
        undirected: automorphisms(&plain, limits)?,
        mixed: gain_automorphisms(g, limits)?,
    })
}

fn is_automorphism(g: &SimpleGraph, f: &VertexPermutation) -> bool {
    f.len() == g.n() && g.edges().iter().all(|&(u, v)| g.has_edge(f.apply(u), f.apply(v)))
}

/// `g` relabeled by `f ∈ Aut(G)`: `gain'(u, v) = gain(f(u), f(v))`.
pub fn act(f: &VertexPermutation, g: &GainGraph) -> Result<GainGraph> {
    if !is_automorphism(g.graph(), f) {
        return Err(Error::NotAutomorphism);
    }
    let gains = g
        .graph()
        .edges()
        .iter()
        .map(|&(u, v)| g.gain(f.apply(u), f.apply(v)).expect("automorphism keeps adjacency"))
        .collect();
    g.with_edge_gains(gains)
}

/// Checks `b(u, v) = conj θ(u) · a(f(u), f(v)) · θ(v)` on every edge, i.e.
/// `H(b) = (D(θ)P)⁻¹ H(a) (D(θ)P)` for the permutation matrix `P` of `f`.
pub fn is_switching_isomorphism(
    a: &GainGraph,
    b: &GainGraph,
    f: &VertexPermutation,
    theta: &SwitchingFunction,
) -> bool {
    a.graph() == b.graph()
        && is_automorphism(a.graph(), f)
        && theta.len() == b.n()
        && b.graph().edges().iter().all(|&(u, v)| {
            let moved = a.gain(f.apply(u), f.apply(v)).expect("automorphism keeps adjacency");
            b.gain(u, v) == Some(theta.value(u).conj() * moved * theta.value(v))
        })
}

fn witness_for(f: &VertexPermutation, a: &GainGraph, b: &GainGraph) -> Option<(VertexPermutation, SwitchingFunction)> {
    let moved = act(f, a).ok()?;
    let theta = switching_equivalent(&moved, b).ok()?.witness()?.clone();
    Some((f.clone(), theta))
}

/// Searches `Aut(G)` for `f` with `act(f, a)` switching equivalent to `b`.
/// The identity is tried first; the rest of the group is searched in
/// parallel and any witness found is returned.
pub fn switching_isomorphic(
    a: &GainGraph,
    b: &GainGraph,
    limits: &Limits,
) -> Result<Option<(VertexPermutation, SwitchingFunction)>> {
    if a.group() != b.group() {
        return Err(Error::GroupMismatch { left: a.group().order(), right: b.group().order() });
    }
    if a.graph() != b.graph() {
        return Err(Error::InvalidArgument("switching isomorphism needs a common underlying graph".into()));
    }
    let aut = automorphisms(a.graph(), limits)?;
    if let Some(w) = witness_for(&VertexPermutation::identity(a.n()), a, b) {
        return Ok(Some(w));
    }
    let found = aut.elements().par_iter().find_map_any(|f| witness_for(f, a, b));
    debug_assert!(found.as_ref().is_none_or(|(f, t)| is_switching_isomorphism(a, b, f, t)));
    Ok(found)
}

/// One representative per class in the orbit of `[g]` under `Aut(G)`,
/// ordered by basis-gain profile.
pub fn orbit_of_class(g: &GainGraph, limits: &Limits) -> Result<Vec<GainGraph>> {
    let aut = automorphisms(g.graph(), limits)?;
    let basis = fundamental_cycles(g.graph(), &SpanningForest::bfs(g.graph()));
    let mut orbit: BTreeMap<Vec<Gain>, GainGraph> = BTreeMap::new();
    for f in aut.elements() {
        let moved = act(f, g)?;
        orbit.entry(cycle_gain_profile(&moved, &basis)).or_insert(moved);
    }
    Ok(orbit.into_values().collect())
}
