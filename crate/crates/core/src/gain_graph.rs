//! Gain graphs, switching functions and Hermitian adjacency matrices.

use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::gain::{Gain, GainGroup};
use crate::graph::{EdgeId, SimpleGraph};
use crate::scalar::Scalar;

/// A simple graph with a gain on every oriented edge.
///
/// Only the gain of the canonical orientation `(u, v)`, `u < v`, is stored;
/// the reverse orientation always reads back as its conjugate. In mixed mode
/// the group has order 4 and every edge gain lies in `{1, i, -i}`: an
/// undirected edge has gain 1 and an arc `u -> v` has `gain(u, v) = i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GainGraph {
    graph: SimpleGraph,
    group: GainGroup,
    gains: Vec<Gain>,
    mixed: bool,
}

impl GainGraph {
    /// Builds a gain graph from `(u, v, gain(u, v))` triples.
    pub fn new(n: usize, group: GainGroup, directed_gains: &[(usize, usize, Gain)], mixed: bool) -> Result<Self> {
        let graph = SimpleGraph::new(n, directed_gains.iter().map(|&(u, v, _)| (u, v)))?;
        let mut gains = vec![group.one(); graph.m()];
        for &(u, v, t) in directed_gains {
            if t.group() != group {
                return Err(Error::GroupMismatch { left: group.order(), right: t.group().order() });
            }
            let id = graph.edge_id(u, v).expect("edge was just inserted");
            gains[id] = if u < v { t } else { t.conj() };
        }
        Self::from_edge_gains(graph, group, gains, mixed)
    }

    /// Convenience constructor from raw exponents `(u, v, t)`.
    pub fn from_exponents(n: usize, order: u32, edges: &[(usize, usize, i64)], mixed: bool) -> Result<Self> {
        let group = GainGroup::new(order)?;
        let triples =
            edges.iter().map(|&(u, v, t)| Ok((u, v, group.checked_element(t)?))).collect::<Result<Vec<_>>>()?;
        Self::new(n, group, &triples, mixed)
    }

    /// Gains indexed by edge id, each for the canonical orientation.
    pub fn from_edge_gains(graph: SimpleGraph, group: GainGroup, gains: Vec<Gain>, mixed: bool) -> Result<Self> {
        assert_eq!(gains.len(), graph.m(), "one gain per edge");
        if let Some(g) = gains.iter().find(|g| g.group() != group) {
            return Err(Error::GroupMismatch { left: group.order(), right: g.group().order() });
        }
        if mixed {
            if group.order() != 4 {
                return Err(Error::MixedModeOrder(group.order()));
            }
            for (id, g) in gains.iter().enumerate() {
                if g.exp() == 2 {
                    let (u, v) = graph.edge(id);
                    return Err(Error::NotMixedGain { u, v, gain: g.to_string() });
                }
            }
        }
        Ok(Self { graph, group, gains, mixed })
    }

    /// Every edge carries gain 1.
    pub fn trivial(graph: SimpleGraph, group: GainGroup, mixed: bool) -> Result<Self> {
        let gains = vec![group.one(); graph.m()];
        Self::from_edge_gains(graph, group, gains, mixed)
    }

    /// The undirected mixed graph on `graph`.
    pub fn undirected(graph: SimpleGraph) -> Self {
        Self::trivial(graph, GainGroup::MIXED, true).expect("all-one gains are mixed")
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn group(&self) -> GainGroup {
        self.group
    }

    pub fn is_mixed(&self) -> bool {
        self.mixed
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn m(&self) -> usize {
        self.graph.m()
    }

    /// Gain of the canonical orientation of edge `id`.
    pub fn edge_gain(&self, id: EdgeId) -> Gain {
        self.gains[id]
    }

    pub fn edge_gains(&self) -> &[Gain] {
        &self.gains
    }

    /// `gain(u, v)`, or `None` when `u` and `v` are not adjacent.
    pub fn gain(&self, u: usize, v: usize) -> Option<Gain> {
        let id = self.graph.edge_id(u, v)?;
        Some(if u < v { self.gains[id] } else { self.gains[id].conj() })
    }

    /// Same graph and group with new canonical-orientation gains.
    pub fn with_edge_gains(&self, gains: Vec<Gain>) -> Result<Self> {
        Self::from_edge_gains(self.graph.clone(), self.group, gains, self.mixed)
    }

    /// All gains replaced by 1.
    pub fn underlying(&self) -> Self {
        Self {
            graph: self.graph.clone(),
            group: self.group,
            gains: vec![self.group.one(); self.m()],
            mixed: self.mixed,
        }
    }

    /// Edge ids whose gain is not 1 (the arcs of a mixed graph).
    pub fn directed_edges(&self) -> Vec<EdgeId> {
        (0..self.m()).filter(|&id| !self.gains[id].is_one()).collect()
    }

    /// Whether every gain lies in `{1, i, -i}` of the order-4 group.
    pub fn gains_are_mixed(&self) -> bool {
        self.group.order() == 4 && self.gains.iter().all(|g| g.exp() != 2)
    }

    /// Applies a switching: `gain'(u, v) = conj(θ(u)) · gain(u, v) · θ(v)`.
    ///
    /// The result keeps mixed mode only if its gains still lie in `{1, i, -i}`.
    pub fn switch(&self, theta: &SwitchingFunction) -> Result<Self> {
        if theta.len() != self.n() {
            return Err(Error::VertexOutOfRange { vertex: theta.len(), n: self.n() });
        }
        if theta.group() != Some(self.group) && self.n() > 0 {
            let right = theta.group().map_or(0, |g| g.order());
            return Err(Error::GroupMismatch { left: self.group.order(), right });
        }
        let gains: Vec<Gain> = self
            .graph
            .edges()
            .iter()
            .zip(&self.gains)
            .map(|(&(u, v), &g)| theta.value(u).conj() * g * theta.value(v))
            .collect();
        let mut out = Self { graph: self.graph.clone(), group: self.group, gains, mixed: false };
        out.mixed = self.mixed && out.gains_are_mixed();
        Ok(out)
    }

    /// Every gain multiplied by `-1`; needs an even group order.
    pub fn negate(&self) -> Result<Self> {
        let minus = self.group.minus_one().ok_or(Error::OddOrderNegation(self.group.order()))?;
        let gains = self.gains.iter().map(|&g| g * minus).collect();
        let mut out = Self { graph: self.graph.clone(), group: self.group, gains, mixed: false };
        out.mixed = self.mixed && out.gains_are_mixed();
        Ok(out)
    }

    /// Hermitian adjacency matrix `H` with `H[u][v] = gain(u, v)` on edges.
    pub fn hermitian_matrix<T: Scalar>(&self) -> HermitianMatrix<T> {
        let n = self.n();
        let mut entries = vec![Complex::zero(); n * n];
        for (&(u, v), g) in self.graph.edges().iter().zip(&self.gains) {
            let z = g.to_complex::<T>();
            entries[u * n + v] = z;
            entries[v * n + u] = z.conj();
        }
        HermitianMatrix { n, entries }
    }
}

/// Free-function form of [`GainGraph::new`].
pub fn build_gain_graph(
    n: usize,
    group: GainGroup,
    directed_gains: &[(usize, usize, Gain)],
    mixed: bool,
) -> Result<GainGraph> {
    GainGraph::new(n, group, directed_gains, mixed)
}

pub fn hermitian_matrix<T: Scalar>(g: &GainGraph) -> HermitianMatrix<T> {
    g.hermitian_matrix()
}

/// A vertex-to-gain map; the diagonal of the switching matrix `D(θ)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SwitchingFunction {
    theta: Vec<Gain>,
}

impl SwitchingFunction {
    pub fn new(theta: Vec<Gain>) -> Result<Self> {
        if let Some(first) = theta.first() {
            if let Some(g) = theta.iter().find(|g| g.group() != first.group()) {
                return Err(Error::GroupMismatch { left: first.group().order(), right: g.group().order() });
            }
        }
        Ok(Self { theta })
    }

    pub fn identity(n: usize, group: GainGroup) -> Self {
        Self { theta: vec![group.one(); n] }
    }

    pub fn len(&self) -> usize {
        self.theta.len()
    }

    pub fn is_empty(&self) -> bool {
        self.theta.is_empty()
    }

    pub fn group(&self) -> Option<GainGroup> {
        self.theta.first().map(|g| g.group())
    }

    pub fn value(&self, v: usize) -> Gain {
        self.theta[v]
    }

    pub fn values(&self) -> &[Gain] {
        &self.theta
    }

    /// Pointwise product `θ·π`; switching by it equals switching by `θ` then `π`.
    pub fn compose(&self, other: &SwitchingFunction) -> Self {
        Self { theta: self.theta.iter().zip(&other.theta).map(|(&a, &b)| a * b).collect() }
    }

    pub fn conj(&self) -> Self {
        Self { theta: self.theta.iter().map(|g| g.conj()).collect() }
    }

    /// Checks `D(θ)⁻¹ H(a) D(θ) = H(b)` entrywise in exponent arithmetic.
    pub fn witnesses(&self, a: &GainGraph, b: &GainGraph) -> bool {
        if a.graph() != b.graph() || a.group() != b.group() || self.len() != a.n() {
            return false;
        }
        a.graph()
            .edges()
            .iter()
            .enumerate()
            .all(|(id, &(u, v))| self.theta[u].conj() * a.edge_gain(id) * self.theta[v] == b.edge_gain(id))
    }
}

/// Dense Hermitian matrix with zero diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix<T> {
    n: usize,
    entries: Vec<Complex<T>>,
}

impl<T: Scalar> HermitianMatrix<T> {
    /// Row-major entries; panics if the input is not square Hermitian.
    pub fn from_entries(n: usize, entries: Vec<Complex<T>>) -> Self {
        assert_eq!(entries.len(), n * n);
        let m = Self { n, entries };
        assert!(m.is_hermitian(), "matrix is not Hermitian");
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> Complex<T> {
        self.entries[u * self.n + v]
    }

    pub fn entries(&self) -> &[Complex<T>] {
        &self.entries
    }

    /// Bit-exact check of `M = M*`.
    pub fn is_hermitian(&self) -> bool {
        (0..self.n).all(|u| {
            (0..self.n).all(|v| {
                let a = self.get(u, v);
                let b = self.get(v, u).conj();
                a.re == b.re && a.im == b.im
            })
        })
    }

    pub fn frobenius_norm(&self) -> T {
        self.entries.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt()
    }

    /// The real symmetric matrix `[[Re, -Im], [Im, Re]]` of order `2n`,
    /// row-major. Its spectrum is that of `self` with every multiplicity doubled.
    pub fn real_embedding(&self) -> Vec<T> {
        let n = self.n;
        let size = 2 * n;
        let mut out = vec![T::zero(); size * size];
        for u in 0..n {
            for v in 0..n {
                let z = self.get(u, v);
                out[u * size + v] = z.re;
                out[u * size + n + v] = -z.im;
                out[(n + u) * size + v] = z.im;
                out[(n + u) * size + n + v] = z.re;
            }
        }
        out
    }

    /// Kronecker sum `I_p ⊗ B + A ⊗ I_q` for `self = A` (order p), `other = B` (order q).
    pub fn kronecker_sum(&self, other: &Self) -> Self {
        let (p, q) = (self.n, other.n);
        let size = p * q;
        let mut entries = vec![Complex::zero(); size * size];
        for a in 0..p {
            for b in 0..q {
                let row = a * q + b;
                for d in 0..q {
                    entries[row * size + a * q + d] += other.get(b, d);
                }
                for c in 0..p {
                    entries[row * size + c * q + b] += self.get(a, c);
                }
            }
        }
        Self { n: size, entries }
    }
}
