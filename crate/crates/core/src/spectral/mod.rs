//! Spectra and characteristic polynomials of Hermitian adjacency matrices.

mod elementary;
mod jacobi;

pub use elementary::{
    char_poly_elementary, determinant, enumerate_elementary, real_cycle_gain, CharPoly, Component, ElementarySubgraph,
};
pub use jacobi::{symmetric_eigenvalues, MAX_SWEEPS};

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gain_graph::GainGraph;
use crate::graph::SimpleGraph;
use crate::limits::{check_cap, Limits};
use crate::scalar::Scalar;
use crate::switching::simple_cycles;

/// Eigenvalues of `H(g)` in ascending order, with the solver tolerance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum<T> {
    pub eigenvalues: Vec<T>,
    pub tol: T,
}

impl<T: Scalar> Spectrum<T> {
    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    /// Largest `|λ_j + λ_{n+1-j}|`; zero for a spectrum symmetric about 0.
    pub fn symmetry_defect(&self) -> T {
        let n = self.eigenvalues.len();
        (0..n).map(|j| (self.eigenvalues[j] + self.eigenvalues[n - 1 - j]).abs()).fold(T::zero(), T::max)
    }

    pub fn agrees_with(&self, other: &Self, tol: T) -> bool {
        self.len() == other.len()
            && self.eigenvalues.iter().zip(&other.eigenvalues).all(|(a, b)| (*a - *b).abs() <= tol)
    }
}

/// Eigenvalues of `H(g)`.
///
/// `H` is embedded as the real symmetric matrix `[[Re, -Im], [Im, Re]]` of
/// order `2n` and diagonalized by cyclic Jacobi rotations. Every eigenvalue
/// of `H` appears twice in the embedding; the sorted list is paired off
/// after checking each pair agrees to `max(1e-8, 1000·ε)·max(1, ‖H‖)`.
pub fn spectrum<T: Scalar>(g: &GainGraph, tol: T) -> Result<Spectrum<T>> {
    let h = g.hermitian_matrix::<T>();
    let n = h.n();
    let mut embedded = h.real_embedding();
    let doubled = symmetric_eigenvalues(&mut embedded, 2 * n, tol)?;
    let pair_tol = T::lit(1e-8).max(T::lit(1e3) * T::epsilon()) * T::one().max(h.frobenius_norm());
    let mut eigenvalues = Vec::with_capacity(n);
    for pair in doubled.chunks(2) {
        if (pair[1] - pair[0]).abs() > pair_tol {
            return Err(Error::Numeric(format!("embedded spectrum does not pair up: {} vs {}", pair[0], pair[1])));
        }
        eigenvalues.push((pair[0] + pair[1]) / T::lit(2.0));
    }
    Ok(Spectrum { eigenvalues, tol })
}

/// Sorted spectra agree elementwise within `tol`; different orders are
/// never cospectral.
pub fn cospectral<T: Scalar>(a: &GainGraph, b: &GainGraph, tol: T) -> Result<bool> {
    if a.n() != b.n() {
        return Ok(false);
    }
    Ok(spectrum(a, tol)?.agrees_with(&spectrum(b, tol)?, tol))
}

/// A mixed graph is balanced exactly when it is cospectral with its
/// underlying undirected graph.
pub fn is_balanced_spectrally<T: Scalar>(g: &GainGraph, tol: T) -> Result<bool> {
    if !g.is_mixed() {
        return Err(Error::NotMixed);
    }
    cospectral(g, &g.underlying(), tol)
}

/// For each cycle length, the sum of `Re(gain)` over all cycles of that length.
pub fn cycle_real_gain_sums<T: Scalar>(g: &GainGraph, limits: &Limits) -> Result<BTreeMap<usize, T>> {
    check_cap("vertex count", g.n(), limits.max_cycle_vertices)?;
    let mut sums = BTreeMap::new();
    for c in simple_cycles(g.graph()) {
        let re: T = real_cycle_gain(g, &c)?;
        *sums.entry(c.len()).or_insert_with(T::zero) += re;
    }
    Ok(sums)
}

/// Cartesian product. Vertex `(x, y)` becomes `x·|V(b)| + y`; each edge
/// copies its gain from the factor in which it moves, so `H` of the result
/// is `I ⊗ H(b) + H(a) ⊗ I`.
pub fn cartesian_product(a: &GainGraph, b: &GainGraph) -> Result<GainGraph> {
    if a.group() != b.group() {
        return Err(Error::GroupMismatch { left: a.group().order(), right: b.group().order() });
    }
    let q = b.n();
    let mut triples = Vec::with_capacity(a.n() * b.m() + a.m() * q);
    for x in 0..a.n() {
        for (id, &(u, v)) in b.graph().edges().iter().enumerate() {
            triples.push((x * q + u, x * q + v, b.edge_gain(id)));
        }
    }
    for (id, &(u, v)) in a.graph().edges().iter().enumerate() {
        for y in 0..q {
            triples.push((u * q + y, v * q + y, a.edge_gain(id)));
        }
    }
    GainGraph::new(a.n() * q, a.group(), &triples, a.is_mixed() && b.is_mixed())
}

/// The underlying graph of a Cartesian product, without gains.
pub fn cartesian_product_graph(a: &SimpleGraph, b: &SimpleGraph) -> SimpleGraph {
    cartesian_product(&GainGraph::undirected(a.clone()), &GainGraph::undirected(b.clone()))
        .expect("same group")
        .graph()
        .clone()
}
