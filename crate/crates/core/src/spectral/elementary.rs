//! Elementary subgraphs and the characteristic polynomial they determine.
//!
//! An elementary subgraph has only single edges and cycles as components.
//! The coefficient of `x^(n-k)` in `det(xI - H)` is the sum, over elementary
//! subgraphs `E` on `k` vertices, of
//! `(-1)^(components of E) · 2^(cycles of E) · ∏ Re(gain of each cycle)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gain_graph::GainGraph;
use crate::graph::SimpleGraph;
use crate::limits::{check_cap, Limits};
use crate::scalar::Scalar;
use crate::switching::cycle_gain;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub enum Component {
    Edge(usize, usize),
    /// Cycle written from its smallest vertex, second vertex < last vertex.
    Cycle(Vec<usize>),
}

impl Component {
    pub fn order(&self) -> usize {
        match self {
            Component::Edge(..) => 2,
            Component::Cycle(c) => c.len(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ElementarySubgraph {
    components: Vec<Component>,
}

impl ElementarySubgraph {
    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn order(&self) -> usize {
        self.components.iter().map(Component::order).sum()
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().count()
    }

    pub fn cycles(&self) -> impl Iterator<Item = &[usize]> {
        self.components.iter().filter_map(|c| match c {
            Component::Cycle(v) => Some(v.as_slice()),
            Component::Edge(..) => None,
        })
    }
}

struct Walker<'a, F> {
    g: &'a SimpleGraph,
    covered: Vec<bool>,
    stack: Vec<Component>,
    order: usize,
    max_order: usize,
    emit: F,
}

impl<F: FnMut(&[Component], usize)> Walker<'_, F> {
    /// Decides the fate of the smallest undecided vertex `>= v`: leave it
    /// uncovered, match it to a larger neighbor, or close a cycle through it
    /// in which it is the smallest vertex.
    fn descend(&mut self, mut v: usize) {
        let n = self.g.n();
        while v < n && self.covered[v] {
            v += 1;
        }
        if v == n {
            (self.emit)(&self.stack, self.order);
            return;
        }
        self.descend(v + 1);
        if self.order + 2 > self.max_order {
            return;
        }
        self.covered[v] = true;
        for &(w, _) in self.g.neighbors(v) {
            if w < v || self.covered[w] {
                continue;
            }
            self.covered[w] = true;
            self.stack.push(Component::Edge(v, w));
            self.order += 2;
            self.descend(v + 1);
            self.order -= 2;
            self.stack.pop();
            self.covered[w] = false;
        }
        if self.order + 3 <= self.max_order {
            let mut path = vec![v];
            self.grow_cycle(v, &mut path);
        }
        self.covered[v] = false;
    }

    fn grow_cycle(&mut self, start: usize, path: &mut Vec<usize>) {
        let last = *path.last().unwrap();
        for &(w, _) in self.g.neighbors(last) {
            if w == start {
                if path.len() >= 3 && path[1] < last {
                    let len = path.len();
                    self.stack.push(Component::Cycle(path.clone()));
                    self.order += len;
                    self.descend(start + 1);
                    self.order -= len;
                    self.stack.pop();
                }
                continue;
            }
            if w < start || self.covered[w] || self.order + path.len() + 1 > self.max_order {
                continue;
            }
            self.covered[w] = true;
            path.push(w);
            self.grow_cycle(start, path);
            path.pop();
            self.covered[w] = false;
        }
    }
}

/// Calls `emit(components, order)` once for every elementary subgraph with
/// at most `max_order` vertices, including the empty one.
pub(crate) fn visit_elementary<F: FnMut(&[Component], usize)>(g: &SimpleGraph, max_order: usize, emit: F) {
    let mut walker = Walker { g, covered: vec![false; g.n()], stack: Vec::new(), order: 0, max_order, emit };
    walker.descend(0);
}

/// All elementary subgraphs covering exactly `k` vertices.
pub fn enumerate_elementary(g: &SimpleGraph, k: usize, limits: &Limits) -> Result<Vec<ElementarySubgraph>> {
    check_cap("vertex count", g.n(), limits.max_elementary_vertices)?;
    let mut out = Vec::new();
    visit_elementary(g, k, |comps, order| {
        if order == k {
            out.push(ElementarySubgraph { components: comps.to_vec() });
        }
    });
    Ok(out)
}

/// Real part of the gain of a cycle.
pub fn real_cycle_gain<T: Scalar>(g: &GainGraph, cycle: &[usize]) -> Result<T> {
    Ok(cycle_gain(g, cycle)?.real_part())
}

/// Monic characteristic polynomial `x^n + a_1 x^(n-1) + ... + a_n`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CharPoly<T> {
    /// `coeffs[k] = a_k`, with `coeffs[0] = 1`.
    coeffs: Vec<T>,
}

impl<T: Scalar> CharPoly<T> {
    pub fn from_coefficients(coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty() && coeffs[0] == T::one(), "polynomial must be monic");
        Self { coeffs }
    }

    /// `∏ (x - r)` over the given roots.
    pub fn from_roots(roots: &[T]) -> Self {
        let mut coeffs = vec![T::one()];
        for &r in roots {
            let mut next = coeffs.clone();
            next.push(T::zero());
            for (k, &c) in coeffs.iter().enumerate() {
                next[k + 1] -= r * c;
            }
            coeffs = next;
        }
        Self { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficients(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coefficient(&self, k: usize) -> T {
        self.coeffs[k]
    }

    pub fn eval(&self, x: T) -> T {
        self.coeffs.iter().fold(T::zero(), |acc, &c| acc * x + c)
    }

    /// `Σ_{k≥1} |a_k|`.
    pub fn l1_norm(&self) -> T {
        self.coeffs[1..].iter().map(|c| c.abs()).sum()
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        assert_eq!(self.degree(), other.degree());
        self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| (*a - *b).abs()).fold(T::zero(), T::max)
    }
}

/// Characteristic polynomial of `H(g)` by elementary-subgraph expansion.
///
/// For groups of order 1, 2 or 4 every coefficient is an integer; a
/// coefficient drifting more than `1e-6` from one is reported as a
/// numeric error.
pub fn char_poly_elementary<T: Scalar>(g: &GainGraph, limits: &Limits) -> Result<CharPoly<T>> {
    check_cap("vertex count", g.n(), limits.max_elementary_vertices)?;
    let n = g.n();
    let mut coeffs = vec![T::zero(); n + 1];
    let mut failure = None;
    visit_elementary(g.graph(), n, |comps, order| {
        let mut term = if comps.len() % 2 == 0 { T::one() } else { -T::one() };
        for c in comps {
            if let Component::Cycle(cycle) = c {
                match real_cycle_gain::<T>(g, cycle) {
                    Ok(re) => term *= T::lit(2.0) * re,
                    Err(e) => failure = Some(e),
                }
            }
        }
        coeffs[order] += term;
    });
    if let Some(e) = failure {
        return Err(e);
    }
    if matches!(g.group().order(), 1 | 2 | 4) {
        for (k, c) in coeffs.iter_mut().enumerate() {
            let rounded = c.round();
            if (*c - rounded).abs() >= T::lit(1e-6) {
                return Err(Error::Numeric(format!("coefficient a_{k} = {c} is not integral")));
            }
            *c = rounded;
        }
    }
    Ok(CharPoly { coeffs })
}

/// `det H(g) = (-1)^n a_n`.
pub fn determinant<T: Scalar>(g: &GainGraph, limits: &Limits) -> Result<T> {
    let poly = char_poly_elementary::<T>(g, limits)?;
    let an = poly.coefficient(g.n());
    Ok(if g.n().is_multiple_of(2) { an } else { -an })
}
