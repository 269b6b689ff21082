//! Class sizes and class counts of 2-connected plane graphs from their
//! inner face cycles.
//!
//! Faces `C_1..C_k` are given clockwise. `E_pq` (`p < q`) is the set of
//! edges shared by faces `p` and `q`, and `E_pp` the edges lying on face `p`
//! alone; `n_pq = |E_pq|`. For a gain vector `y` on the faces, `Γ(y)` is the
//! set of Hermitian `k × k` matrices `X` with
//!
//! 1. `x_pq ∈ {1, i, -i}` when `n_pq = 1`, any of `{±1, ±i}` when `n_pq > 1`,
//!    and `x_pq = 0` when `n_pq = 0`;
//! 2. `∏_q x_pq = y_p` for every row `p` (zero entries skipped);
//! 3. `x_qp = conj(x_pq)`.
//!
//! `x_pq` is the gain of `E_pq` read along face `p`. The class of a mixed
//! plane graph with face gains `y` has `Σ_{X ∈ Γ(y)} ∏_{p ≤ q} α_{x_pq}(n_pq)`
//! members, and the number of classes is the number of `y` with `Γ(y)`
//! nonempty.

use std::collections::BTreeMap;
use std::ops::ControlFlow;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::alpha::{alpha_vector, ClassCountVector};
use super::blocks::is_two_connected;
use crate::error::{Error, Result};
use crate::gain::{Gain, GainGroup};
use crate::gain_graph::GainGraph;
use crate::graph::{EdgeId, SimpleGraph};
use crate::limits::{check_cap, Limits};
use crate::switching::cycle_gain;

/// Inner faces of a 2-connected plane graph and the induced edge partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceStructure {
    graph: SimpleGraph,
    faces: Vec<Vec<usize>>,
    /// `(p, q)` with `p ≤ q` → edges of `E_pq`, each flagged `true` when
    /// face `p` runs along it from the smaller endpoint to the larger.
    cells: BTreeMap<(usize, usize), Vec<(EdgeId, bool)>>,
}

impl FaceStructure {
    pub fn k(&self) -> usize {
        self.faces.len()
    }

    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    /// `n_pq`, symmetric in `p` and `q`.
    pub fn n_pq(&self, p: usize, q: usize) -> usize {
        self.cells.get(&(p.min(q), p.max(q))).map_or(0, Vec::len)
    }

    /// Edge ids of `E_pq`, ascending.
    pub fn cell_edges(&self, p: usize, q: usize) -> Vec<EdgeId> {
        self.cells.get(&(p.min(q), p.max(q))).map_or_else(Vec::new, |c| c.iter().map(|&(e, _)| e).collect())
    }

    /// Nonempty cells `(p, q)`, `p ≤ q`, in lexicographic order.
    pub fn cells(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.cells.iter().map(|(&pq, edges)| (pq, edges.len()))
    }

    /// `ζ(C_p)` read clockwise.
    pub fn face_gain(&self, g: &GainGraph, p: usize) -> Gain {
        cycle_gain(g, &self.faces[p]).expect("faces are cycles of the graph")
    }

    pub fn face_gains(&self, g: &GainGraph) -> Vec<Gain> {
        (0..self.k()).map(|p| self.face_gain(g, p)).collect()
    }

    /// Gain of `E_pq` read along face `p`; 1 for an empty cell.
    pub fn cell_gain(&self, g: &GainGraph, p: usize, q: usize) -> Gain {
        let Some(edges) = self.cells.get(&(p.min(q), p.max(q))) else {
            return g.group().one();
        };
        let along_min = edges
            .iter()
            .map(|&(e, fwd)| if fwd { g.edge_gain(e) } else { g.edge_gain(e).conj() })
            .fold(g.group().one(), |a, b| a * b);
        if p <= q {
            along_min
        } else {
            along_min.conj()
        }
    }

    /// The matrix `[x_pq]` read off a concrete gain graph; it lies in `Γ(y)`
    /// for the graph's own face gains.
    pub fn gamma_of(&self, g: &GainGraph) -> GammaMatrix {
        let k = self.k();
        let mut entries = vec![None; k * k];
        for &(p, q) in self.cells.keys() {
            let x = self.cell_gain(g, p, q);
            entries[q * k + p] = Some(x.conj());
            entries[p * k + q] = Some(x);
        }
        GammaMatrix { k, entries }
    }

    /// Gain of the symmetric difference `C_p Δ C_q`, with every edge read
    /// in the direction of the face it comes from. `None` unless the two
    /// faces share an edge and their symmetric difference is one cycle.
    pub fn symmetric_difference_gain(&self, g: &GainGraph, p: usize, q: usize) -> Option<Gain> {
        if p == q || self.n_pq(p, q) == 0 {
            return None;
        }
        let shared = self.cell_edges(p, q);
        let mut arcs = Vec::new();
        for face in [p, q] {
            let c = &self.faces[face];
            for i in 0..c.len() {
                let (u, v) = (c[i], c[(i + 1) % c.len()]);
                if !shared.contains(&self.graph.edge_id(u, v).unwrap()) {
                    arcs.push((u, v));
                }
            }
        }
        // A single directed cycle: every vertex has one successor and the
        // walk from any arc returns after visiting all of them.
        let mut next = BTreeMap::new();
        for &(u, v) in &arcs {
            if next.insert(u, v).is_some() {
                return None;
            }
        }
        let start = arcs[0].0;
        let mut at = start;
        let mut steps = 0;
        loop {
            at = *next.get(&at)?;
            steps += 1;
            if at == start {
                break;
            }
            if steps > arcs.len() {
                return None;
            }
        }
        if steps != arcs.len() {
            return None;
        }
        Some(arcs.iter().fold(g.group().one(), |acc, &(u, v)| acc * g.gain(u, v).unwrap()))
    }
}

/// Validates the face cycles of `g` and builds the `E_pq` partition.
pub fn parse_face_structure(g: &GainGraph, faces: &[Vec<usize>]) -> Result<FaceStructure> {
    let graph = g.graph();
    let (n, m) = (graph.n(), graph.m());
    if !is_two_connected(graph) {
        return Err(Error::Faces("underlying graph is not 2-connected".into()));
    }
    if faces.len() + n != m + 1 {
        return Err(Error::Faces(format!("expected m - n + 1 = {} inner faces, got {}", m + 1 - n, faces.len())));
    }
    let mut on: Vec<Vec<(usize, bool)>> = vec![Vec::new(); m];
    for (p, face) in faces.iter().enumerate() {
        if face.len() < 3 {
            return Err(Error::Faces(format!("face {} has fewer than 3 vertices", p + 1)));
        }
        let mut seen = vec![false; n];
        for &v in face {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::Faces(format!("face {} repeats vertex {}", p + 1, v + 1)));
            }
        }
        for i in 0..face.len() {
            let (u, v) = (face[i], face[(i + 1) % face.len()]);
            let id = graph
                .edge_id(u, v)
                .ok_or_else(|| Error::Faces(format!("face {}: {} and {} are not adjacent", p + 1, u + 1, v + 1)))?;
            on[id].push((p, u < v));
        }
    }
    let mut cells: BTreeMap<(usize, usize), Vec<(EdgeId, bool)>> = BTreeMap::new();
    for (id, list) in on.iter().enumerate() {
        let (u, v) = graph.edge(id);
        match list.as_slice() {
            [] => return Err(Error::Faces(format!("edge ({}, {}) lies on no face", u + 1, v + 1))),
            &[(p, fwd)] => cells.entry((p, p)).or_default().push((id, fwd)),
            &[(p, fwd), (q, fwd_q)] => {
                if fwd == fwd_q {
                    return Err(Error::Faces(format!(
                        "faces {} and {} traverse edge ({}, {}) in the same direction",
                        p + 1,
                        q + 1,
                        u + 1,
                        v + 1
                    )));
                }
                cells.entry((p, q)).or_default().push((id, fwd));
            }
            _ => {
                return Err(Error::Faces(format!("edge ({}, {}) lies on more than two faces", u + 1, v + 1)));
            }
        }
    }
    let fs = FaceStructure { graph: graph.clone(), faces: faces.to_vec(), cells };
    let k = fs.k();
    for p in 0..k {
        for q in p + 1..k {
            if let Some(z) = fs.symmetric_difference_gain(g, p, q) {
                if z != fs.face_gain(g, p) * fs.face_gain(g, q) {
                    return Err(Error::Faces(format!(
                        "gain of the symmetric difference of faces {} and {} is not the product of their gains",
                        p + 1,
                        q + 1
                    )));
                }
            }
        }
    }
    Ok(fs)
}

/// A member of `Γ(y)`; `None` marks a structural zero (`n_pq = 0`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaMatrix {
    k: usize,
    entries: Vec<Option<Gain>>,
}

impl GammaMatrix {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn get(&self, p: usize, q: usize) -> Option<Gain> {
        self.entries[p * self.k + q]
    }

    pub fn row_product(&self, p: usize) -> Gain {
        (0..self.k).filter_map(|q| self.get(p, q)).fold(GainGroup::MIXED.one(), |a, b| a * b)
    }

    /// Builds a matrix from rows; `None` for zero entries.
    pub fn from_rows(rows: &[Vec<Option<Gain>>]) -> Self {
        let k = rows.len();
        assert!(rows.iter().all(|r| r.len() == k), "square matrix");
        Self { k, entries: rows.concat() }
    }
}

impl Serialize for GammaMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = (0..self.k)
            .map(|p| (0..self.k).map(|q| self.get(p, q).map_or_else(|| "0".into(), |x| x.to_string())).collect())
            .collect();
        rows.serialize(s)
    }
}

const ANY: [u32; 4] = [0, 1, 2, 3];
const NO_MINUS_ONE: [u32; 3] = [0, 1, 3];

/// Backtracks over the free entries `x_pq`, `p ≤ q`, checking each row
/// product as soon as its last entry is fixed.
fn search_gamma<F: FnMut(&GammaMatrix) -> ControlFlow<()>>(
    fs: &FaceStructure,
    y: &[Gain],
    visit: &mut F,
) -> Result<()> {
    let k = fs.k();
    if y.len() != k {
        return Err(Error::InvalidArgument(format!("expected {k} face gains, got {}", y.len())));
    }
    if let Some(x) = y.iter().find(|x| x.group() != GainGroup::MIXED) {
        return Err(Error::MixedModeOrder(x.group().order()));
    }
    let cells: Vec<((usize, usize), usize)> = fs.cells().collect();
    let mut last = vec![None; k];
    for (i, &((p, q), _)) in cells.iter().enumerate() {
        last[p] = Some(i);
        last[q] = Some(i);
    }
    if (0..k).any(|p| last[p].is_none() && !y[p].is_one()) {
        return Ok(());
    }
    let mut closes: Vec<Vec<usize>> = vec![Vec::new(); cells.len()];
    for (p, &at) in last.iter().enumerate() {
        if let Some(i) = at {
            closes[i].push(p);
        }
    }
    let mut x = GammaMatrix { k, entries: vec![None; k * k] };
    let mut rows = vec![GainGroup::MIXED.one(); k];

    struct Ctx<'a, F> {
        cells: &'a [((usize, usize), usize)],
        closes: &'a [Vec<usize>],
        y: &'a [Gain],
        visit: &'a mut F,
    }

    fn go<F: FnMut(&GammaMatrix) -> ControlFlow<()>>(
        ctx: &mut Ctx<'_, F>,
        i: usize,
        x: &mut GammaMatrix,
        rows: &mut [Gain],
    ) -> ControlFlow<()> {
        if i == ctx.cells.len() {
            return (ctx.visit)(x);
        }
        let ((p, q), size) = ctx.cells[i];
        let k = x.k;
        let choices: &[u32] = if size == 1 { &NO_MINUS_ONE } else { &ANY };
        for &e in choices {
            let v = GainGroup::MIXED.element(e as i64);
            let saved = (rows[p], rows[q]);
            rows[p] = rows[p] * v;
            if q != p {
                rows[q] = rows[q] * v.conj();
            }
            if ctx.closes[i].iter().all(|&r| rows[r] == ctx.y[r]) {
                x.entries[q * k + p] = Some(v.conj());
                x.entries[p * k + q] = Some(v);
                go(ctx, i + 1, x, rows)?;
            }
            rows[p] = saved.0;
            rows[q] = saved.1;
        }
        x.entries[p * k + q] = None;
        x.entries[q * k + p] = None;
        ControlFlow::Continue(())
    }

    let mut ctx = Ctx { cells: &cells, closes: &closes, y, visit };
    let _ = go(&mut ctx, 0, &mut x, &mut rows);
    Ok(())
}

/// All of `Γ(y)`.
pub fn enumerate_gamma(fs: &FaceStructure, y: &[Gain]) -> Result<Vec<GammaMatrix>> {
    let mut out = Vec::new();
    search_gamma(fs, y, &mut |x: &GammaMatrix| {
        out.push(x.clone());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

pub fn gamma_is_nonempty(fs: &FaceStructure, y: &[Gain]) -> Result<bool> {
    let mut found = false;
    search_gamma(fs, y, &mut |_: &GammaMatrix| {
        found = true;
        ControlFlow::Break(())
    })?;
    Ok(found)
}

fn check_graph(fs: &FaceStructure, g: &SimpleGraph) -> Result<()> {
    if fs.graph() != g {
        return Err(Error::Faces("face structure was built for a different graph".into()));
    }
    Ok(())
}

/// Size of the switching class of the mixed plane graph `g`.
pub fn plane_class_size(g: &GainGraph, fs: &FaceStructure) -> Result<BigUint> {
    if !g.is_mixed() {
        return Err(Error::NotMixed);
    }
    check_graph(fs, g.graph())?;
    let y = fs.face_gains(g);
    let alphas: BTreeMap<usize, ClassCountVector> = fs.cells().map(|(_, size)| (size, alpha_vector(size))).collect();
    let mut total = BigUint::zero();
    search_gamma(fs, &y, &mut |x: &GammaMatrix| {
        let mut term = BigUint::one();
        for ((p, q), size) in fs.cells() {
            let xpq = x.get(p, q).expect("nonempty cell has an entry");
            term *= alphas[&size].get(xpq).expect("mixed gain");
        }
        total += term;
        ControlFlow::Continue(())
    })?;
    Ok(total)
}

/// Number of switching classes of mixed graphs on `g`: the number of face
/// gain vectors `y ∈ {±1, ±i}^k` with `Γ(y)` nonempty.
pub fn plane_class_count(g: &SimpleGraph, fs: &FaceStructure, limits: &Limits) -> Result<u64> {
    check_graph(fs, g)?;
    let k = fs.k();
    check_cap("face count", k, limits.max_faces)?;
    let mut count = 0;
    let mut y = vec![GainGroup::MIXED.one(); k];
    for idx in 0..4u64.pow(k as u32) {
        let mut rest = idx;
        for slot in y.iter_mut() {
            *slot = GainGroup::MIXED.element((rest % 4) as i64);
            rest /= 4;
        }
        if gamma_is_nonempty(fs, &y)? {
            count += 1;
        }
    }
    Ok(count)
}
