//! Generators and fixtures shared by the integration tests.
#![allow(dead_code)]

use gainswitch::{GainGraph, SimpleGraph};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

/// Connected graph on `n` vertices with `m` edges: a random tree plus chords.
pub fn connected_graph(rng: &mut StdRng, n: usize, m: usize) -> SimpleGraph {
    assert!(m + 1 >= n && m <= n * (n - 1) / 2);
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    let mut rest: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| !edges.contains(&(u, v))).collect();
    rest.shuffle(rng);
    edges.extend(rest.into_iter().take(m + 1 - n));
    SimpleGraph::new(n, edges).unwrap()
}

/// Any simple graph on `n` vertices, each pair present with probability `p`.
pub fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> SimpleGraph {
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(p)).collect();
    SimpleGraph::new(n, edges).unwrap()
}

/// Bipartite graph with a random side assignment.
pub fn bipartite_graph(rng: &mut StdRng, n: usize, p: f64) -> SimpleGraph {
    let side: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| side[u] != side[v])
        .filter(|_| rng.gen_bool(p))
        .collect();
    SimpleGraph::new(n, edges).unwrap()
}

/// Cactus grown from one vertex by hanging bridges and cycles of length
/// 3 to 5 off existing vertices, stopping before `max_m` edges.
pub fn cactus(rng: &mut StdRng, max_m: usize) -> SimpleGraph {
    let mut n = 1;
    let mut edges = Vec::new();
    loop {
        let at = rng.gen_range(0..n);
        let len = if rng.gen_bool(0.3) { 1 } else { rng.gen_range(3..=5) };
        if edges.len() + len > max_m {
            break;
        }
        if len == 1 {
            edges.push((at, n));
            n += 1;
        } else {
            let ring: Vec<usize> = std::iter::once(at).chain(n..n + len - 1).collect();
            for i in 0..len {
                edges.push((ring[i], ring[(i + 1) % len]));
            }
            n += len - 1;
        }
    }
    SimpleGraph::new(n, edges).unwrap()
}

/// Random gains in `Z_k`, or in `{1, i, -i}` when `mixed`.
pub fn with_random_gains(rng: &mut StdRng, g: &SimpleGraph, k: u32, mixed: bool) -> GainGraph {
    let edges: Vec<(usize, usize, i64)> = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let e = if mixed { [0, 1, 3][rng.gen_range(0..3)] } else { rng.gen_range(0..k as i64) };
            (u, v, e)
        })
        .collect();
    GainGraph::from_exponents(g.n(), k, &edges, mixed).unwrap()
}

pub fn arc_triangle() -> GainGraph {
    GainGraph::from_exponents(3, 4, &[(0, 1, 1), (1, 2, 0), (2, 0, 0)], true).unwrap()
}

/// Two triangles sharing vertex 1; the first has gain -1.
pub fn bowtie_negative() -> GainGraph {
    GainGraph::from_exponents(5, 4, &[(0, 1, 1), (1, 2, 1), (0, 2, 0), (1, 3, 1), (4, 3, 1), (1, 4, 0)], true).unwrap()
}

/// Same underlying graph; the first triangle has gain i.
pub fn bowtie_imaginary() -> GainGraph {
    GainGraph::from_exponents(5, 4, &[(0, 1, 1), (1, 2, 0), (0, 2, 0), (1, 3, 1), (4, 3, 0), (1, 4, 0)], true).unwrap()
}

fn ring(vs: &[usize]) -> Vec<(usize, usize)> {
    (0..vs.len()).map(|i| (vs[i], vs[(i + 1) % vs.len()])).collect()
}

fn plane(n: usize, faces: Vec<Vec<usize>>) -> (SimpleGraph, Vec<Vec<usize>>) {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for f in &faces {
        for (u, v) in ring(f) {
            if !edges.iter().any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u)) {
                edges.push((u, v));
            }
        }
    }
    (SimpleGraph::new(n, edges).unwrap(), faces)
}

/// Two-connected plane graphs with their inner faces, all oriented the
/// same way. The graph is the union of the face boundaries.
pub fn plane_graphs() -> Vec<(&'static str, SimpleGraph, Vec<Vec<usize>>)> {
    let grid3: Vec<Vec<usize>> = (0..2)
        .flat_map(|r| (0..2).map(move |c| vec![r * 3 + c, r * 3 + c + 1, r * 3 + c + 4, r * 3 + c + 3]))
        .collect();
    let wheel: Vec<Vec<usize>> = (1..=5).map(|i| vec![0, i, i % 5 + 1]).collect();
    let list = vec![
        ("diamond", plane(4, vec![vec![0, 1, 2], vec![1, 3, 2]])),
        ("pentagon with chord", plane(5, vec![vec![0, 1, 2], vec![0, 2, 3, 4]])),
        ("faces sharing a path", plane(7, vec![vec![0, 1, 2, 3, 4], vec![2, 1, 0, 5, 6]])),
        ("K4", plane(4, vec![vec![0, 1, 3], vec![1, 2, 3], vec![2, 0, 3]])),
        ("wheel W5", plane(6, wheel)),
        ("prism", plane(6, vec![vec![3, 4, 5], vec![0, 1, 4, 3], vec![1, 2, 5, 4], vec![2, 0, 3, 5]])),
        ("2x3 grid", plane(6, vec![vec![0, 1, 4, 3], vec![1, 2, 5, 4]])),
        ("3x3 grid", plane(9, grid3)),
        ("theta", plane(6, vec![vec![0, 2, 1, 4, 3], vec![0, 3, 4, 1, 5]])),
        ("hexagon fan", plane(6, vec![vec![0, 1, 2], vec![0, 2, 3, 4], vec![0, 4, 5]])),
        ("octagon", plane(8, vec![(0..8).collect()])),
    ];
    list.into_iter().map(|(name, (g, f))| (name, g, f)).collect()
}
