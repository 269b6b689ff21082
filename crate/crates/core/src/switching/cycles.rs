//! Exhaustive enumeration of simple cycles. These are oracle routines for
//! small graphs; callers check the vertex cap first.

use crate::graph::SimpleGraph;

/// All simple cycles, each listed once: it starts at its smallest vertex
/// and its second vertex is smaller than its last.
pub fn simple_cycles(g: &SimpleGraph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut on_path = vec![false; g.n()];
    for start in 0..g.n() {
        let mut path = vec![start];
        on_path[start] = true;
        extend(g, start, &mut path, &mut on_path, &mut out);
        on_path[start] = false;
    }
    out
}

fn extend(g: &SimpleGraph, start: usize, path: &mut Vec<usize>, on_path: &mut [bool], out: &mut Vec<Vec<usize>>) {
    let last = *path.last().unwrap();
    for &(w, _) in g.neighbors(last) {
        if w == start {
            if path.len() >= 3 && path[1] < last {
                out.push(path.clone());
            }
            continue;
        }
        if w < start || on_path[w] {
            continue;
        }
        path.push(w);
        on_path[w] = true;
        extend(g, start, path, on_path, out);
        on_path[w] = false;
        path.pop();
    }
}

/// Whether `cycle` has no chord in `g`.
pub fn is_chordless(g: &SimpleGraph, cycle: &[usize]) -> bool {
    let len = cycle.len();
    for i in 0..len {
        for j in i + 2..len {
            if i == 0 && j == len - 1 {
                continue;
            }
            if g.has_edge(cycle[i], cycle[j]) {
                return false;
            }
        }
    }
    true
}

pub fn chordless_cycles(g: &SimpleGraph) -> Vec<Vec<usize>> {
    simple_cycles(g).into_iter().filter(|c| is_chordless(g, c)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_on_small_graphs() {
        assert_eq!(simple_cycles(&SimpleGraph::cycle(5)).len(), 1);
        assert_eq!(simple_cycles(&SimpleGraph::path(5)).len(), 0);
        // K4: four triangles and three 4-cycles.
        let k4 = simple_cycles(&SimpleGraph::complete(4));
        assert_eq!(k4.iter().filter(|c| c.len() == 3).count(), 4);
        assert_eq!(k4.iter().filter(|c| c.len() == 4).count(), 3);
        // K5: 10 + 15 + 12.
        assert_eq!(simple_cycles(&SimpleGraph::complete(5)).len(), 37);
    }

    #[test]
    fn chordless_filter() {
        let k4 = SimpleGraph::complete(4);
        let cl = chordless_cycles(&k4);
        assert_eq!(cl.len(), 4);
        assert!(cl.iter().all(|c| c.len() == 3));
        assert_eq!(chordless_cycles(&SimpleGraph::cycle(6)).len(), 1);
    }
}
