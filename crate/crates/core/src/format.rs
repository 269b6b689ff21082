//! The `.gg` text format.
//!
//! ```text
//! # triangle with one arc
//! gg 4 mixed
//! n 3
//! e 1 2 i
//! e 2 3 1
//! e 3 1 1
//! f 1 2 3
//! ```
//!
//! `gg <k> [mixed]` names the gain group, `n` the vertex count, `e u v t`
//! sets `gain(u, v)` to exponent `t`, and `f` lists an inner face clockwise.
//! When `k = 4` the tokens `1`, `-1`, `i`, `-i` name the gains themselves,
//! so there `1` is exponent 0 and exponent 1 is written `i`. Labels are
//! 1-based in the file and 0-based in memory. `#` starts a comment.

use std::collections::HashSet;
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::gain::{Gain, GainGroup};
use crate::gain_graph::GainGraph;

/// A parsed `.gg` file. Faces are 0-based vertex cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GgFile {
    pub graph: GainGraph,
    pub faces: Vec<Vec<usize>>,
}

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn parse_gain(token: &str, group: GainGroup, line: usize) -> Result<Gain> {
    if group.order() == 4 {
        let alias = match token {
            "1" => Some(0),
            "i" | "+i" => Some(1),
            "-i" => Some(3),
            "-1" => Some(2),
            _ => None,
        };
        if let Some(e) = alias {
            return Ok(group.element(e));
        }
    }
    let t: i64 = token.parse().map_err(|_| err(line, format!("bad gain `{token}`")))?;
    group.checked_element(t).map_err(|e| err(line, e.to_string()))
}

fn parse_vertex(token: &str, n: usize, line: usize) -> Result<usize> {
    let v: usize = token.parse().map_err(|_| err(line, format!("bad vertex `{token}`")))?;
    if v == 0 || v > n {
        return Err(err(line, format!("vertex {v} outside 1..={n}")));
    }
    Ok(v - 1)
}

pub fn parse_gg(text: &str) -> Result<GgFile> {
    let mut group: Option<(GainGroup, bool)> = None;
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    let mut faces = Vec::new();
    let mut seen = HashSet::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match (tokens[0], group, n) {
            ("gg", None, _) => {
                let (k, mixed) = match tokens.as_slice() {
                    [_, k] => (k, false),
                    [_, k, "mixed"] => (k, true),
                    _ => return Err(err(line, "expected `gg <k> [mixed]`")),
                };
                let k: u32 = k.parse().map_err(|_| err(line, format!("bad group order `{k}`")))?;
                let g = GainGroup::new(k).map_err(|e| err(line, e.to_string()))?;
                if mixed && k != 4 {
                    return Err(err(line, Error::MixedModeOrder(k).to_string()));
                }
                group = Some((g, mixed));
            }
            (_, None, _) => return Err(err(line, "file must start with `gg <k>`")),
            ("n", Some(_), None) => {
                let [_, count] = tokens.as_slice() else {
                    return Err(err(line, "expected `n <vertices>`"));
                };
                n = Some(count.parse().map_err(|_| err(line, format!("bad vertex count `{count}`")))?);
            }
            (_, Some(_), None) => return Err(err(line, "expected `n <vertices>` after the header")),
            ("e", Some((g, mixed)), Some(n)) => {
                let [_, u, v, t] = tokens.as_slice() else {
                    return Err(err(line, "expected `e <u> <v> <gain>`"));
                };
                let (u, v) = (parse_vertex(u, n, line)?, parse_vertex(v, n, line)?);
                if u == v {
                    return Err(err(line, format!("self-loop at vertex {}", u + 1)));
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(err(line, format!("duplicate edge {{{}, {}}}", u + 1, v + 1)));
                }
                let gain = parse_gain(t, g, line)?;
                if mixed && gain.exp() == 2 {
                    return Err(err(line, "gain -1 is not allowed in a mixed graph"));
                }
                edges.push((u, v, gain));
            }
            ("f", Some(_), Some(n)) => {
                let face = tokens[1..].iter().map(|t| parse_vertex(t, n, line)).collect::<Result<Vec<_>>>()?;
                if face.len() < 3 {
                    return Err(err(line, "a face needs at least 3 vertices"));
                }
                faces.push(face);
            }
            (other, _, _) => return Err(err(line, format!("unknown record `{other}`"))),
        }
    }
    let (group, mixed) = group.ok_or_else(|| err(last_line, "missing `gg <k>` header"))?;
    let n = n.ok_or_else(|| err(last_line, "missing `n <vertices>` line"))?;
    let graph = GainGraph::new(n, group, &edges, mixed).map_err(|e| err(0, e.to_string()))?;
    Ok(GgFile { graph, faces })
}

/// Writes `g` (and optional 0-based faces) in `.gg` form; parses back to the same graph.
pub fn write_gg(g: &GainGraph, faces: &[Vec<usize>]) -> String {
    let mut out = String::new();
    let k = g.group().order();
    let _ = writeln!(out, "gg {k}{}", if g.is_mixed() { " mixed" } else { "" });
    let _ = writeln!(out, "n {}", g.n());
    for (id, &(u, v)) in g.graph().edges().iter().enumerate() {
        let t = g.edge_gain(id);
        let token = if k == 4 { t.to_string() } else { t.exp().to_string() };
        let _ = writeln!(out, "e {} {} {token}", u + 1, v + 1);
    }
    for face in faces {
        let labels: Vec<String> = face.iter().map(|v| (v + 1).to_string()).collect();
        let _ = writeln!(out, "f {}", labels.join(" "));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SimpleGraph;

    const ARC_TRIANGLE: &str = "# triangle\ngg 4 mixed\nn 3\ne 1 2 i\ne 2 3 1\ne 3 1 1\nf 1 2 3\n";

    #[test]
    fn parses_triangle() {
        let f = parse_gg(ARC_TRIANGLE).unwrap();
        assert_eq!(f.graph.n(), 3);
        assert!(f.graph.is_mixed());
        assert_eq!(f.graph.gain(0, 1).unwrap().exp(), 1);
        assert_eq!(f.graph.gain(1, 0).unwrap().exp(), 3);
        assert_eq!(f.faces, vec![vec![0, 1, 2]]);
    }

    #[test]
    fn numeric_and_alias_gains_agree() {
        let a = parse_gg("gg 4\nn 2\ne 2 1 -i\n").unwrap();
        let b = parse_gg("gg 4\nn 2\ne 2 1 3\n").unwrap();
        assert_eq!(a, b);
        let one = parse_gg("gg 4\nn 2\ne 1 2 1\n").unwrap();
        assert!(one.graph.gain(0, 1).unwrap().is_one());
        let six = parse_gg("gg 6\nn 2\ne 1 2 1\n").unwrap();
        assert_eq!(six.graph.gain(0, 1).unwrap().exp(), 1);
        assert_eq!(a.graph.gain(0, 1).unwrap().exp(), 1);
    }

    #[test]
    fn round_trip() {
        let f = parse_gg(ARC_TRIANGLE).unwrap();
        assert_eq!(parse_gg(&write_gg(&f.graph, &f.faces)).unwrap(), f);
        let g6 = GainGraph::from_exponents(4, 6, &[(0, 1, 5), (1, 2, 3), (2, 3, 1)], false).unwrap();
        assert_eq!(parse_gg(&write_gg(&g6, &[])).unwrap().graph, g6);
        let plain = GainGraph::undirected(SimpleGraph::complete(4));
        assert_eq!(parse_gg(&write_gg(&plain, &[])).unwrap().graph, plain);
    }

    #[test]
    fn rejects_bad_input() {
        let cases = [
            ("n 3\n", 1),
            ("gg 4\nn 3\ne 1 2 i\ne 2 1 i\n", 4),
            ("gg 4\nn 3\ne 1 1 1\n", 3),
            ("gg 4 mixed\nn 3\ne 1 2 -1\n", 3),
            ("gg 4\nn 3\ne 1 4 1\n", 3),
            ("gg 6\nn 3\ne 1 2 6\n", 3),
            ("gg 6\nn 3\ne 1 2 i\n", 3),
            ("gg 6 mixed\nn 3\n", 1),
            ("gg 4\nn 3\nx 1 2\n", 3),
        ];
        for (text, line) in cases {
            match parse_gg(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
    }
}
