//! Exhaustive census of the `3^m` mixed orientations of a graph.
//!
//! Each orientation is keyed by the gains of a fixed fundamental cycle
//! basis; two orientations are switching equivalent exactly when their keys
//! agree, so counting keys counts classes. Keys pack one 2-bit exponent per
//! basis cycle and are updated incrementally as an odometer walks the
//! orientations.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gain::{Gain, GainGroup};
use crate::gain_graph::GainGraph;
use crate::graph::SimpleGraph;
use crate::limits::{check_cap, Limits};
use crate::switching::{cycle_gain_profile, fundamental_cycles, FundamentalCycleBasis, SpanningForest};

/// Exponent of the canonical orientation for each edge state: undirected,
/// arc `u -> v`, arc `v -> u`.
const STATE_EXP: [u64; 3] = [0, 1, 3];

const LANE_BITS: usize = 2;
const MAX_LANES: usize = 64 / LANE_BITS;

/// One switching class: its basis-gain profile and how many orientations
/// fall into it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusClass {
    pub profile: Vec<Gain>,
    pub size: u64,
    /// Smallest orientation index in the class.
    representative: u64,
}

impl Serialize for CensusClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let profile: Vec<String> = self.profile.iter().map(Gain::to_string).collect();
        let mut st = s.serialize_struct("CensusClass", 2)?;
        st.serialize_field("profile", &profile)?;
        st.serialize_field("size", &self.size)?;
        st.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Census {
    pub total: u64,
    /// Sorted by profile.
    pub classes: Vec<CensusClass>,
    #[serde(skip)]
    graph: SimpleGraph,
    #[serde(skip)]
    forest: SpanningForest,
    #[serde(skip)]
    basis: FundamentalCycleBasis,
}

impl Census {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn sizes(&self) -> Vec<u64> {
        self.classes.iter().map(|c| c.size).collect()
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn forest(&self) -> &SpanningForest {
        &self.forest
    }

    pub fn basis(&self) -> &FundamentalCycleBasis {
        &self.basis
    }

    /// Position of the class containing `g`, which must live on the census graph.
    pub fn class_of(&self, g: &GainGraph) -> Option<usize> {
        if g.graph() != &self.graph {
            return None;
        }
        let profile = cycle_gain_profile(g, &self.basis);
        self.classes.binary_search_by(|c| c.profile.cmp(&profile)).ok()
    }

    /// Size of the class containing `g`; zero when `g` is not a mixed graph
    /// on the census graph.
    pub fn size_of(&self, g: &GainGraph) -> u64 {
        self.class_of(g).map_or(0, |i| self.classes[i].size)
    }

    /// A mixed graph in class `i`.
    pub fn representative(&self, i: usize) -> GainGraph {
        orientation(&self.graph, self.classes[i].representative)
    }
}

/// The mixed graph with orientation index `index`: edge `e` takes state
/// digit `e` of `index` in base 3.
pub fn orientation(g: &SimpleGraph, mut index: u64) -> GainGraph {
    let gains = (0..g.m())
        .map(|_| {
            let s = (index % 3) as usize;
            index /= 3;
            GainGroup::MIXED.element(STATE_EXP[s] as i64)
        })
        .collect();
    GainGraph::from_edge_gains(g.clone(), GainGroup::MIXED, gains, true).expect("states are mixed gains")
}

/// Per edge, the basis cycles through it and the shift each applies to the
/// key lane of that cycle for each of the three states.
struct KeyTable {
    lanes: Vec<Vec<(usize, [u64; 3])>>,
}

impl KeyTable {
    fn new(g: &SimpleGraph, basis: &FundamentalCycleBasis) -> Self {
        let mut lanes = vec![Vec::new(); g.m()];
        for (c, cycle) in basis.cycles().iter().enumerate() {
            let len = cycle.len();
            for i in 0..len {
                let (u, v) = (cycle[i], cycle[(i + 1) % len]);
                let id = g.edge_id(u, v).expect("basis cycle lies in the graph");
                let shift = if u < v { STATE_EXP } else { STATE_EXP.map(|e| (4 - e) % 4) };
                lanes[id].push((c, shift));
            }
        }
        Self { lanes }
    }

    fn add(key: u64, lane: usize, delta: u64) -> u64 {
        let at = lane * LANE_BITS;
        let cur = (key >> at) & 3;
        let next = (cur + delta) & 3;
        (key & !(3 << at)) | (next << at)
    }

    fn key_of(&self, states: &[u8]) -> u64 {
        let mut key = 0;
        for (e, &s) in states.iter().enumerate() {
            for &(c, shift) in &self.lanes[e] {
                key = Self::add(key, c, shift[s as usize]);
            }
        }
        key
    }

    /// Changes edge `e` from state `from` to state `to`.
    fn step(&self, key: u64, e: usize, from: u8, to: u8) -> u64 {
        let mut key = key;
        for &(c, shift) in &self.lanes[e] {
            key = Self::add(key, c, (4 + shift[to as usize] - shift[from as usize]) % 4);
        }
        key
    }
}

type Tally = HashMap<u64, (u64, u64)>;

fn tally_range(table: &KeyTable, m: usize, start: u64, len: u64) -> Tally {
    let mut states = vec![0u8; m];
    let mut rest = start;
    for s in states.iter_mut() {
        *s = (rest % 3) as u8;
        rest /= 3;
    }
    let mut key = table.key_of(&states);
    let mut tally = Tally::new();
    for offset in 0..len {
        tally.entry(key).or_insert((0, start + offset)).0 += 1;
        if offset + 1 == len {
            break;
        }
        for (e, s) in states.iter_mut().enumerate() {
            let next = (*s + 1) % 3;
            key = table.step(key, e, *s, next);
            *s = next;
            if next != 0 {
                break;
            }
        }
    }
    tally
}

fn merge(mut a: Tally, b: Tally) -> Tally {
    for (key, (count, rep)) in b {
        let slot = a.entry(key).or_insert((0, rep));
        slot.0 += count;
        slot.1 = slot.1.min(rep);
    }
    a
}

/// Enumerates every mixed orientation of `g` and groups them into
/// switching classes.
pub fn brute_force_census(g: &SimpleGraph, limits: &Limits) -> Result<Census> {
    check_cap("edge count", g.m(), limits.max_census_edges)?;
    let forest = SpanningForest::bfs(g);
    let basis = fundamental_cycles(g, &forest);
    if basis.len() > MAX_LANES {
        return Err(Error::TooLarge { what: "cyclomatic number", size: basis.len(), cap: MAX_LANES });
    }
    let m = g.m();
    let total = 3u64.pow(m as u32);
    let table = KeyTable::new(g, &basis);

    let chunks = (rayon::current_num_threads() as u64 * 8).clamp(1, total);
    let chunk_len = total.div_ceil(chunks);
    let tally = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let start = c * chunk_len;
            let len = chunk_len.min(total.saturating_sub(start));
            if len == 0 {
                Tally::new()
            } else {
                tally_range(&table, m, start, len)
            }
        })
        .reduce(Tally::new, merge);

    let mut classes: Vec<CensusClass> = tally
        .into_iter()
        .map(|(key, (size, representative))| {
            let profile =
                (0..basis.len()).map(|c| GainGroup::MIXED.element(((key >> (c * LANE_BITS)) & 3) as i64)).collect();
            CensusClass { profile, size, representative }
        })
        .collect();
    classes.sort_by(|a, b| a.profile.cmp(&b.profile));
    Ok(Census { total, classes, graph: g.clone(), forest, basis })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::switching::switching_equivalent;

    #[test]
    fn triangle_census() {
        let c = brute_force_census(&SimpleGraph::cycle(3), &Limits::default()).unwrap();
        assert_eq!(c.total, 27);
        assert_eq!(c.class_count(), 4);
        let mut sizes = c.sizes();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![6, 7, 7, 7]);
        let minus = c.classes.iter().find(|k| k.profile[0].exp() == 2).unwrap();
        assert_eq!(minus.size, 6);
    }

    #[test]
    fn path_census() {
        let c = brute_force_census(&SimpleGraph::path(3), &Limits::default()).unwrap();
        assert_eq!(c.sizes(), vec![9]);
        assert!(c.classes[0].profile.is_empty());
    }

    #[test]
    fn empty_graph_has_one_orientation() {
        let c = brute_force_census(&SimpleGraph::empty(3), &Limits::default()).unwrap();
        assert_eq!(c.total, 1);
        assert_eq!(c.sizes(), vec![1]);
    }

    #[test]
    fn cap_is_enforced() {
        let limits = Limits { max_census_edges: 5, ..Limits::default() };
        let err = brute_force_census(&SimpleGraph::complete(4), &limits).unwrap_err();
        assert!(matches!(err, Error::TooLarge { .. }));
    }

    /// Orientation-by-orientation oracle: classes via pairwise equivalence tests.
    #[test]
    fn matches_pairwise_equivalence() {
        let g = SimpleGraph::new(4, [(0, 1), (1, 2), (0, 2), (2, 3), (1, 3)]).unwrap();
        let c = brute_force_census(&g, &Limits::default()).unwrap();
        let mut reps: Vec<(GainGraph, u64)> = Vec::new();
        for idx in 0..3u64.pow(g.m() as u32) {
            let o = orientation(&g, idx);
            match reps.iter_mut().find(|(r, _)| switching_equivalent(r, &o).unwrap().is_equivalent()) {
                Some((_, n)) => *n += 1,
                None => reps.push((o, 1)),
            }
        }
        assert_eq!(reps.len(), c.class_count());
        for (r, n) in &reps {
            assert_eq!(c.size_of(r), *n);
        }
        for i in 0..c.class_count() {
            assert_eq!(c.class_of(&c.representative(i)), Some(i));
        }
    }

    #[test]
    fn json_shape() {
        let c = brute_force_census(&SimpleGraph::cycle(3), &Limits::default()).unwrap();
        let v = serde_json::to_value(&c).unwrap();
        assert_eq!(v["total"], 27);
        assert_eq!(v["classes"].as_array().unwrap().len(), 4);
        assert_eq!(v["classes"][0]["profile"][0], "1");
    }
}
