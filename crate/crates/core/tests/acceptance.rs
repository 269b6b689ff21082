//! End-to-end acceptance suite. Runs without the test harness so that
//! every criterion's PASS/FAIL line is printed; exits non-zero if any fails.

mod common;

use std::time::{Duration, Instant};

use gainswitch::census::orientation;
use gainswitch::switching::cycle_gain_profile;
use gainswitch::*;
use num_bigint::BigUint;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use common::*;

type Check = std::result::Result<(), String>;
type Criterion = (&'static str, Duration, Box<dyn FnOnce(&mut StdRng) -> Check>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
}

fn mixed_gain(exp: i64) -> Gain {
    GainGroup::MIXED.element(exp)
}

fn c1_arc_triangle() -> Check {
    let g = arc_triangle();
    let s = spectrum::<f64>(&g, 1e-12).map_err(|e| e.to_string())?;
    let r3 = 3f64.sqrt();
    ensure(close(&s.eigenvalues, &[-r3, 0.0, r3], 1e-9), || format!("spectrum {:?}", s.eigenvalues))?;
    let p = char_poly_elementary::<f64>(&g, &Limits::default()).map_err(|e| e.to_string())?;
    ensure(close(p.coefficients(), &[1.0, 0.0, -3.0, 0.0], 1e-12), || format!("char poly {:?}", p.coefficients()))
}

fn c2_bowtie() -> Check {
    let (a, b) = (bowtie_negative(), bowtie_imaginary());
    let r5 = 5f64.sqrt();
    let want = [-r5, -1.0, 0.0, 1.0, r5];
    for g in [&a, &b] {
        let s = spectrum::<f64>(g, 1e-12).map_err(|e| e.to_string())?;
        ensure(close(&s.eigenvalues, &want, 1e-9), || format!("spectrum {:?}", s.eigenvalues))?;
    }
    match switching_equivalent(&a, &b).map_err(|e| e.to_string())? {
        Equivalence::NotEquivalent(m) => {
            ensure(m.cycle == vec![0, 1, 2] && m.left == mixed_gain(2) && m.right == mixed_gain(1), || {
                format!("unexpected mismatch {m:?}")
            })?
        }
        other => return Err(format!("expected a mismatch, got {other:?}")),
    }
    let iso = switching_isomorphic(&a, &b, &Limits::default()).map_err(|e| e.to_string())?;
    ensure(iso.is_none(), || "reported switching isomorphic".into())
}

/// Counts mixed orientations of the `n`-cycle `0 → 1 → … → 0` by gain, by
/// walking all `3^n` words directly.
fn cycle_word_counts(n: usize) -> [u64; 4] {
    let mut counts = [0u64; 4];
    for mut w in 0..3u64.pow(n as u32) {
        let mut e = 0;
        for _ in 0..n {
            e += [0, 1, 3][(w % 3) as usize];
            w /= 3;
        }
        counts[e % 4] += 1;
    }
    counts
}

// The four cases are kept in their textbook form rather than simplified.
#[allow(clippy::manual_div_ceil)]
fn c3_cycle_sizes() -> Check {
    let limits = Limits::default();
    for n in 3..=8 {
        let words = cycle_word_counts(n);
        let c = SimpleGraph::cycle(n);
        let census = brute_force_census(&c, &limits).map_err(|e| e.to_string())?;
        ensure(census.total == 3u64.pow(n as u32), || format!("C{n}: total {}", census.total))?;
        ensure(census.class_count() == 4, || format!("C{n}: {} classes", census.class_count()))?;
        let p = 3u64.pow(n as u32);
        for class in &census.classes {
            let zeta = class.profile[0];
            let formula = cycle_class_size(n, zeta).map_err(|e| e.to_string())?;
            let written = match (n % 2, zeta.exp()) {
                (1, 2) => (p - 3) / 4,
                (1, _) => (p + 1) / 4,
                (0, 0) => (p + 3) / 4,
                _ => (p - 1) / 4,
            };
            ensure(formula == BigUint::from(class.size), || format!("C{n} ζ={zeta}: {formula} vs {}", class.size))?;
            ensure(class.size == written, || format!("C{n} ζ={zeta}: four-case value {written}"))?;
            ensure(class.size == words[zeta.exp() as usize], || format!("C{n} ζ={zeta}: word count"))?;
        }
    }
    Ok(())
}

fn c4_alpha() -> Check {
    for n in 0..=40 {
        ensure(alpha_vector(n) == alpha_closed_form(n), || format!("n={n}: recurrence and closed form differ"))?;
    }
    let one = [1u8, 0, 1, 1].map(BigUint::from);
    ensure(alpha_vector(1).components() == &one, || format!("α(1) = {:?}", alpha_vector(1).components()))
}

fn c5_bounds(rng: &mut StdRng) -> Check {
    let limits = Limits::default();
    let mut tight_cases = 0;
    for _ in 0..50 {
        let n = rng.gen_range(3..=8);
        let m = rng.gen_range(n - 1..=12.min(n * (n - 1) / 2));
        let g = connected_graph(rng, n, m);
        let count = brute_force_census(&g, &limits).map_err(|e| e.to_string())?.class_count() as u32;
        let d = (m + 1 - n) as u32;
        let (lo, hi) = (3u32.pow(d), 4u32.pow(d));
        ensure(lo <= count && count <= hi, || format!("n={n} m={m}: {count} outside [{lo}, {hi}]"))?;
        let b = class_count_bounds(&g);
        if b.upper_tight {
            tight_cases += 1;
            ensure(count == hi, || format!("n={n} m={m}: sufficient condition holds but count {count} < {hi}"))?;
        }
    }
    ensure(tight_cases > 0, || "no instance exercised the tight case".into())
}

fn c6_balance_spectral(rng: &mut StdRng) -> Check {
    let mut checked = 0u64;
    for _ in 0..30 {
        let n = rng.gen_range(3..=6);
        let m = rng.gen_range(n - 1..=8.min(n * (n - 1) / 2));
        let g = connected_graph(rng, n, m);
        for index in 0..3u64.pow(m as u32) {
            let h = orientation(&g, index);
            let spectral = is_balanced_spectrally(&h, 1e-8).map_err(|e| e.to_string())?;
            ensure(spectral == is_balanced(&h), || format!("disagreement on {:?}", h.edge_gains()))?;
            checked += 1;
        }
    }
    ensure(checked > 0, || "nothing checked".into())
}

fn c7_char_poly(rng: &mut StdRng) -> Check {
    let limits = Limits::default();
    for _ in 0..100 {
        let n = rng.gen_range(2..=8);
        let k = if rng.gen_bool(0.5) { 2 } else { 4 };
        let under = random_graph(rng, n, 0.5);
        let g = with_random_gains(rng, &under, k, false);
        let s = spectrum::<f64>(&g, 1e-12).map_err(|e| e.to_string())?;
        let p = char_poly_elementary::<f64>(&g, &limits).map_err(|e| e.to_string())?;
        let bound = 1e-6 * p.l1_norm().max(1.0);
        for &x in &s.eigenvalues {
            ensure(p.eval(x).abs() < bound, || format!("|Φ({x})| = {} on {:?}", p.eval(x).abs(), g.edge_gains()))?;
        }
    }
    Ok(())
}

fn c8_closed_forms(rng: &mut StdRng) -> Check {
    let limits = Limits::default();
    for _ in 0..20 {
        let g = cactus(rng, 14);
        let census = brute_force_census(&g, &limits).map_err(|e| e.to_string())?;
        for _ in 0..10 {
            let h = with_random_gains(rng, &g, 4, true);
            let by_blocks = class_size_by_blocks(&h, &limits).map_err(|e| e.to_string())?;
            ensure(by_blocks == BigUint::from(census.size_of(&h)), || format!("cactus {:?}", h.edge_gains()))?;
        }
    }
    for (name, g, faces) in plane_graphs() {
        let census = brute_force_census(&g, &limits).map_err(|e| e.to_string())?;
        let base = GainGraph::undirected(g.clone());
        let fs = parse_face_structure(&base, &faces).map_err(|e| format!("{name}: {e}"))?;
        let count = plane_class_count(&g, &fs, &limits).map_err(|e| e.to_string())?;
        ensure(count == census.class_count() as u64, || format!("{name}: count {count} vs {}", census.class_count()))?;
        for i in 0..census.class_count() {
            let rep = census.representative(i);
            let size = plane_class_size(&rep, &fs).map_err(|e| e.to_string())?;
            ensure(size == BigUint::from(census.classes[i].size), || format!("{name}: class {i} size {size}"))?;
        }
    }
    Ok(())
}

fn c9_switching(rng: &mut StdRng) -> Check {
    for _ in 0..500 {
        let n = rng.gen_range(1..=8);
        let k = [1, 2, 3, 4, 6][rng.gen_range(0..5)];
        let group = GainGroup::new(k).unwrap();
        let under = random_graph(rng, n, 0.4);
        let g = with_random_gains(rng, &under, k, false);
        let other = with_random_gains(rng, &under, k, false);
        let theta = SwitchingFunction::new((0..n).map(|_| group.element(rng.gen_range(0..k as i64))).collect())
            .map_err(|e| e.to_string())?;
        let s = g.switch(&theta).map_err(|e| e.to_string())?;

        let basis = fundamental_cycles(&under, &SpanningForest::bfs(&under));
        ensure(cycle_gain_profile(&g, &basis) == cycle_gain_profile(&s, &basis), || "basis gains changed".into())?;
        ensure(cospectral::<f64>(&g, &s, 1e-9).map_err(|e| e.to_string())?, || "spectrum changed".into())?;
        let verdict = |a: &GainGraph, b: &GainGraph| switching_equivalent(a, b).map(|e| e.is_equivalent());
        ensure(verdict(&g, &other).ok() == verdict(&s, &other).ok(), || {
            "verdict against a third graph changed".into()
        })?;

        let w = switching_equivalent(&g, &s).map_err(|e| e.to_string())?;
        let w = w.witness().ok_or("switched copy not recognized")?;
        ensure(w.witnesses(&g, &s), || "returned witness fails".into())?;
        // Two witnesses differ by a constant on each component.
        let comp = under.components();
        let ratio: Vec<Gain> = (0..n).map(|v| theta.value(v) * w.value(v).conj()).collect();
        ensure(under.edges().iter().all(|&(u, v)| ratio[u] == ratio[v]), || "witnesses differ non-uniformly".into())?;
        ensure((0..n).all(|v| (0..n).all(|u| comp[u] != comp[v] || ratio[u] == ratio[v])), || "ratio varies".into())?;
    }
    Ok(())
}

fn c10_bipartite(rng: &mut StdRng) -> Check {
    for _ in 0..100 {
        let n = rng.gen_range(2..=10);
        let mixed = rng.gen_bool(0.5);
        let k = if mixed { 4 } else { [2, 4, 6][rng.gen_range(0..3)] };
        let under = bipartite_graph(rng, n, 0.5);
        let g = with_random_gains(rng, &under, k, mixed);
        ensure(equivalent_to_negation(&g), || format!("bipartite graph not ~ its negation: {:?}", g.edge_gains()))?;
        let s = spectrum::<f64>(&g, 1e-12).map_err(|e| e.to_string())?;
        ensure(s.symmetry_defect() < 1e-8, || format!("asymmetric spectrum {:?}", s.eigenvalues))?;
    }
    let f = arc_triangle();
    let s = spectrum::<f64>(&f, 1e-12).map_err(|e| e.to_string())?;
    ensure(s.symmetry_defect() < 1e-9, || "triangle spectrum not symmetric".into())?;
    ensure(!f.graph().is_bipartite(), || "triangle reported bipartite".into())?;
    ensure(!equivalent_to_negation(&f), || "triangle reported equivalent to its negation".into())
}

/// All permutations of `0..n`, as an oracle independent of the search.
fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn rec(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == p.len() {
            out.push(p.clone());
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            rec(k + 1, p, out);
            p.swap(k, i);
        }
    }
    rec(0, &mut p, &mut out);
    out
}

fn c11_automorphisms(rng: &mut StdRng) -> Check {
    let limits = Limits::default();
    let mut positives = 0;
    for _ in 0..30 {
        let n = rng.gen_range(3..=8);
        let under = random_graph(rng, n, 0.5);
        let a = with_random_gains(rng, &under, 4, true);
        let d = mixed_aut_decomposition(&a, &limits).map_err(|e| e.to_string())?;
        ensure(d.identities_hold(), || format!("intersection identities fail on {:?}", a.edge_gains()))?;

        let perms = all_permutations(n);
        let keeps = |p: &[usize], g: &GainGraph| {
            g.graph().edges().iter().all(|&(u, v)| g.graph().has_edge(p[u], p[v]) && g.gain(p[u], p[v]) == g.gain(u, v))
        };
        let gain_aut: Vec<&Vec<usize>> = perms.iter().filter(|p| keeps(p, &a)).collect();
        ensure(gain_aut.len() == d.mixed.order(), || format!("|Aut| {} vs {}", gain_aut.len(), d.mixed.order()))?;
        ensure(gain_aut.iter().all(|p| d.mixed.contains(&VertexPermutation::new(p.to_vec()).unwrap())), || {
            "automorphism sets differ".into()
        })?;

        // Orbit criterion versus exhaustive search over all relabelings.
        let underlying_aut: Vec<VertexPermutation> = perms
            .iter()
            .filter(|p| under.edges().iter().all(|&(u, v)| under.has_edge(p[u], p[v])))
            .map(|p| VertexPermutation::new(p.clone()).unwrap())
            .collect();
        let b = if rng.gen_bool(0.5) {
            let f = &underlying_aut[rng.gen_range(0..underlying_aut.len())];
            let theta = SwitchingFunction::new((0..n).map(|_| mixed_gain(rng.gen_range(0..4))).collect()).unwrap();
            let moved = act(f, &a).map_err(|e| e.to_string())?;
            let switched = moved.switch(&theta).map_err(|e| e.to_string())?;
            if switched.is_mixed() {
                switched
            } else {
                moved
            }
        } else {
            with_random_gains(rng, &under, 4, true)
        };
        let exhaustive = underlying_aut.iter().any(|f| {
            act(f, &a).ok().and_then(|m| switching_equivalent(&m, &b).ok()).is_some_and(|e| e.is_equivalent())
        });
        let found = switching_isomorphic(&a, &b, &limits).map_err(|e| e.to_string())?;
        ensure(found.is_some() == exhaustive, || format!("search {} vs exhaustive {exhaustive}", found.is_some()))?;
        let orbit = orbit_of_class(&a, &limits).map_err(|e| e.to_string())?;
        let in_orbit = orbit.iter().any(|r| switching_equivalent(r, &b).is_ok_and(|e| e.is_equivalent()));
        ensure(in_orbit == exhaustive, || format!("orbit {in_orbit} vs exhaustive {exhaustive}"))?;
        positives += usize::from(exhaustive);
    }
    ensure(positives > 0 && positives < 30, || format!("{positives}/30 isomorphic: one side untested"))
}

fn main() {
    let mut rng = StdRng::seed_from_u64(0x5eed_2026);
    let criteria: Vec<Criterion> = vec![
        (
            "triangle with one arc: spectrum and characteristic polynomial",
            Duration::from_secs(1),
            Box::new(|_| c1_arc_triangle()),
        ),
        ("bowtie pair: cospectral, not equivalent, not isomorphic", Duration::from_secs(1), Box::new(|_| c2_bowtie())),
        ("cycle class sizes match census for n = 3..8", Duration::from_secs(10), Box::new(|_| c3_cycle_sizes())),
        ("alpha recurrence equals closed form for n <= 40", Duration::MAX, Box::new(|_| c4_alpha())),
        ("class counts within bounds on 50 random graphs", Duration::from_secs(120), Box::new(c5_bounds)),
        ("balance iff cospectral over all orientations", Duration::MAX, Box::new(c6_balance_spectral)),
        ("characteristic polynomial vanishes on the spectrum", Duration::MAX, Box::new(c7_char_poly)),
        ("block, cactus and plane formulas match census", Duration::from_secs(300), Box::new(c8_closed_forms)),
        ("switching preserves cycles, spectra and verdicts", Duration::MAX, Box::new(c9_switching)),
        ("bipartite graphs equal their negation", Duration::MAX, Box::new(c10_bipartite)),
        ("automorphism identities and orbit criterion", Duration::MAX, Box::new(c11_automorphisms)),
    ];
    let mut failed = Vec::new();
    for (i, (name, budget, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run(&mut rng);
        let took = start.elapsed();
        let outcome = outcome.and_then(|()| ensure(took <= budget, || format!("took {took:.2?}, budget {budget:?}")));
        match &outcome {
            Ok(()) => println!("criterion {:>2}: PASS  {name} ({took:.2?})", i + 1),
            Err(why) => {
                println!("criterion {:>2}: FAIL  {name} ({took:.2?}): {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
