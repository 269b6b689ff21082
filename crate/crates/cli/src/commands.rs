use std::fs;

use gainswitch::census::{
    block_decompose, brute_force_census, class_count_bounds, class_size_by_blocks, cut_edge_lower_bound,
    cycle_class_size, is_cactus, parse_face_structure, plane_class_count, plane_class_size,
};
use gainswitch::spectral::{cartesian_product, char_poly_elementary, is_balanced_spectrally, spectrum, CharPoly};
use gainswitch::switching::{
    cycle_gain, equivalent_to_negation, fundamental_cycles, gain_character, is_balanced, switching_equivalent,
    Equivalence, GainCharacter, SpanningForest,
};
use gainswitch::symmetry::{gain_automorphisms, mixed_aut_decomposition, switching_isomorphic};
use gainswitch::{parse_gg, write_gg, Error, GainGraph, GgFile, Limits};
use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::report::{self, Failure, Outcome};

pub struct Settings {
    pub tol: f64,
    pub limits: Limits,
}

type CmdResult = Result<Outcome, Failure>;

pub fn load(path: &str) -> Result<GgFile, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Validation(format!("{path}: {e}")))?;
    parse_gg(&text).map_err(|e| Failure::Validation(format!("{path}: {e}")))
}

fn big(x: &BigUint) -> Value {
    match u64::try_from(x) {
        Ok(v) => json!(v),
        Err(_) => json!(x.to_string()),
    }
}

fn same_group(a: &GainGraph, b: &GainGraph) -> Result<(), Failure> {
    if a.group() != b.group() {
        return Err(Error::GroupMismatch { left: a.group().order(), right: b.group().order() }.into());
    }
    Ok(())
}

pub fn equiv(a: &GgFile, b: &GgFile) -> CmdResult {
    same_group(&a.graph, &b.graph)?;
    match switching_equivalent(&a.graph, &b.graph)? {
        Equivalence::Equivalent(theta) => {
            Ok(Outcome::new(json!({ "equivalent": true, "witness": report::switching(&theta) })))
        }
        Equivalence::NotEquivalent(m) => {
            let mut out = Outcome::new(json!({
                "equivalent": false,
                "mismatch": {
                    "basis_index": m.index,
                    "cycle": report::labels(&m.cycle),
                    "left": report::gain(m.left),
                    "right": report::gain(m.right),
                },
            }));
            out.negative = true;
            Ok(out)
        }
        Equivalence::DifferentGraph => Err(Failure::Validation("different underlying graph".into())),
    }
}

pub fn spectrum_cmd(file: &GgFile, s: &Settings) -> CmdResult {
    let g = &file.graph;
    let spec = spectrum::<f64>(g, s.tol)?;
    let from_roots = CharPoly::from_roots(&spec.eigenvalues);
    let mut result = json!({
        "n": g.n(),
        "eigenvalues": report::nums(&spec.eigenvalues, s.tol),
        "char_poly_from_eigenvalues": report::nums(from_roots.coefficients(), s.tol),
    });
    let mut out = Outcome::default();
    match char_poly_elementary::<f64>(g, &s.limits) {
        Ok(poly) => {
            let gap = poly.max_abs_diff(&from_roots);
            result["char_poly_elementary"] = report::nums(poly.coefficients(), 0.0);
            result["char_poly_discrepancy"] = report::num(gap, 0.0);
            let scale = 1f64.max(poly.l1_norm());
            if gap > 1e-6 * scale {
                out.diagnostics.push(format!("characteristic polynomial routes differ by {gap:e}"));
            }
        }
        Err(e @ Error::TooLarge { .. }) => {
            out.diagnostics.push(format!("elementary-subgraph expansion skipped: {e}"));
            out.truncated = true;
        }
        Err(e) => return Err(e.into()),
    }
    out.result = result;
    Ok(out)
}

pub fn census(file: &GgFile, require_faces: bool, s: &Settings) -> CmdResult {
    let g = &file.graph;
    let graph = g.graph();
    let mut out = Outcome::default();
    if require_faces && file.faces.is_empty() {
        return Err(Failure::Validation("--faces given but the file has no `f` lines".into()));
    }
    let bounds = class_count_bounds(graph);
    let mut result = json!({
        "n": graph.n(),
        "m": graph.m(),
        "cyclomatic": bounds.cyclomatic,
        "bounds": [big(&bounds.lower), big(&bounds.upper)],
        "upper_tight": bounds.upper_tight,
        "cut_edge_lower_bound": big(&cut_edge_lower_bound(graph)),
        "cactus": is_cactus(graph),
    });
    let mut methods = 0;

    let census = match brute_force_census(graph, &s.limits) {
        Ok(c) => {
            methods += 1;
            let count = c.class_count() as u64;
            result["classes"] = json!(count);
            result["sizes"] = json!(c.sizes());
            result["census"] = serde_json::to_value(&c).expect("census serializes");
            let in_bounds = BigUint::from(count) >= bounds.lower && BigUint::from(count) <= bounds.upper;
            result["count_in_bounds"] = json!(in_bounds);
            if !in_bounds {
                out.diagnostics.push("class count outside the theoretical bounds".into());
            }
            Some(c)
        }
        Err(e @ Error::TooLarge { .. }) => {
            out.diagnostics.push(format!("brute-force census skipped: {e}"));
            None
        }
        Err(e) => return Err(e.into()),
    };

    let faces = if file.faces.is_empty() { None } else { Some(parse_face_structure(g, &file.faces)?) };
    if let Some(fs) = &faces {
        match plane_class_count(graph, fs, &s.limits) {
            Ok(count) => {
                methods += 1;
                let agree = census.as_ref().map(|c| c.class_count() as u64 == count);
                result["plane"] = json!({ "faces": fs.k(), "class_count": count, "agrees_with_census": agree });
                if agree == Some(false) {
                    out.diagnostics.push("plane class count disagrees with the census".into());
                }
            }
            Err(e @ Error::TooLarge { .. }) => out.diagnostics.push(format!("plane class count skipped: {e}")),
            Err(e) => return Err(e.into()),
        }
    }

    if g.is_mixed() {
        let mut sizes = serde_json::Map::new();
        if let Some(c) = &census {
            sizes.insert("brute_force".into(), json!(c.size_of(g)));
        }
        match class_size_by_blocks(g, &s.limits) {
            Ok(size) => {
                methods += 1;
                sizes.insert("block_product".into(), big(&size));
            }
            Err(e @ Error::TooLarge { .. }) => out.diagnostics.push(format!("block product skipped: {e}")),
            Err(e) => return Err(e.into()),
        }
        let blocks = block_decompose(graph);
        if graph.is_connected() && blocks.len() == 1 && blocks[0].is_cycle() {
            let basis = fundamental_cycles(graph, &SpanningForest::bfs(graph));
            let cycle = &basis.cycles()[0];
            let zeta = cycle_gain(g, cycle)?;
            sizes.insert("cycle".into(), big(&cycle_class_size(cycle.len(), zeta)?));
        }
        if let Some(fs) = &faces {
            sizes.insert("plane".into(), big(&plane_class_size(g, fs)?));
        }
        let values: Vec<&Value> = sizes.values().collect();
        let agree = values.windows(2).all(|w| w[0] == w[1]);
        if !agree {
            out.diagnostics.push("class-size routes disagree".into());
        }
        result["class_of_input"] = json!({ "sizes": sizes, "agree": agree });
    } else {
        out.diagnostics.push("input is not a mixed graph; its own class size is not reported".into());
    }

    if methods == 0 {
        return Err(Failure::TooLarge("no counting method applies under the current caps".into()));
    }
    out.result = result;
    Ok(out)
}

pub fn classify(file: &GgFile, s: &Settings) -> CmdResult {
    let g = &file.graph;
    let mut out = Outcome::default();
    let cactus = is_cactus(g.graph());
    let mut result = json!({
        "mixed": g.is_mixed(),
        "balanced": is_balanced(g),
        "bipartite": g.graph().is_bipartite(),
        "equivalent_to_negation": equivalent_to_negation(g),
        "cactus": cactus,
    });
    match gain_character(g, &s.limits) {
        Ok(c) => {
            result["character"] = serde_json::to_value(c).expect("enum serializes");
            result["negative"] = json!(c == GainCharacter::Negative);
            result["imaginary"] = json!(c == GainCharacter::Imaginary);
            if g.is_mixed() && matches!(c, GainCharacter::Negative | GainCharacter::Imaginary) && !cactus {
                out.diagnostics.push("negative or imaginary mixed graph on a non-cactus graph".into());
            }
        }
        Err(e @ Error::TooLarge { .. }) => {
            out.diagnostics.push(format!("cycle classification skipped: {e}"));
            out.truncated = true;
        }
        Err(e) => return Err(e.into()),
    }
    if g.is_mixed() {
        let spectral = is_balanced_spectrally(g, s.tol)?;
        let agrees = spectral == is_balanced(g);
        result["spectral_balance"] = json!({ "cospectral_with_underlying": spectral, "agrees": agrees });
        if !agrees {
            out.diagnostics.push("spectral balance test disagrees with the cycle test".into());
        }
    }
    out.result = result;
    Ok(out)
}

pub fn iso(a: &GgFile, b: &GgFile, s: &Settings) -> CmdResult {
    same_group(&a.graph, &b.graph)?;
    if a.graph.graph() != b.graph.graph() {
        return Err(Failure::Validation("different underlying graph".into()));
    }
    match switching_isomorphic(&a.graph, &b.graph, &s.limits)? {
        Some((f, theta)) => Ok(Outcome::new(json!({
            "isomorphic": true,
            "permutation": report::permutation(&f),
            "witness": report::switching(&theta),
        }))),
        None => {
            let mut out = Outcome::new(json!({ "isomorphic": false }));
            out.negative = true;
            Ok(out)
        }
    }
}

pub fn product(a: &GgFile, b: &GgFile, output: Option<&str>) -> CmdResult {
    same_group(&a.graph, &b.graph)?;
    let p = cartesian_product(&a.graph, &b.graph)?;
    let text = write_gg(&p, &[]);
    let reparsed = parse_gg(&text)?.graph;
    let kron = a.graph.hermitian_matrix::<f64>().kronecker_sum(&b.graph.hermitian_matrix());
    let matches = reparsed.hermitian_matrix::<f64>() == kron;
    let mut result = json!({ "n": p.n(), "m": p.m(), "kronecker_sum_matches": matches });
    match output {
        Some(path) => {
            fs::write(path, &text).map_err(|e| Failure::Validation(format!("{path}: {e}")))?;
            result["output"] = json!(path);
        }
        None => result["gg"] = json!(text),
    }
    let mut out = Outcome::new(result);
    if !matches {
        out.diagnostics.push("product matrix differs from the Kronecker sum".into());
    }
    Ok(out)
}

pub fn aut(file: &GgFile, s: &Settings) -> CmdResult {
    let g = &file.graph;
    let group = gain_automorphisms(g, &s.limits)?;
    let generators: Vec<Value> = group.generators().iter().map(report::permutation).collect();
    let mut result = json!({ "order": group.order(), "generators": generators });
    let mut out = Outcome::default();
    if g.is_mixed() {
        let d = mixed_aut_decomposition(g, &s.limits)?;
        result["underlying_order"] = json!(d.underlying.order());
        result["arcs_order"] = json!(d.arcs.order());
        result["undirected_order"] = json!(d.undirected.order());
        result["identities_hold"] = json!(d.identities_hold());
        if !d.identities_hold() {
            out.diagnostics.push("automorphism intersection identities failed".into());
        }
    }
    out.result = result;
    Ok(out)
}
