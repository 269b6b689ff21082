use gainswitch::{Error, Gain, SwitchingFunction, VertexPermutation};
use serde::Serialize;
use serde_json::{json, Value};

/// The JSON document printed for every invocation.
#[derive(Debug, Serialize)]
pub struct Report {
    pub command: &'static str,
    pub inputs: Vec<String>,
    pub result: Value,
    pub diagnostics: Vec<String>,
    pub tol: f64,
}

/// What a command produced, short of a hard failure.
#[derive(Debug, Default)]
pub struct Outcome {
    pub result: Value,
    pub diagnostics: Vec<String>,
    /// A computed "no" (not equivalent, not isomorphic).
    pub negative: bool,
    /// Partial result: some part exceeded a cap.
    pub truncated: bool,
}

impl Outcome {
    pub fn new(result: Value) -> Self {
        Self { result, ..Self::default() }
    }
}

#[derive(Debug)]
pub enum Failure {
    Validation(String),
    TooLarge(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Validation(_) => 2,
            Failure::TooLarge(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Validation(m) | Failure::TooLarge(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::TooLarge { .. } => Failure::TooLarge(e.to_string()),
            _ => Failure::Validation(e.to_string()),
        }
    }
}

/// Rounds to 12 significant digits; values within `snap` of zero print as 0.
pub fn num(x: f64, snap: f64) -> Value {
    if x.abs() < snap {
        return json!(0.0);
    }
    let rounded: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
    json!(rounded)
}

pub fn nums(xs: &[f64], snap: f64) -> Value {
    Value::Array(xs.iter().map(|&x| num(x, snap)).collect())
}

pub fn gain(g: Gain) -> Value {
    json!(g.to_string())
}

/// 1-based vertex labels.
pub fn labels(vs: &[usize]) -> Value {
    Value::Array(vs.iter().map(|v| json!(v + 1)).collect())
}

pub fn switching(theta: &SwitchingFunction) -> Value {
    Value::Array(
        theta.values().iter().enumerate().map(|(v, &g)| json!({ "vertex": v + 1, "gain": g.to_string() })).collect(),
    )
}

pub fn permutation(f: &VertexPermutation) -> Value {
    labels(f.image())
}
