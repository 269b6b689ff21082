//! `gainswitch` — switching equivalence, spectra, class census and
//! symmetry of gain graphs stored in `.gg` files.
//!
//! Prints one JSON report per run. Exit status: 0 computed, 1 negative
//! verdict, 2 invalid input, 3 over a size cap.

mod commands;
mod report;

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use gainswitch::Limits;

use commands::Settings;
use report::{Failure, Outcome, Report};

#[derive(Parser, Debug)]
#[command(version, about = "Switching classes, spectra and symmetry of mixed and gain graphs")]
struct Cli {
    /// Eigenvalue tolerance; also the threshold below which numbers print as 0.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,
    /// Largest edge count for the 3^m orientation census.
    #[arg(long, global = true, default_value_t = Limits::default().max_census_edges)]
    max_enum: usize,
    /// Largest vertex count for automorphism search.
    #[arg(long, global = true, default_value_t = Limits::default().max_aut_vertices)]
    max_aut: usize,
    #[arg(long, global = true)]
    json_pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide switching equivalence and print a witness.
    Equiv { a: String, b: String },
    /// Eigenvalues and characteristic polynomial.
    Spectrum { file: String },
    /// Count and size switching classes.
    Census {
        file: String,
        /// Require `f` lines and use the plane-graph formulas.
        #[arg(long)]
        faces: bool,
    },
    /// Balance, negativity, bipartiteness and cactus verdicts.
    Classify { file: String },
    /// Decide switching isomorphism on a common underlying graph.
    Iso { a: String, b: String },
    /// Cartesian product of two gain graphs.
    Product {
        a: String,
        b: String,
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Automorphism group of a gain graph.
    Aut { file: String },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Equiv { .. } => "equiv",
            Command::Spectrum { .. } => "spectrum",
            Command::Census { .. } => "census",
            Command::Classify { .. } => "classify",
            Command::Iso { .. } => "iso",
            Command::Product { .. } => "product",
            Command::Aut { .. } => "aut",
        }
    }

    fn inputs(&self) -> Vec<String> {
        match self {
            Command::Equiv { a, b } | Command::Iso { a, b } | Command::Product { a, b, .. } => {
                vec![a.clone(), b.clone()]
            }
            Command::Spectrum { file }
            | Command::Census { file, .. }
            | Command::Classify { file }
            | Command::Aut { file } => {
                vec![file.clone()]
            }
        }
    }
}

fn run(cmd: &Command, s: &Settings) -> Result<Outcome, Failure> {
    use commands::load;
    match cmd {
        Command::Equiv { a, b } => commands::equiv(&load(a)?, &load(b)?),
        Command::Spectrum { file } => commands::spectrum_cmd(&load(file)?, s),
        Command::Census { file, faces } => commands::census(&load(file)?, *faces, s),
        Command::Classify { file } => commands::classify(&load(file)?, s),
        Command::Iso { a, b } => commands::iso(&load(a)?, &load(b)?, s),
        Command::Product { a, b, output } => commands::product(&load(a)?, &load(b)?, output.as_deref()),
        Command::Aut { file } => commands::aut(&load(file)?, s),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let settings = Settings {
        tol: cli.tol,
        limits: Limits { max_census_edges: cli.max_enum, max_aut_vertices: cli.max_aut, ..Limits::default() },
    };
    let (outcome, code) = match run(&cli.command, &settings) {
        Ok(o) => {
            let code = if o.truncated {
                3
            } else if o.negative {
                1
            } else {
                0
            };
            (o, code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            let o = Outcome { diagnostics: vec![format!("error: {}", f.message())], ..Outcome::default() };
            (o, f.exit_code())
        }
    };
    let report = Report {
        command: cli.command.name(),
        inputs: cli.command.inputs(),
        result: outcome.result,
        diagnostics: outcome.diagnostics,
        tol: cli.tol,
    };
    let text = if cli.json_pretty { serde_json::to_string_pretty(&report) } else { serde_json::to_string(&report) };
    println!("{}", text.expect("report serializes"));
    ExitCode::from(code)
}
