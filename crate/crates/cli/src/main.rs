//! `fig`: command-line access to fuzzy incidence graphs.
//!
//! Exit status is 0 on success or a true answer, 1 when a property is false or
//! a check finds violations, and 2 for usage, input and parse failures.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use fig_core::connectivity::{
    classify_all, has_all_effective_pairs, iconn, is_cfig, is_fc, is_fic, is_sfig, is_wfic,
    IncidenceNode,
};
use fig_core::domination::{
    bound_cartesian, bound_composition, bound_join, bound_tensor, gamma_exact_with_cap,
    gamma_greedy, join_side_dominators, sids_weight, DominationSolution, ProductBound,
    DEFAULT_EXACT_CAP,
};
use fig_core::io::{parse, parse_lenient, serialize};
use fig_core::lab::{
    default_grid, generate, resolve_theorem, verify, GenKind, GenSpec, TheoremReport,
    VerifyConfig, THEOREM_IDS,
};
use fig_core::operations::{cartesian, compose, has_uniform_pair_weights_per_vertex, join, tensor};
use fig_core::{EdgeKey, FigError, FuzzyIncidenceGraph, UnitWeight, VertexId};

const EXACT_CAP_VAR: &str = "FIG_EXACT_CAP";

#[derive(Parser)]
#[command(name = "fig", version, about = "Fuzzy incidence graphs: operations, strength and domination")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report every broken membership inequality.
    Validate { file: PathBuf },
    /// Classify every pair as alpha, beta or delta.
    Classify { file: PathBuf },
    /// Incidence strength from a vertex to an edge.
    Iconn {
        file: PathBuf,
        #[arg(long = "from")]
        from: String,
        #[arg(long, num_args = 2, value_names = ["U", "V"])]
        edge: Vec<String>,
    },
    /// Test a structural property; exits 1 when it fails.
    Check {
        file: PathBuf,
        #[arg(long, value_enum)]
        property: Property,
    },
    /// Combine two graphs.
    Op {
        #[arg(value_enum)]
        operation: Operation,
        first: PathBuf,
        second: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Minimum-weight strong incidence dominating set.
    Dominate {
        file: PathBuf,
        #[arg(long, conflicts_with = "greedy")]
        exact: bool,
        #[arg(long)]
        greedy: bool,
    },
    /// Domination bound for a combined graph, next to the exact value when it fits.
    Bound {
        #[arg(value_enum)]
        operation: Operation,
        first: PathBuf,
        second: PathBuf,
    },
    /// Generate a random graph of a given class.
    Gen {
        #[arg(long)]
        kind: GenKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        /// Comma-separated weights; defaults to the multiples of 0.05.
        #[arg(long, value_delimiter = ',')]
        grid: Vec<UnitWeight>,
        #[arg(long, default_value = "v")]
        prefix: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check known results on seeded random instances.
    Verify {
        /// A result id such as T19, or `all`.
        #[arg(long)]
        theorem: String,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Vertex bound per generated graph, replacing each result's default.
        #[arg(long)]
        max_n: Option<usize>,
        /// Also write the full reports, witnesses included, as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    Sfig,
    Cfig,
    Effective,
    Wfic,
    Fc,
    Fic,
    Uniform,
}

#[derive(Clone, Copy, ValueEnum)]
enum Operation {
    Join,
    Cartesian,
    Tensor,
    Compose,
}

/// A run that could not produce an answer; always exit status 2.
struct Failure(String);

impl From<FigError> for Failure {
    fn from(e: FigError) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<ExitCode, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(Failure(message)) => {
            eprintln!("fig: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Validate { file } => validate(&file),
        Command::Classify { file } => classify(&file),
        Command::Iconn { file, from, edge } => strength(&file, &from, &edge),
        Command::Check { file, property } => check(&file, property),
        Command::Op { operation, first, second, output } => {
            let g = combine(operation, &load(&first)?, &load(&second)?)?;
            emit(&serialize(&g), output.as_deref())
        }
        Command::Dominate { file, exact: _, greedy } => dominate(&file, greedy),
        Command::Bound { operation, first, second } => bound(operation, &load(&first)?, &load(&second)?),
        Command::Gen { kind, n, seed, density, grid, prefix, output } => {
            let spec = GenSpec {
                kind,
                n,
                edge_density: density,
                weight_grid: if grid.is_empty() { default_grid() } else { grid },
                seed,
                prefix,
            };
            emit(&serialize(&generate(&spec)?), output.as_deref())
        }
        Command::Verify { theorem, trials, seed, max_n, json } => {
            let config = VerifyConfig { trials, seed, max_vertices: max_n, exact_cap: exact_cap()? };
            verify_command(&theorem, &config, json.as_deref())
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<FuzzyIncidenceGraph, Failure> {
    parse(&read(path)?).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn emit(text: &str, output: Option<&Path>) -> Outcome {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| Failure(format!("{}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn verdict(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn exact_cap() -> Result<usize, Failure> {
    match std::env::var(EXACT_CAP_VAR) {
        Ok(raw) => raw
            .trim()
            .parse()
            .map_err(|_| Failure(format!("{EXACT_CAP_VAR}={raw:?} is not a vertex count"))),
        Err(_) => Ok(DEFAULT_EXACT_CAP),
    }
}

fn vertex(name: &str) -> Result<VertexId, Failure> {
    Ok(VertexId::new(name)?)
}

fn validate(file: &Path) -> Outcome {
    let path = file.display();
    let builder = parse_lenient(&read(file)?).map_err(|e| Failure(format!("{path}: {e}")))?;
    let report = builder.validate();
    for violation in &report.violations {
        println!("{violation}");
    }
    Ok(verdict(report.violations.is_empty()))
}

fn classify(file: &Path) -> Outcome {
    let g = load(file)?;
    let mut out = String::new();
    for c in classify_all(&g) {
        let (u, v) = c.pair.edge().endpoints();
        writeln!(out, "{} {u} {v} {} {} {}", c.pair.vertex(), c.eta, c.eta_prime_inf, c.class)
            .expect("writing to a String");
    }
    emit(&out, None)
}

fn strength(file: &Path, from: &str, edge: &[String]) -> Outcome {
    let g = load(file)?;
    let source = IncidenceNode::Vertex(vertex(from)?);
    let e = EdgeKey::new(vertex(&edge[0])?, vertex(&edge[1])?)
        .ok_or_else(|| Failure(format!("{} {} is a loop, not an edge", edge[0], edge[1])))?;
    println!("{}", iconn(&g, &source, &IncidenceNode::Edge(e))?);
    Ok(ExitCode::SUCCESS)
}

fn check(file: &Path, property: Property) -> Outcome {
    let g = load(file)?;
    let holds = match property {
        Property::Sfig => is_sfig(&g),
        Property::Cfig => is_cfig(&g),
        Property::Effective => has_all_effective_pairs(&g),
        Property::Wfic => is_wfic(&g),
        Property::Fc => is_fc(&g),
        Property::Fic => is_fic(&g),
        Property::Uniform => has_uniform_pair_weights_per_vertex(&g),
    };
    println!("{holds}");
    Ok(verdict(holds))
}

fn combine(
    operation: Operation,
    g1: &FuzzyIncidenceGraph,
    g2: &FuzzyIncidenceGraph,
) -> Result<FuzzyIncidenceGraph, Failure> {
    Ok(match operation {
        Operation::Join => join(g1, g2)?,
        Operation::Cartesian => cartesian(g1, g2)?,
        Operation::Tensor => tensor(g1, g2)?,
        Operation::Compose => compose(g1, g2)?,
    })
}

fn names(set: &BTreeSet<VertexId>) -> String {
    set.iter().map(VertexId::as_str).collect::<Vec<_>>().join(" ")
}

fn write_solution(out: &mut String, s: &DominationSolution) {
    writeln!(out, "set {}", names(&s.set)).expect("writing to a String");
    for (v, w) in &s.per_vertex_weight {
        writeln!(out, "weight {v} {w}").expect("writing to a String");
    }
    writeln!(out, "total {}", s.total_weight).expect("writing to a String");
}

fn dominate(file: &Path, greedy: bool) -> Outcome {
    let g = load(file)?;
    let mut out = String::new();
    if greedy {
        write_solution(&mut out, &gamma_greedy(&g));
    } else {
        let exact = gamma_exact_with_cap(&g, exact_cap()?).map_err(|e| match e {
            FigError::LimitExceeded { .. } => {
                Failure(format!("{e}; raise {EXACT_CAP_VAR} or use --greedy"))
            }
            other => other.into(),
        })?;
        write_solution(&mut out, &exact.solution);
        writeln!(out, "min_cardinality {}", exact.min_cardinality).expect("writing to a String");
    }
    emit(&out, None)
}

fn bound(operation: Operation, g1: &FuzzyIncidenceGraph, g2: &FuzzyIncidenceGraph) -> Outcome {
    let cap = exact_cap()?;
    let product = combine(operation, g1, g2)?;
    let mut out = String::new();
    let result = match operation {
        Operation::Join => join_side_dominators(g1, g2, cap).and_then(|(x1, x2)| {
            let (d1, d2) = (x1.solution.set, x2.solution.set);
            let bound = bound_join(g1, g2, &d1, &d2)?;
            for d in [&d1, &d2] {
                let s = sids_weight(&product, d)?;
                writeln!(out, "candidate {} valid={} total={}", names(d), s.valid, s.total_weight)
                    .expect("writing to a String");
            }
            Ok(bound)
        }),
        _ => factor_dominators(g1, g2, cap).and_then(|(d1, d2)| {
            let b: ProductBound = match operation {
                Operation::Cartesian => bound_cartesian(g1, g2, &d1, &d2)?,
                Operation::Tensor => bound_tensor(g1, g2, &d1, &d2)?,
                _ => bound_composition(g1, g2, &d1, &d2)?,
            };
            for c in &b.candidates {
                writeln!(out, "candidate {} valid={} total={}", names(&c.set), c.valid, c.total_weight)
                    .expect("writing to a String");
            }
            Ok(b.bound)
        }),
    };
    let bound = match result {
        Ok(b) => b,
        Err(e @ (FigError::NotStrong | FigError::HypothesisViolated(_) | FigError::NotComplete)) => {
            eprintln!("fig: the bound does not apply: {e}");
            return Ok(ExitCode::from(1));
        }
        Err(e) => return Err(e.into()),
    };
    writeln!(out, "bound {bound}").expect("writing to a String");
    match gamma_exact_with_cap(&product, cap) {
        Ok(exact) => writeln!(out, "exact {}", exact.solution.total_weight),
        Err(FigError::LimitExceeded { limit, actual, .. }) => {
            writeln!(out, "exact skipped ({actual} vertices, cap {limit})")
        }
        Err(e) => return Err(e.into()),
    }
    .expect("writing to a String");
    emit(&out, None)
}

fn factor_dominators(
    g1: &FuzzyIncidenceGraph,
    g2: &FuzzyIncidenceGraph,
    cap: usize,
) -> fig_core::Result<(BTreeSet<VertexId>, BTreeSet<VertexId>)> {
    Ok((
        gamma_exact_with_cap(g1, cap)?.solution.set,
        gamma_exact_with_cap(g2, cap)?.solution.set,
    ))
}

fn verify_command(theorem: &str, config: &VerifyConfig, json: Option<&Path>) -> Outcome {
    let ids: Vec<&str> = if theorem.eq_ignore_ascii_case("all") {
        THEOREM_IDS.to_vec()
    } else {
        vec![resolve_theorem(theorem)?]
    };
    let mut reports: Vec<TheoremReport> = Vec::new();
    for id in ids {
        let report = verify(id, config)?;
        println!("{}", report.summary_line());
        for v in &report.violations {
            println!("  trial {}: {}", v.trial, v.detail);
        }
        eprintln!("{id}: {:.3}s", report.elapsed.as_secs_f64());
        reports.push(report);
    }
    if let Some(path) = json {
        let text = serde_json::to_string_pretty(&reports).expect("reports serialize");
        fs::write(path, text + "\n").map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    }
    Ok(verdict(reports.iter().all(TheoremReport::passed)))
}
