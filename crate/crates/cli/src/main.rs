//! Command-line front end: parse matrix or bipartite-graph inputs,
//! dispatch the library computations, and emit deterministic text or
//! JSON reports.
//!
//! Exit codes: 0 success, 1 catalogue mismatch from verify-paper,
//! 2 input error, 3 budget exhaustion.

mod formats;
mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;

use report::{indices_1based, ints, matrix, obj, usizes, vector, vectors};
use toricsplit::budget::Budget;
use toricsplit::splitting::{self, SplitReport, SplitValue};
use toricsplit::supports;
use toricsplit::toric::{self, Configuration, GeneratorSet};
use toricsplit::{families, graphs, verify, Error, IntMatrix};

#[derive(Parser)]
#[command(
    name = "toricsplit",
    about = "Splitting numbers of toric ideals",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Shared work budget for enumeration phases.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    budget: u64,
    /// Cap radical upper bounds by the circuit count (circuits generate
    /// up to radical).
    #[arg(long, global = true)]
    assume_circuit_radical: bool,
    /// Field characteristic annotation: `0`, `any`, or a positive integer.
    #[arg(long = "char", global = true, default_value = "any")]
    characteristic: String,
    /// Write the report to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Integer kernel basis, rank and height of a matrix.
    Kernel { file: PathBuf },
    /// All circuits of a pointed configuration.
    Circuits { file: PathBuf },
    /// Graver basis of a pointed configuration.
    Graver { file: PathBuf },
    /// Minimal Markov basis (minimal binomial generating set).
    Markov { file: PathBuf },
    /// The support graph on the minimal circuit supports.
    Gamma { file: PathBuf },
    /// The {0,1}-matching deficiency of the support graph.
    Delta { file: PathBuf },
    /// Bounds on the binomial arithmetical rank.
    BarBounds { file: PathBuf },
    /// Splitting numbers with a cover certificate when one exists.
    Split { file: PathBuf },
    /// Chordless even cycle generators of a bipartite graph ideal.
    GraphGens { file: PathBuf },
    /// The three-way generator split of a complete bipartite graph.
    KmnSplit { m: usize, n: usize },
    /// A catalogued family instance with its recorded values.
    Family {
        /// symmetric-curve A B | lawrence A B | cyclic D [T..] | ex2_8 |
        /// ex4_4 | ex4_5 | k33
        name: String,
        params: Vec<i64>,
    },
    /// Recompute every catalogued quantity and compare.
    VerifyPaper,
}

struct Failure {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = if e.is_budget() { 3 } else { 2 };
        fail(code, e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = validate_characteristic(&cli.characteristic) {
        eprintln!("error: {}", e.message);
        return ExitCode::from(e.code);
    }
    let budget = Budget::new(cli.budget);
    let outcome = dispatch(&cli, &budget);
    match outcome {
        Ok((value, code)) => {
            let rendered = match cli.format {
                Format::Text => report::render_text(&value),
                Format::Json => report::render_json(&value),
            };
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, &rendered) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            } else {
                print!("{rendered}");
            }
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn validate_characteristic(c: &str) -> Result<(), Failure> {
    if c == "any" || c == "0" || c.parse::<u32>().is_ok_and(|p| p > 0) {
        Ok(())
    } else {
        Err(fail(
            2,
            format!("bad --char value `{c}`: expected 0, any, or a positive integer"),
        ))
    }
}

fn dispatch(cli: &Cli, budget: &Budget) -> Result<(Value, u8), Failure> {
    let mut code = 0u8;
    let value = match &cli.command {
        Command::Kernel { file } => kernel_report(cli, file)?,
        Command::Circuits { file } => circuits_report(cli, file, budget)?,
        Command::Graver { file } => graver_report(cli, file, budget)?,
        Command::Markov { file } => markov_report(cli, file, budget)?,
        Command::Gamma { file } => gamma_report(cli, file, budget)?,
        Command::Delta { file } => delta_report(cli, file, budget)?,
        Command::BarBounds { file } => bar_report(cli, file, budget)?,
        Command::Split { file } => split_report_cmd(cli, file, budget)?,
        Command::GraphGens { file } => graph_gens_report(cli, file)?,
        Command::KmnSplit { m, n } => kmn_report(cli, *m, *n, budget)?,
        Command::Family { name, params } => family_report(cli, name, params)?,
        Command::VerifyPaper => {
            let (value, ok) = verify_report(cli, budget)?;
            if !ok {
                code = 1;
            }
            value
        }
    };
    Ok((value, code))
}

fn head(cli: &Cli, command: &str, input: Value) -> Vec<(&'static str, Value)> {
    vec![
        ("command", Value::from(command.to_string())),
        ("characteristic", Value::from(cli.characteristic.clone())),
        ("input", input),
    ]
}

fn load_matrix(file: &PathBuf) -> Result<IntMatrix, Failure> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| fail(2, format!("cannot read {}: {e}", file.display())))?;
    formats::parse_matrix(&text).map_err(|e| fail(2, format!("{}: {e}", file.display())))
}

fn load_graph(file: &PathBuf) -> Result<graphs::BipartiteGraph, Failure> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| fail(2, format!("cannot read {}: {e}", file.display())))?;
    formats::parse_graph(&text).map_err(|e| fail(2, format!("{}: {e}", file.display())))
}

fn load_config(file: &PathBuf) -> Result<Configuration, Failure> {
    let m = load_matrix(file)?;
    Configuration::new(m).map_err(|e| fail(2, format!("{}: {e}", file.display())))
}

fn matrix_input(file: &Path, m: &IntMatrix) -> Value {
    obj(vec![
        ("file", Value::from(file.display().to_string())),
        ("rows", Value::from(m.rows())),
        ("cols", Value::from(m.cols())),
        ("matrix", matrix(m)),
    ])
}

fn kernel_report(cli: &Cli, file: &PathBuf) -> Result<Value, Failure> {
    let m = load_matrix(file)?;
    let basis = toricsplit::exactla::integer_kernel_basis(&m);
    let rank = toricsplit::exactla::rank(&m);
    let mut fields = head(cli, "kernel", matrix_input(file, &m));
    fields.push(("rank", Value::from(rank)));
    fields.push(("kernel_dimension", Value::from(basis.len())));
    fields.push((
        "kernel_basis",
        Value::Array(basis.iter().map(|v| ints(v)).collect()),
    ));
    fields.push((
        "method",
        Value::from("column reduction with row-Hermite canonical form"),
    ));
    Ok(obj(fields))
}

fn circuits_report(cli: &Cli, file: &PathBuf, budget: &Budget) -> Result<Value, Failure> {
    let config = load_config(file)?;
    let circs = supports::circuits(config.matrix(), budget)?;
    let mut fields = head(cli, "circuits", matrix_input(file, config.matrix()));
    fields.push(("count", Value::from(circs.len())));
    fields.push((
        "circuits",
        Value::Array(circs.iter().map(|c| vector(&c.vector)).collect()),
    ));
    fields.push((
        "method",
        Value::from("rank+1 column subsets with Cramer kernel vectors"),
    ));
    Ok(obj(fields))
}

fn graver_report(cli: &Cli, file: &PathBuf, budget: &Budget) -> Result<Value, Failure> {
    let config = load_config(file)?;
    let graver = toric::graver_basis(&config, budget)?;
    let mut fields = head(cli, "graver", matrix_input(file, config.matrix()));
    fields.push(("count", Value::from(graver.len())));
    fields.push(("graver_basis", vectors(&graver)));
    fields.push((
        "method",
        Value::from("conformal completion from a lattice basis"),
    ));
    Ok(obj(fields))
}

fn markov_report(cli: &Cli, file: &PathBuf, budget: &Budget) -> Result<Value, Failure> {
    let config = load_config(file)?;
    let result = toric::minimal_markov(&config, budget)?;
    let mut fields = head(cli, "markov", matrix_input(file, config.matrix()));
    fields.push(("mu", Value::from(result.mu())));
    fields.push(("indispensable", Value::from(result.indispensable_count())));
    fields.push(("generators", vectors(&result.generators.vectors)));
    fields.push((
        "degrees",
        Value::Array(
            result
                .degrees
                .iter()
                .map(|d| {
                    obj(vec![
                        ("degree", ints(&d.degree.vector)),
                        ("fiber_size", Value::from(d.fiber_size)),
                        ("components", Value::from(d.components)),
                        ("added", vectors(&d.added)),
                        ("indispensable", Value::from(d.indispensable)),
                    ])
                })
                .collect(),
        ),
    ));
    fields.push((
        "method",
        Value::from("fiber connectivity over Graver degrees"),
    ));
    Ok(obj(fields))
}

fn gamma_value(graph: &supports::SupportGraph) -> Value {
    obj(vec![
        (
            "vertices",
            Value::Array(
                graph
                    .vertices
                    .iter()
                    .map(|s| indices_1based(s.indices()))
                    .collect(),
            ),
        ),
        (
            "edges",
            Value::Array(graph.edges.iter().map(|&(a, b)| usizes(&[a, b])).collect()),
        ),
        (
            "witnesses",
            Value::Array(graph.witnesses.iter().map(|w| ints(w)).collect()),
        ),
    ])
}

fn gamma_report(cli: &Cli, file: &PathBuf, budget: &Budget) -> Result<Value, Failure> {
    let config = load_config(file)?;
    let circs = supports::circuits(config.matrix(), budget)?;
    let verts = supports::cmin(&circs);
    let graph = supports::gamma_graph(config.matrix(), &verts, budget)?;
    let mut fields = head(cli, "gamma", matrix_input(file, config.matrix()));
    fields.push(("graph", gamma_value(&graph)));
    fields.push((
        "method",
        Value::from("signed kernel feasibility on disjoint minimal supports"),
    ));
    Ok(obj(fields))
}

fn delta_report(cli: &Cli, file: &PathBuf, budget: &Budget) -> Result<Value, Failure> {
    let config = load_config(file)?;
    let circs = supports::circuits(config.matrix(), budget)?;
    let verts = supports::cmin(&circs);
    let graph = supports::gamma_graph(config.matrix(), &verts, budget)?;
    let (delta, matching) = supports::delta01(&graph);
    let mut fields = head(cli, "delta", matrix_input(file, config.matrix()));
    fields.push(("delta01", Value::from(delta)));
    fields.push((
        "matching",
        obj(vec![
            (
                "pairs",
                Value::Array(
                    matching
                        .pairs
                        .iter()
                        .map(|&(a, b)| usizes(&[a, b]))
                        .collect(),
                ),
            ),
            ("singletons", usizes(&matching.singletons)),
        ]),
    ));
    fields.push(("graph", gamma_value(&graph)));
    fields.push(("method", Value::from("vertices minus a maximum matching")));
    Ok(obj(fields))
}

fn bar_report(cli: &Cli, file: &PathBuf, budget: &Budget) -> Result<Value, Failure> {
    let config = load_config(file)?;
    let bar = supports::bar_bounds(&config, budget, cli.assume_circuit_radical)?;
    let mut fields = head(cli, "bar-bounds", matrix_input(file, config.matrix()));
    fields.push(("lower", Value::from(bar.lo)));
    fields.push(("upper", Value::from(bar.hi)));
    fields.push(("height", Value::from(bar.height)));
    fields.push(("delta01", Value::from(bar.delta)));
    fields.push(("mu", bar.mu.map_or(Value::Null, Value::from)));
    fields.push(("circuit_count", Value::from(bar.circuit_count)));
    fields.push((
        "assume_circuit_radical",
        Value::from(cli.assume_circuit_radical),
    ));
    fields.push(("degraded", Value::from(bar.degraded)));
    fields.push((
        "method",
        Value::from("lower: max(height, delta01); upper: generator count, capped by circuits under the flag"),
    ));
    Ok(obj(fields))
}

fn split_value(v: &SplitValue) -> Value {
    match v {
        SplitValue::Exact(x) => obj(vec![
            ("kind", Value::from("exact")),
            ("value", Value::from(*x)),
        ]),
        SplitValue::Interval(lo, hi) => obj(vec![
            ("kind", Value::from("interval")),
            ("lower", Value::from(*lo)),
            ("upper", Value::from(*hi)),
        ]),
        SplitValue::AtLeast(lo) => obj(vec![
            ("kind", Value::from("at_least")),
            ("lower", Value::from(*lo)),
        ]),
        SplitValue::NotApplicable => obj(vec![("kind", Value::from("not_applicable"))]),
    }
}

fn split_report_value(
    report: &SplitReport,
    generators: Option<&GeneratorSet>,
) -> Vec<(&'static str, Value)> {
    let mut fields = vec![
        ("split", split_value(&report.split)),
        ("split_rad", split_value(&report.split_rad)),
        ("method", Value::from(report.method.clone())),
    ];
    if let Some(cert) = &report.certificate {
        let mut cert_fields = vec![
            ("r", Value::from(cert.r())),
            (
                "parts",
                Value::Array(cert.parts.iter().map(|p| indices_1based(p)).collect()),
            ),
            ("span_dims", usizes(&cert.span_dims)),
            ("kernel_dim", Value::from(cert.kernel_dim)),
            (
                "witness_configs",
                Value::Array(cert.witness_configs.iter().map(matrix).collect()),
            ),
        ];
        if let Some(g) = generators {
            cert_fields.push(("generators", vectors(&g.vectors)));
        }
        fields.push(("certificate", obj(cert_fields)));
    }
    fields
}

fn split_report_cmd(cli: &Cli, file: &PathBuf, budget: &Budget) -> Result<Value, Failure> {
    let config = load_config(file)?;
    let report = splitting::split_numbers(&config, budget, cli.assume_circuit_radical)?;
    let mut fields = head(cli, "split", matrix_input(file, config.matrix()));
    fields.extend(split_report_value(&report, report.generators.as_ref()));
    Ok(obj(fields))
}

fn graph_input(file: &Path, g: &graphs::BipartiteGraph) -> Value {
    obj(vec![
        ("file", Value::from(file.display().to_string())),
        ("left", Value::from(g.left())),
        ("right", Value::from(g.right())),
        (
            "edges",
            Value::Array(
                g.edges()
                    .iter()
                    .map(|&(i, j)| usizes(&[i + 1, j + 1]))
                    .collect(),
            ),
        ),
    ])
}

fn cycle_value(c: &graphs::EvenCycle, g: &graphs::BipartiteGraph) -> Value {
    obj(vec![
        ("vertices", indices_1based(c.vertices())),
        (
            "edges",
            Value::Array(
                c.edge_sequence(g)
                    .iter()
                    .map(|&(i, j)| usizes(&[i + 1, j + 1]))
                    .collect(),
            ),
        ),
        ("vector", vector(&c.lattice_vector(g))),
    ])
}

fn graph_gens_report(cli: &Cli, file: &PathBuf) -> Result<Value, Failure> {
    let g = load_graph(file)?;
    let cycles = graphs::chordless_even_cycles(&g);
    let generators = graphs::cycle_generators(&g);
    let mut fields = head(cli, "graph-gens", graph_input(file, &g));
    fields.push(("count", Value::from(cycles.len())));
    fields.push((
        "cycles",
        Value::Array(cycles.iter().map(|c| cycle_value(c, &g)).collect()),
    ));
    fields.push(("generators", vectors(&generators.vectors)));
    fields.push(("method", Value::from("chordless even cycle enumeration")));
    Ok(obj(fields))
}

fn kmn_report(cli: &Cli, m: usize, n: usize, _budget: &Budget) -> Result<Value, Failure> {
    let split = graphs::kmn_split(m, n).map_err(|e| fail(2, e.to_string()))?;
    let g = graphs::BipartiteGraph::complete(m, n).map_err(|e| fail(2, e.to_string()))?;
    let cycles = graphs::chordless_even_cycles(&g);
    // Edge list of each subgraph: the edges used by its assigned cycles.
    let mut subgraph_edges: [Vec<(usize, usize)>; 3] = Default::default();
    for (ci, &part) in split.assignment.iter().enumerate() {
        for e in cycles[ci].edge_sequence(&g) {
            if !subgraph_edges[part].contains(&e) {
                subgraph_edges[part].push(e);
            }
        }
    }
    for part in subgraph_edges.iter_mut() {
        part.sort_unstable();
    }
    let input = obj(vec![("m", Value::from(m)), ("n", Value::from(n))]);
    let mut fields = head(cli, "kmn-split", input);
    fields.push(("counts", usizes(&split.counts)));
    fields.push(("assignment", usizes(&split.assignment)));
    fields.push((
        "subgraphs",
        Value::Array(
            (0..3)
                .map(|k| {
                    obj(vec![
                        ("vertices", indices_1based(&split.vertex_sets[k])),
                        (
                            "edges",
                            Value::Array(
                                subgraph_edges[k]
                                    .iter()
                                    .map(|&(i, j)| usizes(&[i + 1, j + 1]))
                                    .collect(),
                            ),
                        ),
                    ])
                })
                .collect(),
        ),
    ));
    fields.push(("generators", vectors(&graphs::cycle_generators(&g).vectors)));
    Ok(obj(fields))
}

fn characteristic_matches(flag: &str, c: families::Characteristic) -> bool {
    use families::Characteristic as Ch;
    match flag {
        "any" => true,
        "0" => matches!(c, Ch::Any | Ch::Zero),
        p => {
            let p: u32 = p.parse().expect("validated");
            match c {
                Ch::Any | Ch::Positive => true,
                Ch::Zero => false,
                Ch::Exactly(q) => p == q,
                Ch::PositiveExcept(q) => p != q,
            }
        }
    }
}

fn family_report(cli: &Cli, name: &str, params: &[i64]) -> Result<Value, Failure> {
    let need = |count: usize| -> Result<(), Failure> {
        if params.len() == count {
            Ok(())
        } else {
            Err(fail(
                2,
                format!(
                    "family `{name}` takes {count} parameter(s), got {}",
                    params.len()
                ),
            ))
        }
    };
    let positive = |v: i64| -> Result<u32, Failure> {
        u32::try_from(v).ok().filter(|&x| x > 0).ok_or_else(|| {
            fail(
                2,
                format!("family parameter {v} must be a positive integer"),
            )
        })
    };
    let inst = match name {
        "symmetric-curve" => {
            need(2)?;
            families::symmetric_curve(positive(params[0])?, positive(params[1])?)
                .map_err(|e| fail(2, e.to_string()))?
        }
        "lawrence" => {
            need(2)?;
            families::lawrence_of_symmetric_curve(positive(params[0])?, positive(params[1])?)
                .map_err(|e| fail(2, e.to_string()))?
        }
        "cyclic" => {
            if params.is_empty() {
                return Err(fail(
                    2,
                    "family `cyclic` takes D and optionally 2D+1 parameters",
                ));
            }
            let d = positive(params[0])?;
            let t = if params.len() == 1 {
                None
            } else {
                Some(params[1..].to_vec())
            };
            families::cyclic_configuration(d, t).map_err(|e| fail(2, e.to_string()))?
        }
        other => {
            need(0)?;
            families::catalogued_example(other).map_err(|e| fail(2, e.to_string()))?
        }
    };
    let input = obj(vec![
        ("family", Value::from(name.to_string())),
        (
            "params",
            Value::Array(params.iter().map(|&p| Value::from(p)).collect()),
        ),
    ]);
    let mut fields = head(cli, "family", input);
    fields.push(("matrix", matrix(inst.config.matrix())));
    fields.push(("height", Value::from(inst.config.height())));
    fields.push(("grading", ints(inst.config.grading())));
    fields.push((
        "warnings",
        Value::Array(
            inst.warnings
                .iter()
                .map(|w| Value::from(w.clone()))
                .collect(),
        ),
    ));
    fields.push((
        "catalogue",
        Value::Array(
            inst.expected
                .iter()
                .filter(|r| characteristic_matches(&cli.characteristic, r.characteristic))
                .map(|r| {
                    let mut row = vec![
                        ("quantity", Value::from(r.quantity)),
                        (
                            "value",
                            if r.is_exact() {
                                Value::from(r.lo)
                            } else {
                                obj(vec![
                                    ("lower", Value::from(r.lo)),
                                    ("upper", Value::from(r.hi)),
                                ])
                            },
                        ),
                        ("characteristic", Value::from(r.characteristic.to_string())),
                        ("source", Value::from("catalogue")),
                    ];
                    if r.disputed {
                        row.push(("disputed", Value::from(true)));
                    }
                    obj(row)
                })
                .collect(),
        ),
    ));
    if let Some(g) = &inst.generators {
        fields.push(("recorded_generators", vectors(&g.vectors)));
    }
    if let Some(g) = &inst.graver {
        fields.push(("recorded_graver", vectors(g)));
    }
    fields.push((
        "catalogue_version",
        Value::from(families::CATALOGUE_VERSION),
    ));
    Ok(obj(fields))
}

fn verify_report(cli: &Cli, budget: &Budget) -> Result<(Value, bool), Failure> {
    let checks = verify::run_all(budget)?;
    let ok = verify::all_pass(&checks);
    let mut fields = head(cli, "verify-paper", Value::Null);
    fields.push((
        "passed",
        Value::from(checks.iter().filter(|c| c.pass).count()),
    ));
    fields.push((
        "failed",
        Value::from(checks.iter().filter(|c| !c.pass).count()),
    ));
    fields.push((
        "checks",
        Value::Array(
            checks
                .iter()
                .map(|c| {
                    obj(vec![
                        ("name", Value::from(c.name.clone())),
                        ("pass", Value::from(c.pass)),
                        ("detail", Value::from(c.detail.clone())),
                    ])
                })
                .collect(),
        ),
    ));
    fields.push((
        "catalogue_version",
        Value::from(families::CATALOGUE_VERSION),
    ));
    Ok((obj(fields), ok))
}
