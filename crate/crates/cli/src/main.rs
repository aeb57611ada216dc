//! `e0graph`: build excess-zero graphs of Coxeter groups and check their
//! properties from the command line.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use e0graph_core::dn::{classify_dn_coset_rep, dn_coset_representatives};
use e0graph_core::export;
use e0graph_core::infinite::{
    ball_graph_diameter_evidence, product_diameter_check, BallGraph, GeometricGroup, DEFAULT_SEARCH_MARGIN,
};
use e0graph_core::pendant::PendantReport;
use e0graph_core::symn::{delta, delta_bruteforce};
use e0graph_core::verify::{Status, Verifier, CHECK_NAMES};
use e0graph_core::{excess, CoxeterSystem, E0Graph, FiniteGroup, GroupSpec, InvolutionSet, Side, Word};

#[derive(Parser, Debug)]
#[command(name = "e0graph", version, about = "Excess-zero graphs of Coxeter groups")]
struct Cli {
    /// Group label such as A5, I2(7), U3, A1xA1, or a path to a JSON matrix.
    #[arg(short, long, global = true)]
    group: Option<String>,

    /// Write the main output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Include the large groups (H4, E6) in verification.
    #[arg(long, global = true)]
    heavy: bool,

    /// Ball radius for infinite groups.
    #[arg(long, global = true)]
    radius: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Dot,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Valency distribution in dotted `i^k` notation.
    Valency {
        #[arg(value_name = "GROUP")]
        label: Option<String>,
    },
    /// Vertex, edge and component summary of the graph.
    Graph {
        #[arg(value_name = "GROUP")]
        label: Option<String>,
    },
    /// Write the graph (json, dot) or its distribution (csv).
    Export {
        #[arg(value_name = "GROUP")]
        label: Option<String>,
    },
    /// Components and the diameter of the part avoiding w0.
    Diameter {
        #[arg(value_name = "GROUP")]
        label: Option<String>,
    },
    /// Computed and predicted pendant elements.
    Pendant {
        #[arg(value_name = "GROUP")]
        label: Option<String>,
    },
    /// Excess of the element spelled by a word, e.g. `[1,2,1]`.
    Excess {
        /// Word in 1-based generator labels.
        word: String,
        #[arg(value_name = "GROUP")]
        label: Option<String>,
    },
    /// δ(m, n) from the recursion.
    Delta {
        m: usize,
        n: usize,
        /// Also compute the valency in Sym(n) directly and compare.
        #[arg(long)]
        oracle: bool,
    },
    /// Diameter evidence for an infinite group from a ball of words.
    Ball {
        #[arg(value_name = "GROUP")]
        label: Option<String>,
        /// Extra radius searched for common neighbours.
        #[arg(long, default_value_t = DEFAULT_SEARCH_MARGIN)]
        margin: usize,
        /// Also write the ball graph as JSON to this path.
        #[arg(long)]
        graph: Option<PathBuf>,
    },
    /// Run a named check, or `all`.
    Verify { check: String },
    /// Distinguished coset representatives of a maximal parabolic subgroup.
    Cosets {
        #[arg(value_name = "GROUP")]
        label: Option<String>,
        /// Generator left out of the parabolic (default: the last).
        #[arg(long)]
        drop: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn parse_group(text: &str) -> Result<GroupSpec> {
    if text.ends_with(".json") {
        let body = fs::read_to_string(text).with_context(|| format!("reading {text}"))?;
        return Ok(GroupSpec::from_matrix_json(&body)?);
    }
    Ok(GroupSpec::parse(text)?)
}

fn group_arg(cli: &Cli, positional: &Option<String>) -> Result<GroupSpec> {
    match positional.as_ref().or(cli.group.as_ref()) {
        Some(text) => parse_group(text),
        None => bail!("no group given; pass it positionally or with --group"),
    }
}

fn finite_group(spec: &GroupSpec) -> Result<FiniteGroup> {
    if !spec.is_finite() {
        bail!("{spec} is infinite; use `ball --radius L` to explore it");
    }
    Ok(FiniteGroup::new(spec)?)
}

fn emit(cli: &Cli, text: &str) -> Result<()> {
    match &cli.out {
        Some(path) => write_file(path, text),
        None => {
            let mut stdout = io::stdout().lock();
            let written = stdout.write_all(text.as_bytes()).and_then(|()| {
                if text.ends_with('\n') {
                    Ok(())
                } else {
                    stdout.write_all(b"\n")
                }
            });
            match written {
                // A closed pipe (e.g. `| head`) is not an error for a report.
                Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(e.into()),
                _ => Ok(()),
            }
        }
    }
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn json<T: serde::Serialize + ?Sized>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)?)
}

fn run(cli: &Cli) -> Result<ExitCode> {
    let format = cli.format.unwrap_or(Format::Text);
    match &cli.command {
        Command::Valency { label } => {
            let g = finite_group(&group_arg(cli, label)?)?;
            let dist = E0Graph::build(&g).valency_distribution();
            let text = match format {
                Format::Text => dist.to_string(),
                Format::Csv => dist.to_csv(),
                Format::Json => json(&dist.pairs())?,
                Format::Dot => bail!("dot output is for graphs; use `export --format dot`"),
            };
            emit(cli, &text)?;
        }
        Command::Graph { label } => {
            let g = finite_group(&group_arg(cli, label)?)?;
            let graph = E0Graph::build(&g);
            match format {
                Format::Json => emit(cli, &export::graph_json(&graph))?,
                Format::Dot => emit(cli, &export::graph_dot(&graph))?,
                Format::Csv => emit(cli, &graph.valency_distribution().to_csv())?,
                Format::Text => {
                    let comps = graph.components();
                    let text = format!(
                        "group {}\norder {}\ninvolutions {}\nedges {}\ncomponents {}\nvalencies {}\n",
                        g.spec(),
                        g.order(),
                        graph.vertex_count(),
                        graph.edge_count(),
                        comps.len(),
                        graph.valency_distribution()
                    );
                    emit(cli, &text)?;
                }
            }
        }
        Command::Export { label } => {
            let g = finite_group(&group_arg(cli, label)?)?;
            let graph = E0Graph::build(&g);
            let text = match format {
                Format::Json | Format::Text => export::graph_json(&graph),
                Format::Dot => export::graph_dot(&graph),
                Format::Csv => export::distribution_csv(&graph.valency_distribution()),
            };
            emit(cli, &text)?;
        }
        Command::Diameter { label } => {
            let g = finite_group(&group_arg(cli, label)?)?;
            let graph = E0Graph::build(&g);
            let (comps, d) = graph.components_and_diameter()?;
            let sizes: Vec<usize> = comps.iter().map(Vec::len).collect();
            let text = match format {
                Format::Json => json(&serde_json::json!({
                    "group": g.spec().to_string(),
                    "component_sizes": sizes,
                    "diameter": d,
                }))?,
                _ => format!("components {sizes:?}\ndiameter {d}\n"),
            };
            emit(cli, &text)?;
        }
        Command::Pendant { label } => {
            let g = finite_group(&group_arg(cli, label)?)?;
            let report = PendantReport::new(&g, &E0Graph::build(&g))?;
            let text = match format {
                Format::Json => json(&report)?,
                _ => {
                    let list = |ws: &[Word]| ws.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
                    format!(
                        "computed  {}\npredicted {}\nmatch {}\n",
                        list(&report.computed),
                        list(&report.predicted),
                        report.matches
                    )
                }
            };
            emit(cli, &text)?;
            if !report.matches {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Excess { word, label } => {
            let g = finite_group(&group_arg(cli, label)?)?;
            let w = g.element_from_word(&word.parse::<Word>()?)?;
            let e = excess(&g, &InvolutionSet::enumerate(&g), &w);
            emit(cli, &format!("{e}\n"))?;
        }
        Command::Delta { m, n, oracle } => {
            let value = delta(*m, *n)?;
            let mut text = format!("delta({m},{n}) = {value}\n");
            let mut matched = true;
            if *oracle {
                let brute = delta_bruteforce(*m, *n)?;
                matched = brute as u128 == value;
                text.push_str(&format!("brute force = {brute}\nmatch {matched}\n"));
            }
            emit(cli, &text)?;
            if !matched {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Ball { label, margin, graph } => {
            let spec = group_arg(cli, label)?;
            let radius = cli.radius.unwrap_or(4);
            if let Some(path) = graph {
                let ball = BallGraph::build(&GeometricGroup::new(&spec), radius)?;
                write_file(path, &export::ball_graph_json(&ball))?;
            }
            let text = match &spec {
                GroupSpec::Product(factors) => json(&product_diameter_check(factors, radius, *margin)?)?,
                _ => json(&ball_graph_diameter_evidence(&GeometricGroup::new(&spec), radius, *margin)?)?,
            };
            emit(cli, &text)?;
        }
        Command::Verify { check } => {
            let names: Vec<&str> = if check == "all" { CHECK_NAMES.to_vec() } else { vec![check.as_str()] };
            let mut verifier = Verifier::new(cli.heavy).with_progress(|msg| eprintln!("  {msg}"));
            let mut reports = Vec::new();
            for name in names {
                eprintln!("running {name}");
                reports.push(verifier.run(name)?);
            }
            let text = match format {
                Format::Json => json(&reports)?,
                _ => {
                    let mut out = String::new();
                    for r in &reports {
                        out.push_str(&format!(
                            "{}: {} ({} passed, {} failed, {} skipped)\n",
                            r.check,
                            r.status,
                            r.count(Status::Pass),
                            r.count(Status::Fail),
                            r.count(Status::Skipped)
                        ));
                        for d in &r.details {
                            out.push_str(&format!("  [{}] {}", d.status, d.claim));
                            if d.status == Status::Fail {
                                out.push_str(&format!(" — expected {}, got {}", d.expected, d.actual));
                            }
                            out.push('\n');
                        }
                    }
                    out
                }
            };
            emit(cli, &text)?;
            if reports.iter().any(|r| !r.passed()) {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Cosets { label, drop } => {
            let g = finite_group(&group_arg(cli, label)?)?;
            let n = g.rank();
            let dropped = drop.unwrap_or(n);
            if dropped == 0 || dropped > n {
                bail!("--drop must be a generator label in 1..={n}");
            }
            let classify = matches!(g.spec(), GroupSpec::D(_)) && dropped == n;
            let mut rows = Vec::new();
            if classify {
                rows.push((Word::empty(), None));
                for x in dn_coset_representatives(&g)? {
                    let f = classify_dn_coset_rep(&g, &x)?;
                    rows.push((g.reduced_word(&x), Some(f)));
                }
            } else {
                let j: Vec<usize> = (1..=n).filter(|&l| l != dropped).collect();
                for x in g.coset_representatives(&j, Side::Right)? {
                    rows.push((g.reduced_word(&x), None));
                }
            }
            let text = match format {
                Format::Json => json(
                    &rows.iter().map(|(w, f)| serde_json::json!({ "word": w, "factorization": f })).collect::<Vec<_>>(),
                )?,
                _ => rows
                    .iter()
                    .map(|(w, f)| match f {
                        Some(f) => format!("{w}  = {} · {}  ({:?})\n", f.a, f.b, f.case),
                        None => format!("{w}\n"),
                    })
                    .collect(),
            };
            emit(cli, &text)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}
