use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use homstar::graph::{cartesian_product, categorical_product, dismantle, smash_product, Graph, GraphFile, PointedGraph};
use homstar::hom::{build_hom, build_hom_star};
use homstar::loops::{loop_component_group, LoopGraph};
use homstar::report::{HomReport, Instance, LoopReport, VerificationReport};
use homstar::verify::{run_check, run_instance, VerifyOptions};
use homstar::Execution;
use serde_json::{json, Value};

/// Largest loop graph turned into an explicit graph for `loop --depth 2`.
const DEPTH_TWO_LIMIT: usize = 4096;

#[derive(Parser)]
#[command(name = "homstar", version, about = "Pointed Hom complexes, x-homotopy and loop graphs")]
struct Cli {
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Categorical,
    Cartesian,
    Smash,
}

#[derive(Subcommand)]
enum Command {
    /// Poset statistics and invariants of Hom_*(G, H), or Hom(G, H).
    Hom {
        g: PathBuf,
        h: PathBuf,
        /// Ignore basepoints and build Hom(G, H).
        #[arg(long)]
        unpointed: bool,
    },
    /// Run a named property check.
    Verify {
        check: String,
        #[arg(long)]
        size: Option<usize>,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        /// Re-run a single instance saved from a report's counterexample.
        #[arg(long)]
        instance: Option<PathBuf>,
    },
    /// Components and concatenation group of the loop graph.
    Loop {
        g: PathBuf,
        #[arg(long)]
        bound: usize,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
        depth: u8,
    },
    /// Fold greedily down to a stiff core.
    Fold { g: PathBuf },
    /// Product of two graphs as a graph file.
    Product {
        g: PathBuf,
        h: PathBuf,
        #[arg(long, value_enum)]
        kind: Kind,
    },
}

fn read_graph_file(path: &Path) -> Result<GraphFile> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    GraphFile::parse(&text).with_context(|| format!("{}: invalid graph file", path.display()))
}

fn read_graph(path: &Path) -> Result<Graph> {
    read_graph_file(path)?.to_graph().with_context(|| format!("{}: invalid graph", path.display()))
}

fn read_pointed(path: &Path) -> Result<PointedGraph> {
    read_graph_file(path)?.to_pointed().with_context(|| format!("{}: invalid pointed graph", path.display()))
}

/// Report value plus whether every contained check passed.
fn execute(cli: &Cli) -> Result<(Value, bool)> {
    match &cli.command {
        Command::Hom { g, h, unpointed } => {
            let p = if *unpointed {
                build_hom(&read_graph(g)?, &read_graph(h)?)?
            } else {
                build_hom_star(&read_pointed(g)?, &read_pointed(h)?)?
            };
            Ok((serde_json::to_value(HomReport::of(&p, true)?)?, true))
        }
        Command::Verify { check, size, trials, n, instance } => {
            let reports: Vec<VerificationReport> = match instance {
                Some(path) => {
                    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
                    let inst: Instance =
                        serde_json::from_str(&text).with_context(|| format!("{}: invalid instance", path.display()))?;
                    vec![run_instance(check, &inst)?]
                }
                None => {
                    let opts = VerifyOptions {
                        size: *size,
                        trials: *trials,
                        n: *n,
                        seed: cli.seed,
                        exec: Execution::default(),
                    };
                    run_check(check, &opts)?
                }
            };
            let ok = reports.iter().all(VerificationReport::passed);
            Ok((serde_json::to_value(reports)?, ok))
        }
        Command::Loop { g, bound, depth } => {
            if *bound == 0 {
                bail!("--bound must be at least 1");
            }
            let mut g = read_pointed(g)?;
            if *depth == 2 {
                g = LoopGraph::new(&g, *bound)?.looped_subgraph(DEPTH_TWO_LIMIT)?.0;
            }
            let group = loop_component_group(&g, *bound)?;
            let report = LoopReport::of(&group, *depth as usize);
            let ok = group.laws.holds();
            Ok((serde_json::to_value(report)?, ok))
        }
        Command::Fold { g } => {
            let input = read_pointed(g)?;
            let d = dismantle(&input);
            let graph = input.graph();
            let retraction: Vec<[&str; 2]> = (0..graph.vertex_count())
                .map(|v| [graph.label(v), d.core.graph().label(d.retraction.apply(v))])
                .collect();
            let report = json!({
                "folds": d.folds,
                "core": GraphFile::from_pointed(&d.core),
                "retraction": retraction,
            });
            Ok((report, true))
        }
        Command::Product { g, h, kind } => {
            let file = match kind {
                Kind::Categorical => GraphFile::from_graph(&categorical_product(&read_graph(g)?, &read_graph(h)?)),
                Kind::Cartesian => GraphFile::from_graph(&cartesian_product(&read_graph(g)?, &read_graph(h)?)),
                Kind::Smash => GraphFile::from_pointed(&smash_product(&read_pointed(g)?, &read_pointed(h)?).graph),
            };
            Ok((serde_json::to_value(file)?, true))
        }
    }
}

/// `key: value` lines for the text format, nested keys joined with dots.
fn render_text(v: &Value, prefix: &str, out: &mut String) {
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                render_text(x, &key, out);
            }
        }
        Value::Array(items) if items.iter().any(|x| x.is_object()) => {
            for (i, x) in items.iter().enumerate() {
                render_text(x, &format!("{prefix}[{i}]"), out);
            }
        }
        _ => {
            out.push_str(prefix);
            out.push_str(": ");
            out.push_str(&v.to_string());
            out.push('\n');
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (value, ok) = match execute(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let text = match cli.format {
        Format::Json => serde_json::to_string_pretty(&value).expect("reports serialise") + "\n",
        Format::Text => {
            let mut s = String::new();
            render_text(&value, "", &mut s);
            s
        }
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = fs::write(path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
