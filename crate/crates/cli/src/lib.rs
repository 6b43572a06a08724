//! `cliquelab` command line.
//!
//! Exit status: 0 on success, 1 on a usage error, 2 when an input file cannot
//! be read or parsed (or is too large for the oracle).

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use cliquelab::experiment::{self, load_instance, load_instances, Experiment, ExperimentError, Instance};
use cliquelab::{
    brute_force_omega, compare_variants, find_all_misleading_vertices, find_misleading_vertex,
    greedy_colour_vertexwise, make_ordering, random_graph, solve, to_dimacs, BitSet, Graph, OrderingPolicy,
    SearchConfig, SearchError, Variant,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "cliquelab",
    version,
    about = "Maximum clique search with greedy-colouring bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Find a maximum clique.
    Solve {
        file: PathBuf,
        #[arg(long, value_enum)]
        variant: Option<VariantArg>,
        #[command(flatten)]
        order: OrderArg,
        /// Worker threads; more than one selects the parallel search.
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long)]
        json: bool,
    },
    /// Greedy colouring in the chosen order.
    Colour {
        file: PathBuf,
        #[command(flatten)]
        order: OrderArg,
        /// Delete the vertex with this label before colouring (repeatable).
        #[arg(long = "delete", value_name = "LABEL")]
        delete: Vec<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Run both variants and compare node counts.
    Compare {
        file: PathBuf,
        #[command(flatten)]
        order: OrderArg,
        #[arg(long)]
        json: bool,
    },
    /// Find a vertex whose deletion makes greedy colouring use more colours.
    Detect {
        file: PathBuf,
        #[command(flatten)]
        order: OrderArg,
        /// Report every such vertex instead of the first.
        #[arg(long)]
        all: bool,
        #[arg(long)]
        json: bool,
    },
    /// Write a seeded G(n, p) graph in DIMACS format.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        seed: u64,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Exact clique number by exhaustive enumeration.
    Oracle {
        file: PathBuf,
        #[arg(long, default_value_t = cliquelab::search::DEFAULT_ORACLE_LIMIT)]
        limit: usize,
        #[arg(long)]
        json: bool,
    },
    /// Compare both variants over a set of instances and write CSV.
    Experiment(ExperimentArgs),
}

#[derive(Args, Debug)]
struct ExperimentArgs {
    /// DIMACS instance files.
    files: Vec<PathBuf>,
    /// Add a random suite of G(n, p) graphs with this many vertices.
    #[arg(long, requires_all = ["random_p", "seeds"])]
    random_n: Option<usize>,
    #[arg(long)]
    random_p: Option<f64>,
    /// Seed range for the random suite, `A..B` (end exclusive).
    #[arg(long, value_parser = parse_seed_range)]
    seeds: Option<std::ops::Range<u64>>,
    #[command(flatten)]
    order: OrderArg,
    /// Fill the elapsed_ms column (makes the CSV vary between runs).
    #[arg(long)]
    timing: bool,
    /// Write the CSV here instead of standard output.
    #[arg(short = 'o', long = "output")]
    output: Option<PathBuf>,
    /// Also write the summary as JSON to this file.
    #[arg(long)]
    summary: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct OrderArg {
    #[arg(long = "order", value_enum, default_value_t = OrderChoice::Natural)]
    order: OrderChoice,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OrderChoice {
    Natural,
    Degree,
}

impl From<&OrderArg> for OrderingPolicy {
    fn from(arg: &OrderArg) -> Self {
        match arg.order {
            OrderChoice::Natural => OrderingPolicy::Natural,
            OrderChoice::Degree => OrderingPolicy::DegreeDesc,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum VariantArg {
    Baseline,
    Inherited,
}

fn parse_seed_range(s: &str) -> Result<std::ops::Range<u64>, String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("expected A..B, got `{s}`"))?;
    let start = a.parse::<u64>().map_err(|e| format!("bad range start: {e}"))?;
    let end = b.parse::<u64>().map_err(|e| format!("bad range end: {e}"))?;
    if end < start {
        return Err(format!("empty seed range `{s}`"));
    }
    Ok(start..end)
}

enum Failure {
    Usage(String),
    Input(String),
}

impl From<ExperimentError> for Failure {
    fn from(e: ExperimentError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<SearchError> for Failure {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::OracleTooLarge { .. } => Failure::Input(e.to_string()),
            SearchError::InvalidConfig(_) => Failure::Usage(e.to_string()),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => EXIT_USAGE,
            };
        }
    };
    match execute(cli.command, out, err) {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
    }
}

fn load(path: &Path, err: &mut dyn Write) -> Result<Graph, Failure> {
    let (instance, warnings) = load_instance(path)?;
    for w in warnings {
        writeln!(err, "warning: {}: {w}", path.display())?;
    }
    Ok(instance.graph)
}

fn braces(labels: &[usize]) -> String {
    let inner: Vec<String> = labels.iter().map(usize::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

fn brackets(labels: &[usize]) -> String {
    let inner: Vec<String> = labels.iter().map(usize::to_string).collect();
    format!("[{}]", inner.join(","))
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Solve {
            file,
            variant,
            order,
            threads,
            json,
        } => {
            let g = load(&file, err)?;
            // inherited is the default for parallel runs
            let variant = match variant {
                Some(VariantArg::Baseline) => Variant::Baseline,
                Some(VariantArg::Inherited) => Variant::Inherited,
                None if threads > 1 => Variant::Inherited,
                None => Variant::Baseline,
            };
            let cfg = SearchConfig::new(variant, (&order).into()).with_threads(threads);
            let outcome = solve(&g, &cfg)?;
            if json {
                let value = json!({
                    "instance": file.display().to_string(),
                    "n": g.n(),
                    "m": g.edge_count(),
                    "variant": variant,
                    "threads": threads,
                    "omega": outcome.omega,
                    "clique": outcome.clique_labels,
                    "nodes": outcome.nodes,
                    "misleading_events": outcome.misleading_events,
                    "would_be_events": outcome.would_be_events,
                    "max_depth": outcome.max_depth,
                    "per_depth": outcome.per_depth,
                    "elapsed_ms": outcome.elapsed.as_secs_f64() * 1000.0,
                });
                writeln!(out, "{value}")?;
            } else {
                writeln!(
                    out,
                    "omega={} clique={} nodes={} events={}",
                    outcome.omega,
                    braces(&outcome.clique_labels),
                    outcome.nodes,
                    outcome.misleading_events
                )?;
            }
        }
        Command::Colour {
            file,
            order,
            delete,
            json,
        } => {
            let g = load(&file, err)?;
            let mut domain = BitSet::full(g.n());
            for label in &delete {
                let v = (0..g.n())
                    .find(|&v| g.label(v) == *label)
                    .ok_or_else(|| Failure::Input(format!("no vertex labelled {label}")))?;
                domain.remove(v);
            }
            let ordering = make_ordering(&g, (&order).into());
            let colouring = greedy_colour_vertexwise(&g, &domain, &ordering);
            let classes = colouring.labelled_classes(&g);
            if json {
                let value = json!({
                    "num_colours": colouring.num_colours(),
                    "classes": classes,
                    "deleted": delete,
                });
                writeln!(out, "{value}")?;
            } else {
                let rendered: Vec<String> = classes.iter().map(|c| brackets(c)).collect();
                writeln!(out, "{} colours: {}", colouring.num_colours(), rendered.join(" "))?;
            }
        }
        Command::Compare { file, order, json } => {
            let g = load(&file, err)?;
            let cfg = SearchConfig::new(Variant::Baseline, (&order).into());
            let report = compare_variants(&file.display().to_string(), &g, &cfg)?;
            if json {
                writeln!(out, "{}", serde_json::to_string(&report).expect("report serialises"))?;
            } else {
                for o in [&report.baseline, &report.inherited] {
                    let name = if std::ptr::eq(o, &report.baseline) {
                        "baseline"
                    } else {
                        "inherited"
                    };
                    writeln!(
                        out,
                        "{name}: omega={} clique={} nodes={} events={} would_be_events={}",
                        o.omega,
                        braces(&o.clique_labels),
                        o.nodes,
                        o.misleading_events,
                        o.would_be_events
                    )?;
                }
                writeln!(
                    out,
                    "omega_equal={} nodes_equal={} nodes_delta={}",
                    report.omega_equal, report.nodes_equal, report.nodes_delta
                )?;
            }
        }
        Command::Detect { file, order, all, json } => {
            let g = load(&file, err)?;
            let ordering = make_ordering(&g, (&order).into());
            let witnesses = if all {
                find_all_misleading_vertices(&g, &ordering)
            } else {
                find_misleading_vertex(&g, &ordering).into_iter().collect()
            };
            let labelled: Vec<_> = witnesses
                .iter()
                .map(|w| (g.label(w.vertex), w.colours_before, w.colours_after))
                .collect();
            if json {
                let items: Vec<_> = labelled
                    .iter()
                    .map(|&(vertex, before, after)| {
                        json!({ "vertex": vertex, "colours_before": before, "colours_after": after })
                    })
                    .collect();
                let value = if all {
                    serde_json::Value::Array(items)
                } else {
                    items.into_iter().next().unwrap_or(serde_json::Value::Null)
                };
                writeln!(out, "{value}")?;
            } else if labelled.is_empty() {
                writeln!(out, "no misleading vertex")?;
            } else {
                for (vertex, before, after) in labelled {
                    writeln!(out, "vertex {vertex}: {before} -> {after} colours")?;
                }
            }
        }
        Command::Gen { n, p, seed, output } => {
            let g = random_graph(n, p, seed).map_err(|e| Failure::Usage(e.to_string()))?;
            let text = format!("{}\n", to_dimacs(&g));
            match output {
                Some(path) => {
                    std::fs::write(&path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?
                }
                None => out.write_all(text.as_bytes())?,
            }
        }
        Command::Oracle { file, limit, json } => {
            let g = load(&file, err)?;
            let (size, clique) = brute_force_omega(&g, limit)?;
            let mut labels: Vec<usize> = clique.iter().map(|&v| g.label(v)).collect();
            labels.sort_unstable();
            if json {
                writeln!(out, "{}", json!({ "omega": size, "clique": labels }))?;
            } else {
                writeln!(out, "omega={size} clique={}", braces(&labels))?;
            }
        }
        Command::Experiment(args) => run_experiment_command(args, out, err)?,
    }
    Ok(())
}

fn run_experiment_command(args: ExperimentArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    let mut instances: Vec<Instance> = load_instances(&args.files)?;
    if let (Some(n), Some(p), Some(seeds)) = (args.random_n, args.random_p, args.seeds.clone()) {
        instances.extend(experiment::random_suite(n, p, seeds).map_err(|e| Failure::Usage(e.to_string()))?);
    }
    let cfg = SearchConfig::new(Variant::Baseline, (&args.order).into());
    let exp: Experiment = experiment::run_experiment(&instances, &cfg)?;
    let csv = exp.to_csv(args.timing)?;
    match &args.output {
        Some(path) => std::fs::write(path, &csv).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?,
        None => out.write_all(csv.as_bytes())?,
    }
    if let Some(path) = &args.summary {
        let text = serde_json::to_string_pretty(&exp.summary).expect("summary serialises");
        std::fs::write(path, text + "\n").map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    }
    let s = &exp.summary;
    writeln!(
        err,
        "{} instances, {} with misleading events ({} events), {} with fewer nodes under the inherited bound, nodes equal on {:.1}%",
        s.instances,
        s.instances_with_events,
        s.events_total,
        s.instances_with_nodes_delta,
        100.0 * s.nodes_equal_fraction
    )?;
    Ok(())
}
