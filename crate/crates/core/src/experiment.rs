//! Baseline-versus-inherited experiments over instance sets.

use std::path::{Path, PathBuf};

use serde::Serialize;
use thiserror::Error;

use crate::dimacs::{parse_dimacs, DimacsWarning};
use crate::error::{DimacsError, GraphError, SearchError};
use crate::graph::{random_graph, Graph};
use crate::search::{compare_variants, ComparisonReport, SearchConfig, SearchOutcome, Variant};

/// Column order of the experiment CSV.
pub const CSV_HEADER: [&str; 8] = [
    "instance",
    "n",
    "m",
    "variant",
    "omega",
    "nodes",
    "events",
    "elapsed_ms",
];

#[derive(Debug, Error)]
pub enum ExperimentError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse {
        path: PathBuf,
        #[source]
        source: DimacsError,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error("writing CSV: {0}")]
    Csv(#[from] csv::Error),
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub id: String,
    pub graph: Graph,
}

/// Reads a DIMACS file. The instance id is the file name.
pub fn load_instance(path: &Path) -> Result<(Instance, Vec<DimacsWarning>), ExperimentError> {
    let bytes = std::fs::read(path).map_err(|source| ExperimentError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let parsed = parse_dimacs(&bytes).map_err(|source| ExperimentError::Parse {
        path: path.to_path_buf(),
        source,
    })?;
    let id = path
        .file_name()
        .map(|f| f.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string());
    Ok((
        Instance {
            id,
            graph: parsed.graph,
        },
        parsed.warnings,
    ))
}

/// Loads every file or fails on the first one that does not parse.
pub fn load_instances<P: AsRef<Path>>(paths: &[P]) -> Result<Vec<Instance>, ExperimentError> {
    paths
        .iter()
        .map(|p| load_instance(p.as_ref()).map(|(instance, _)| instance))
        .collect()
}

/// `G(n, p)` instances for each seed, named `gnp-<n>-<p>-s<seed>`.
pub fn random_suite(n: usize, p: f64, seeds: impl IntoIterator<Item = u64>) -> Result<Vec<Instance>, ExperimentError> {
    seeds
        .into_iter()
        .map(|seed| {
            Ok(Instance {
                id: format!("gnp-{n}-{p}-s{seed}"),
                graph: random_graph(n, p, seed)?,
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExperimentRow {
    pub instance: String,
    pub n: usize,
    pub m: usize,
    pub variant: Variant,
    pub omega: usize,
    pub nodes: u64,
    pub misleading_events: u64,
    pub elapsed_ms: f64,
}

impl ExperimentRow {
    fn new(instance: &Instance, variant: Variant, outcome: &SearchOutcome) -> Self {
        Self {
            instance: instance.id.clone(),
            n: instance.graph.n(),
            m: instance.graph.edge_count(),
            variant,
            omega: outcome.omega,
            nodes: outcome.nodes,
            misleading_events: outcome.misleading_events,
            elapsed_ms: outcome.elapsed.as_secs_f64() * 1000.0,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct ExperimentSummary {
    pub instances: usize,
    pub instances_with_events: usize,
    pub instances_with_nodes_delta: usize,
    pub instances_nodes_equal: usize,
    pub nodes_equal_fraction: f64,
    pub omega_mismatches: usize,
    /// Misleading events in the inherited runs.
    pub events_total: u64,
    /// Would-be events recorded by the baseline runs.
    pub baseline_would_be_events_total: u64,
    pub baseline_nodes_total: u64,
    pub inherited_nodes_total: u64,
    pub nodes_delta_total: i64,
    pub bound_violations_total: u64,
    /// Instances with no misleading event whose node counts still differ.
    pub zero_event_mismatches: usize,
    /// Instances where the inherited variant expanded more nodes.
    pub negative_deltas: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Experiment {
    pub rows: Vec<ExperimentRow>,
    pub summary: ExperimentSummary,
    #[serde(skip)]
    pub reports: Vec<ComparisonReport>,
}

impl Experiment {
    /// CSV with [`CSV_HEADER`]. Without `timing` the elapsed column is left
    /// empty so repeated runs give identical bytes.
    pub fn to_csv(&self, timing: bool) -> Result<String, ExperimentError> {
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer.write_record(CSV_HEADER)?;
        for row in &self.rows {
            let elapsed = if timing {
                format!("{:.3}", row.elapsed_ms)
            } else {
                String::new()
            };
            writer.write_record([
                row.instance.clone(),
                row.n.to_string(),
                row.m.to_string(),
                row.variant.to_string(),
                row.omega.to_string(),
                row.nodes.to_string(),
                row.misleading_events.to_string(),
                elapsed,
            ])?;
        }
        let bytes = writer.into_inner().map_err(|e| csv::Error::from(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("CSV built from UTF-8 fields"))
    }
}

pub fn summarise(reports: &[ComparisonReport]) -> ExperimentSummary {
    let mut s = ExperimentSummary {
        instances: reports.len(),
        ..ExperimentSummary::default()
    };
    for r in reports {
        let events = r.inherited.misleading_events;
        s.instances_with_events += usize::from(events > 0);
        s.instances_with_nodes_delta += usize::from(r.nodes_delta > 0);
        s.instances_nodes_equal += usize::from(r.nodes_equal);
        s.omega_mismatches += usize::from(!r.omega_equal);
        s.events_total += events;
        s.baseline_would_be_events_total += r.baseline.would_be_events;
        s.baseline_nodes_total += r.baseline.nodes;
        s.inherited_nodes_total += r.inherited.nodes;
        s.nodes_delta_total += r.nodes_delta;
        s.bound_violations_total += r.inherited.bound_violations + r.baseline.bound_violations;
        s.zero_event_mismatches += usize::from(events == 0 && !r.nodes_equal);
        s.negative_deltas += usize::from(r.nodes_delta < 0);
    }
    s.nodes_equal_fraction = if reports.is_empty() {
        1.0
    } else {
        s.instances_nodes_equal as f64 / reports.len() as f64
    };
    s
}

/// Compares both variants on every instance, sequentially and in order.
pub fn run_experiment(instances: &[Instance], cfg: &SearchConfig) -> Result<Experiment, ExperimentError> {
    let mut rows = Vec::with_capacity(2 * instances.len());
    let mut reports = Vec::with_capacity(instances.len());
    for instance in instances {
        let report = compare_variants(&instance.id, &instance.graph, cfg)?;
        rows.push(ExperimentRow::new(instance, Variant::Baseline, &report.baseline));
        rows.push(ExperimentRow::new(instance, Variant::Inherited, &report.inherited));
        reports.push(report);
    }
    Ok(Experiment {
        rows,
        summary: summarise(&reports),
        reports,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn figures() -> Vec<Instance> {
        vec![
            Instance {
                id: "fig1.clq".into(),
                graph: fixtures::figure1(),
            },
            Instance {
                id: "fig2.clq".into(),
                graph: fixtures::figure2(),
            },
        ]
    }

    #[test]
    fn figure_instances_give_four_rows() {
        let exp = run_experiment(&figures(), &SearchConfig::default()).unwrap();
        assert_eq!(exp.rows.len(), 4);
        let omegas: Vec<usize> = exp.rows.iter().map(|r| r.omega).collect();
        assert_eq!(omegas, vec![4, 4, 2, 2]);
        assert_eq!(exp.summary.instances, 2);
        assert_eq!(exp.summary.omega_mismatches, 0);
    }

    #[test]
    fn empty_instance_list_is_header_only() {
        let exp = run_experiment(&[], &SearchConfig::default()).unwrap();
        assert_eq!(
            exp.to_csv(false).unwrap(),
            "instance,n,m,variant,omega,nodes,events,elapsed_ms\n"
        );
        assert_eq!(exp.summary.instances, 0);
    }

    #[test]
    fn csv_without_timing_is_reproducible() {
        let a = run_experiment(&figures(), &SearchConfig::default()).unwrap();
        let b = run_experiment(&figures(), &SearchConfig::default()).unwrap();
        let csv = a.to_csv(false).unwrap();
        assert_eq!(csv, b.to_csv(false).unwrap());
        assert!(csv.lines().nth(1).unwrap().starts_with("fig1.clq,9,17,baseline,4,"));
        assert!(csv.lines().nth(1).unwrap().ends_with(','));
    }

    #[test]
    fn load_errors_name_the_file() {
        let dir = std::env::temp_dir().join(format!("cliquelab-exp-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let bad = dir.join("bad.clq");
        std::fs::write(&bad, "p edge 2 1\ne 1 3\n").unwrap();
        let err = load_instances(&[&bad]).unwrap_err().to_string();
        assert!(err.contains("bad.clq") && err.contains("line 2"), "{err}");
        let missing = load_instances(&[dir.join("missing.clq")]).unwrap_err().to_string();
        assert!(missing.contains("missing.clq"));
        std::fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn random_suite_names() {
        let suite = random_suite(10, 0.5, 3..5).unwrap();
        assert_eq!(suite[0].id, "gnp-10-0.5-s3");
        assert_eq!(suite[1].graph, random_graph(10, 0.5, 4).unwrap());
    }
}
