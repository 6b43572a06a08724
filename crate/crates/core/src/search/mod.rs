//! Branch and bound for maximum clique with a greedy-colouring bound.
//!
//! Each node holds the growing clique `C`, the candidate set `P` and an
//! inherited bound `b_in` from its parent. `P` is coloured greedily and its
//! vertices are branched on highest colour first. A vertex of colour `c`
//! cannot lead to more than `|C| + c` vertices, and the loop stops as soon as
//! that cannot beat the incumbent. The inherited variant also caps `c` by
//! `b_in`, so the bound can never grow on the way down the tree.
//!
//! A *misleading event* is a node whose own colour count exceeds `b_in`. The
//! baseline variant still tracks `b_in` and reports these as would-be events
//! without letting them affect pruning.

mod engine;
mod oracle;
mod parallel;

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize, Serializer};

use crate::bitset::BitSet;
use crate::error::SearchError;
use crate::graph::{make_ordering, Graph, OrderingPolicy};
use engine::{Engine, LocalIncumbent};

pub use oracle::{brute_force_omega, DEFAULT_ORACLE_LIMIT};
pub use parallel::solve_parallel;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    /// Bound each node by its own colour count.
    #[default]
    Baseline,
    /// Bound each node by the smaller of its colour count and its parent's bound.
    Inherited,
}

impl Variant {
    pub fn as_str(self) -> &'static str {
        match self {
            Variant::Baseline => "baseline",
            Variant::Inherited => "inherited",
        }
    }
}

impl std::fmt::Display for Variant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// What a node hands down as its children's inherited bound.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundPassing {
    /// `min(c, b_in) - 1` for a branching vertex of colour `c`.
    #[default]
    ColourIndex,
    /// The parent's own bound, `min(k, b_in)`, unchanged.
    ParentCount,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub variant: Variant,
    pub ordering: OrderingPolicy,
    pub threads: usize,
    pub oracle_limit: usize,
    pub bound_passing: BoundPassing,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            variant: Variant::Baseline,
            ordering: OrderingPolicy::Natural,
            threads: 1,
            oracle_limit: DEFAULT_ORACLE_LIMIT,
            bound_passing: BoundPassing::ColourIndex,
        }
    }
}

impl SearchConfig {
    pub fn new(variant: Variant, ordering: OrderingPolicy) -> Self {
        Self {
            variant,
            ordering,
            ..Self::default()
        }
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads;
        self
    }

    pub fn with_variant(mut self, variant: Variant) -> Self {
        self.variant = variant;
        self
    }

    pub fn validate(&self) -> Result<(), SearchError> {
        if self.threads == 0 {
            return Err(SearchError::InvalidConfig("threads must be at least 1".into()));
        }
        if self.oracle_limit == 0 {
            return Err(SearchError::InvalidConfig("oracle limit must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DepthStats {
    /// Vertices appended to reach a clique of this size.
    pub nodes: u64,
    /// Misleading events at nodes whose clique has this size.
    pub misleading_events: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchOutcome {
    pub omega: usize,
    /// Input-graph vertex indices, ascending.
    pub clique: Vec<usize>,
    /// The same clique as original 1-based labels, ascending.
    pub clique_labels: Vec<usize>,
    /// Vertices appended to the growing clique over the whole search.
    pub nodes: u64,
    /// Events that the inherited bound absorbed; always 0 for baseline runs.
    pub misleading_events: u64,
    /// Nodes whose colour count exceeded the inherited bound, whether or not
    /// the variant used that bound.
    pub would_be_events: u64,
    /// Inherited-variant nodes whose bound was not below the parent's.
    pub bound_violations: u64,
    pub max_depth: usize,
    /// Indexed by clique size.
    pub per_depth: Vec<DepthStats>,
    #[serde(rename = "elapsed_ms", serialize_with = "as_millis")]
    pub elapsed: Duration,
}

fn as_millis<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1000.0)
}

impl SearchOutcome {
    /// Compares everything except wall time.
    pub fn same_result(&self, other: &SearchOutcome) -> bool {
        SearchOutcome {
            elapsed: Duration::ZERO,
            ..self.clone()
        } == SearchOutcome {
            elapsed: Duration::ZERO,
            ..other.clone()
        }
    }

    fn assemble(g: &Graph, order: &[usize], best: &[usize], counters: engine::Counters, elapsed: Duration) -> Self {
        let mut clique: Vec<usize> = best.iter().map(|&v| order[v]).collect();
        clique.sort_unstable();
        let mut clique_labels: Vec<usize> = clique.iter().map(|&v| g.label(v)).collect();
        clique_labels.sort_unstable();
        SearchOutcome {
            omega: clique.len(),
            clique,
            clique_labels,
            nodes: counters.nodes,
            misleading_events: counters.misleading_events,
            would_be_events: counters.would_be_events,
            bound_violations: counters.bound_violations,
            max_depth: counters.max_depth,
            per_depth: counters.per_depth,
            elapsed,
        }
    }
}

/// A node as seen by a search observer. Vertex indices refer to the input graph.
#[derive(Clone, Debug)]
pub struct NodeView {
    pub clique: Vec<usize>,
    pub candidates: Vec<usize>,
    /// Greedy colour count of the candidates.
    pub colours: usize,
    pub inherited: usize,
    /// Bound actually used for pruning at this node.
    pub effective: usize,
}

/// Exact maximum clique, single-threaded and deterministic. `cfg.threads` is
/// ignored; see [`solve`] for dispatch.
pub fn solve_max_clique(g: &Graph, cfg: &SearchConfig) -> Result<SearchOutcome, SearchError> {
    run_sequential(g, cfg, None)
}

/// As [`solve_max_clique`], calling `observer` at every coloured node.
pub fn solve_observed(
    g: &Graph,
    cfg: &SearchConfig,
    observer: &mut dyn FnMut(&NodeView),
) -> Result<SearchOutcome, SearchError> {
    run_sequential(g, cfg, Some(observer))
}

/// Sequential when `cfg.threads == 1`, otherwise [`solve_parallel`].
pub fn solve(g: &Graph, cfg: &SearchConfig) -> Result<SearchOutcome, SearchError> {
    cfg.validate()?;
    if cfg.threads == 1 {
        solve_max_clique(g, cfg)
    } else {
        solve_parallel(g, cfg)
    }
}

fn run_sequential(
    g: &Graph,
    cfg: &SearchConfig,
    observer: Option<&mut dyn FnMut(&NodeView)>,
) -> Result<SearchOutcome, SearchError> {
    cfg.validate()?;
    let start = Instant::now();
    let ordering = make_ordering(g, cfg.ordering);
    let order = ordering.order();
    let permuted = g.permuted(order);

    let mut engine = Engine::new(&permuted, order, cfg.variant, cfg.bound_passing);
    engine.observer = observer;
    let mut incumbent = LocalIncumbent::default();
    let mut clique = Vec::new();
    engine.expand(&mut clique, BitSet::full(g.n()), g.n(), None, &mut incumbent);

    Ok(SearchOutcome::assemble(
        g,
        order,
        &incumbent.best,
        engine.counters,
        start.elapsed(),
    ))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComparisonReport {
    pub instance: String,
    pub baseline: SearchOutcome,
    pub inherited: SearchOutcome,
    pub omega_equal: bool,
    pub nodes_equal: bool,
    /// `baseline.nodes - inherited.nodes`.
    pub nodes_delta: i64,
}

/// Runs both variants with the same ordering and compares them.
pub fn compare_variants(instance: &str, g: &Graph, cfg: &SearchConfig) -> Result<ComparisonReport, SearchError> {
    cfg.validate()?;
    if cfg.threads != 1 {
        return Err(SearchError::InvalidConfig(
            "variant comparison needs deterministic node counts; use threads = 1".into(),
        ));
    }
    let baseline = solve_max_clique(g, &cfg.clone().with_variant(Variant::Baseline))?;
    let inherited = solve_max_clique(g, &cfg.clone().with_variant(Variant::Inherited))?;
    let omega_equal = baseline.omega == inherited.omega;
    debug_assert!(omega_equal, "variants disagree on omega");
    Ok(ComparisonReport {
        instance: instance.to_string(),
        omega_equal,
        nodes_equal: baseline.nodes == inherited.nodes,
        nodes_delta: baseline.nodes as i64 - inherited.nodes as i64,
        baseline,
        inherited,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::random_graph;

    #[test]
    fn figure_one_both_variants() {
        let g = fixtures::figure1();
        for variant in [Variant::Baseline, Variant::Inherited] {
            for ordering in [OrderingPolicy::Natural, OrderingPolicy::DegreeDesc] {
                let out = solve_max_clique(&g, &SearchConfig::new(variant, ordering)).unwrap();
                assert_eq!(out.omega, 4);
                assert_eq!(out.clique_labels, vec![1, 3, 6, 8]);
                assert_eq!(out.bound_violations, 0);
            }
        }
    }

    #[test]
    fn degenerate_graphs() {
        let out = solve_max_clique(&Graph::empty(0), &SearchConfig::default()).unwrap();
        assert_eq!((out.omega, out.nodes), (0, 0));
        assert!(out.clique.is_empty());

        let out = solve_max_clique(&Graph::empty(7), &SearchConfig::default()).unwrap();
        assert_eq!(out.omega, 1);
        assert_eq!(out.nodes, 1);

        let out = solve_max_clique(&Graph::complete(5), &SearchConfig::default()).unwrap();
        assert_eq!(out.omega, 5);
        assert_eq!(out.clique, vec![0, 1, 2, 3, 4]);
        assert_eq!(out.nodes, 5);
    }

    #[test]
    fn baseline_never_reports_pruning_events() {
        for seed in 0..30 {
            let g = random_graph(30, 0.5, seed).unwrap();
            let out = solve_max_clique(&g, &SearchConfig::default()).unwrap();
            assert_eq!(out.misleading_events, 0);
            assert_eq!(out.bound_violations, 0);
        }
    }

    #[test]
    fn config_validation() {
        let cfg = SearchConfig::default().with_threads(0);
        assert!(solve(&Graph::complete(3), &cfg).is_err());
        let cfg = SearchConfig {
            oracle_limit: 0,
            ..SearchConfig::default()
        };
        assert!(cfg.validate().is_err());
        assert!(compare_variants("x", &Graph::complete(3), &SearchConfig::default().with_threads(2)).is_err());
    }

    #[test]
    fn per_depth_nodes_sum_to_total() {
        let g = random_graph(35, 0.6, 3).unwrap();
        let out = solve_max_clique(&g, &SearchConfig::new(Variant::Inherited, OrderingPolicy::DegreeDesc)).unwrap();
        assert_eq!(out.per_depth.iter().map(|d| d.nodes).sum::<u64>(), out.nodes);
        assert_eq!(
            out.per_depth.iter().map(|d| d.misleading_events).sum::<u64>(),
            out.misleading_events
        );
        assert_eq!(out.per_depth.len(), out.max_depth + 1);
    }

    #[test]
    fn observer_sees_root_first() {
        let g = fixtures::figure2();
        let mut seen = Vec::new();
        solve_observed(&g, &SearchConfig::default(), &mut |node| seen.push(node.clone())).unwrap();
        assert!(seen[0].clique.is_empty());
        assert_eq!(seen[0].candidates.len(), 7);
        assert_eq!(seen[0].colours, 2);
        assert_eq!(seen[0].inherited, 7);
    }
}
