//! Fixed top-level split across threads with a shared incumbent.
//!
//! The root is coloured once. Its branching vertices, highest colour first, are
//! dealt round-robin to the workers, and each worker runs the sequential engine
//! below its own share. The only shared mutable state is the incumbent.
//! Counters are per worker and summed at the join, so `nodes` and the event
//! counts vary from run to run.

use std::time::Instant;

use super::engine::{Engine, SharedIncumbent};
use super::{SearchConfig, SearchOutcome};
use crate::bitset::BitSet;
use crate::error::SearchError;
use crate::graph::{make_ordering, Graph};

pub fn solve_parallel(g: &Graph, cfg: &SearchConfig) -> Result<SearchOutcome, SearchError> {
    cfg.validate()?;
    if cfg.threads < 2 {
        return Err(SearchError::InvalidConfig(format!(
            "parallel search needs at least 2 threads, got {}",
            cfg.threads
        )));
    }
    let start = Instant::now();
    let ordering = make_ordering(g, cfg.ordering);
    let order = ordering.order();
    let permuted = g.permuted(order);
    let n = g.n();

    let mut root_engine = Engine::new(&permuted, order, cfg.variant, cfg.bound_passing);
    let root = root_engine.colour_node(&[], &BitSet::full(n), n, None);
    let tasks: Vec<usize> = (0..root.vertices.len()).rev().collect();
    let incumbent = SharedIncumbent::default();

    let worker_counters = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..cfg.threads)
            .map(|worker| {
                let (root, tasks, permuted, incumbent) = (&root, &tasks, &permuted, &incumbent);
                scope.spawn(move || {
                    let mut engine = Engine::new(permuted, order, cfg.variant, cfg.bound_passing);
                    let mut shared = incumbent;
                    let mut clique = Vec::new();
                    for &i in tasks.iter().skip(worker).step_by(cfg.threads) {
                        let (v, colour) = (root.vertices[i], root.colours[i]);
                        // this worker's tasks come in non-increasing colour order
                        if engine.branch_bound(colour, root.inherited) <= super::engine::Incumbent::size(&shared) {
                            break;
                        }
                        engine.push(&mut clique, v, &mut shared);
                        let earlier = BitSet::from_iter_with_len(permuted.n(), root.vertices[..i].iter().copied());
                        let child = earlier.intersection(permuted.neighbours(v));
                        if !child.is_empty() {
                            let bound = engine.child_bound(colour, root);
                            engine.expand(&mut clique, child, bound, Some(root.effective), &mut shared);
                        }
                        clique.pop();
                    }
                    engine.counters
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("search worker panicked"))
            .collect::<Vec<_>>()
    });

    let mut counters = root_engine.counters;
    for c in worker_counters {
        counters.merge(c);
    }
    let best = incumbent.into_best();
    Ok(SearchOutcome::assemble(g, order, &best, counters, start.elapsed()))
}
