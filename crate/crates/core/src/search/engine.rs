//! The recursive expansion shared by the sequential and parallel drivers.
//!
//! The engine works on a copy of the graph renumbered by the chosen vertex
//! ordering, so ascending bit order is the ordering and restricting the
//! ordering to a candidate set is free.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use super::{BoundPassing, DepthStats, NodeView, Variant};
use crate::bitset::BitSet;
use crate::graph::Graph;

/// Vertex-wise greedy colouring of `candidates` in ascending order, returned
/// class-major: `vertices[i]` has 1-based colour `colours[i]`, classes in
/// creation order, members in the order they were coloured.
pub(crate) fn colour_candidates(g: &Graph, candidates: &BitSet) -> (Vec<usize>, Vec<usize>) {
    let mut classes: Vec<BitSet> = Vec::new();
    let mut members: Vec<Vec<usize>> = Vec::new();
    for v in candidates {
        let adj = g.neighbours(v);
        match classes.iter().position(|class| class.is_disjoint(adj)) {
            Some(i) => {
                classes[i].insert(v);
                members[i].push(v);
            }
            None => {
                classes.push(BitSet::from_iter_with_len(g.n(), [v]));
                members.push(vec![v]);
            }
        }
    }
    let mut vertices = Vec::with_capacity(candidates.count());
    let mut colours = Vec::with_capacity(vertices.capacity());
    for (i, class) in members.into_iter().enumerate() {
        colours.extend(std::iter::repeat_n(i + 1, class.len()));
        vertices.extend(class);
    }
    (vertices, colours)
}

/// Best clique found so far.
pub(crate) trait Incumbent {
    fn size(&self) -> usize;
    /// Records `clique` if it is strictly larger than the current best.
    fn offer(&mut self, clique: &[usize]);
}

#[derive(Default)]
pub(crate) struct LocalIncumbent {
    pub best: Vec<usize>,
}

impl Incumbent for LocalIncumbent {
    fn size(&self) -> usize {
        self.best.len()
    }

    fn offer(&mut self, clique: &[usize]) {
        if clique.len() > self.best.len() {
            self.best = clique.to_vec();
        }
    }
}

/// Incumbent shared between workers. The size only ever rises; a reader may
/// see a stale size but never a smaller one than it saw before.
#[derive(Default)]
pub(crate) struct SharedIncumbent {
    size: AtomicUsize,
    best: Mutex<Vec<usize>>,
}

impl SharedIncumbent {
    pub fn into_best(self) -> Vec<usize> {
        self.best.into_inner().expect("incumbent lock poisoned")
    }
}

impl Incumbent for &SharedIncumbent {
    fn size(&self) -> usize {
        self.size.load(Ordering::Acquire)
    }

    fn offer(&mut self, clique: &[usize]) {
        if clique.len() <= self.size.load(Ordering::Acquire) {
            return;
        }
        let mut best = self.best.lock().expect("incumbent lock poisoned");
        // size and witness change together under the lock
        if clique.len() > best.len() {
            *best = clique.to_vec();
            self.size.store(clique.len(), Ordering::Release);
        }
    }
}

#[derive(Clone, Debug, Default)]
pub(crate) struct Counters {
    pub nodes: u64,
    pub misleading_events: u64,
    pub would_be_events: u64,
    pub bound_violations: u64,
    pub max_depth: usize,
    pub per_depth: Vec<DepthStats>,
}

impl Counters {
    fn depth_mut(&mut self, depth: usize) -> &mut DepthStats {
        if self.per_depth.len() <= depth {
            self.per_depth.resize(depth + 1, DepthStats::default());
        }
        &mut self.per_depth[depth]
    }

    pub fn merge(&mut self, other: Counters) {
        self.nodes += other.nodes;
        self.misleading_events += other.misleading_events;
        self.would_be_events += other.would_be_events;
        self.bound_violations += other.bound_violations;
        self.max_depth = self.max_depth.max(other.max_depth);
        for (depth, stats) in other.per_depth.into_iter().enumerate() {
            let mine = self.depth_mut(depth);
            mine.nodes += stats.nodes;
            mine.misleading_events += stats.misleading_events;
        }
    }
}

/// A colour-sorted node ready for branching.
pub(crate) struct ColouredNode {
    pub vertices: Vec<usize>,
    pub colours: Vec<usize>,
    pub count: usize,
    pub inherited: usize,
    pub effective: usize,
}

pub(crate) struct Engine<'a, 'o> {
    pub graph: &'a Graph,
    /// `order[i]` is the input-graph vertex that `graph` calls `i`.
    pub order: &'a [usize],
    pub variant: Variant,
    pub passing: BoundPassing,
    pub counters: Counters,
    pub observer: Option<&'o mut dyn FnMut(&NodeView)>,
}

impl<'a, 'o> Engine<'a, 'o> {
    pub fn new(graph: &'a Graph, order: &'a [usize], variant: Variant, passing: BoundPassing) -> Self {
        Self {
            graph,
            order,
            variant,
            passing,
            counters: Counters::default(),
            observer: None,
        }
    }

    /// Colours `candidates`, records events and checks the bound chain.
    pub fn colour_node(
        &mut self,
        clique: &[usize],
        candidates: &BitSet,
        inherited: usize,
        parent_effective: Option<usize>,
    ) -> ColouredNode {
        let (vertices, colours) = colour_candidates(self.graph, candidates);
        let k = colours.last().copied().unwrap_or(0);
        let effective = match self.variant {
            Variant::Baseline => k,
            Variant::Inherited => k.min(inherited),
        };
        if k > inherited {
            self.counters.would_be_events += 1;
            if self.variant == Variant::Inherited {
                self.counters.misleading_events += 1;
                self.counters.depth_mut(clique.len()).misleading_events += 1;
            }
        }
        if let (Variant::Inherited, Some(parent)) = (self.variant, parent_effective) {
            let ceiling = match self.passing {
                BoundPassing::ColourIndex => parent.saturating_sub(1),
                BoundPassing::ParentCount => parent,
            };
            if effective > ceiling {
                self.counters.bound_violations += 1;
            }
        }
        if let Some(observer) = self.observer.as_mut() {
            let order = self.order;
            observer(&NodeView {
                clique: clique.iter().map(|&v| order[v]).collect(),
                candidates: candidates.iter().map(|v| order[v]).collect(),
                colours: k,
                inherited,
                effective,
            });
        }
        ColouredNode {
            vertices,
            colours,
            count: k,
            inherited,
            effective,
        }
    }

    /// Bound for branching on a vertex of 1-based colour `colour`.
    #[inline]
    pub fn branch_bound(&self, colour: usize, inherited: usize) -> usize {
        match self.variant {
            Variant::Baseline => colour,
            Variant::Inherited => colour.min(inherited),
        }
    }

    /// Inherited bound handed to the child created by branching on a vertex of
    /// colour `colour`.
    #[inline]
    pub fn child_bound(&self, colour: usize, node: &ColouredNode) -> usize {
        match self.passing {
            BoundPassing::ColourIndex => colour.min(node.inherited).saturating_sub(1),
            BoundPassing::ParentCount => node.count.min(node.inherited),
        }
    }

    /// Appends `v`, counts the node and offers the clique.
    pub fn push<I: Incumbent>(&mut self, clique: &mut Vec<usize>, v: usize, incumbent: &mut I) {
        clique.push(v);
        self.counters.nodes += 1;
        self.counters.max_depth = self.counters.max_depth.max(clique.len());
        self.counters.depth_mut(clique.len()).nodes += 1;
        if clique.len() > incumbent.size() {
            incumbent.offer(clique);
        }
    }

    /// Branches over a coloured node, highest colour first.
    pub fn branch<I: Incumbent>(
        &mut self,
        clique: &mut Vec<usize>,
        mut candidates: BitSet,
        node: &ColouredNode,
        incumbent: &mut I,
    ) {
        for i in (0..node.vertices.len()).rev() {
            let v = node.vertices[i];
            let colour = node.colours[i];
            if clique.len() + self.branch_bound(colour, node.inherited) <= incumbent.size() {
                break;
            }
            self.push(clique, v, incumbent);
            candidates.remove(v);
            let child = candidates.intersection(self.graph.neighbours(v));
            if !child.is_empty() {
                let bound = self.child_bound(colour, node);
                self.expand(clique, child, bound, Some(node.effective), incumbent);
            }
            clique.pop();
        }
    }

    pub fn expand<I: Incumbent>(
        &mut self,
        clique: &mut Vec<usize>,
        candidates: BitSet,
        inherited: usize,
        parent_effective: Option<usize>,
        incumbent: &mut I,
    ) {
        let node = self.colour_node(clique, &candidates, inherited, parent_effective);
        self.branch(clique, candidates, &node, incumbent);
    }
}
