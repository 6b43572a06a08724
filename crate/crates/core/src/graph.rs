//! Simple undirected graphs over `0..n` with bitset adjacency rows.
//!
//! Vertices are 0-based internally. Each vertex may carry the 1-based label it
//! had in the file it came from, so reports can print original names even
//! after taking induced subgraphs.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::GraphError;

/// Immutable simple undirected graph.
///
/// Equality is structural: two graphs are equal when they have the same vertex
/// count and edge set, whatever their labels.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    adjacency: Vec<BitSet>,
    labels: Option<Vec<usize>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adjacency == other.adjacency
    }
}

impl Eq for Graph {}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            adjacency: vec![BitSet::new(n); n],
            labels: None,
        }
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let adjacency = (0..n)
            .map(|v| {
                let mut row = BitSet::full(n);
                row.remove(v);
                row
            })
            .collect();
        Self {
            n,
            adjacency,
            labels: None,
        }
    }

    /// Builds a graph from 0-based edges. Repeated edges are idempotent.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adjacency = vec![BitSet::new(n); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adjacency[u].insert(v);
            adjacency[v].insert(u);
        }
        Ok(Self {
            n,
            adjacency,
            labels: None,
        })
    }

    /// Same as [`Graph::from_edges`] but with 1-based endpoints, as written in
    /// DIMACS files and figure captions.
    pub fn from_labelled_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut zero_based = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            zero_based.push((u - 1, v - 1));
        }
        Self::from_edges(n, &zero_based)
    }

    /// Attaches original labels; `labels[v]` names internal vertex `v`.
    pub fn with_labels(mut self, labels: Vec<usize>) -> Result<Self, GraphError> {
        if labels.len() != self.n {
            return Err(GraphError::LabelCount {
                expected: self.n,
                got: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of distinct undirected edges.
    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(BitSet::count).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbours(&self, v: usize) -> &BitSet {
        &self.adjacency[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].count()
    }

    /// Original 1-based label of `v`; defaults to `v + 1`.
    pub fn label(&self, v: usize) -> usize {
        match &self.labels {
            Some(labels) => labels[v],
            None => v + 1,
        }
    }

    pub fn labels(&self) -> Option<&[usize]> {
        self.labels.as_deref()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.adjacency[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// True when every pair of distinct vertices in `vertices` is adjacent.
    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices.iter().enumerate().all(|(i, &u)| {
            u < self.n
                && vertices[i + 1..]
                    .iter()
                    .all(|&v| v < self.n && u != v && self.has_edge(u, v))
        })
    }

    /// Checks symmetry, absence of self-loops and row widths.
    pub fn validate(&self) -> Result<(), GraphError> {
        if self.adjacency.len() != self.n {
            return Err(GraphError::Corrupt(format!(
                "{} adjacency rows for {} vertices",
                self.adjacency.len(),
                self.n
            )));
        }
        for (u, row) in self.adjacency.iter().enumerate() {
            if row.capacity() != self.n {
                return Err(GraphError::Corrupt(format!(
                    "row {u} has width {} instead of {}",
                    row.capacity(),
                    self.n
                )));
            }
            if row.contains(u) {
                return Err(GraphError::SelfLoop(u));
            }
            for v in row {
                if !self.adjacency[v].contains(u) {
                    return Err(GraphError::Corrupt(format!("edge {u}-{v} is not symmetric")));
                }
            }
        }
        Ok(())
    }

    /// Subgraph induced by `keep`. New vertex `i` is the `i`-th smallest kept
    /// vertex and inherits its label.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<Graph, GraphError> {
        let mut kept = BitSet::new(self.n);
        for &v in keep {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
            }
            kept.insert(v);
        }
        let old: Vec<usize> = kept.iter().collect();
        let mut new_index = vec![usize::MAX; self.n];
        for (i, &v) in old.iter().enumerate() {
            new_index[v] = i;
        }
        let m = old.len();
        let adjacency = old
            .iter()
            .map(|&v| {
                let mut row = BitSet::new(m);
                for w in self.adjacency[v].intersection(&kept).iter() {
                    row.insert(new_index[w]);
                }
                row
            })
            .collect();
        Ok(Graph {
            n: m,
            adjacency,
            labels: Some(old.iter().map(|&v| self.label(v)).collect()),
        })
    }

    /// Copy of the graph with vertex `i` of the result being `order[i]` here.
    /// Labels travel with their vertices.
    pub(crate) fn permuted(&self, order: &[usize]) -> Graph {
        let mut position = vec![0; self.n];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        let adjacency = order
            .iter()
            .map(|&v| BitSet::from_iter_with_len(self.n, self.adjacency[v].iter().map(|w| position[w])))
            .collect();
        Graph {
            n: self.n,
            adjacency,
            labels: Some(order.iter().map(|&v| self.label(v)).collect()),
        }
    }
}

/// Erdős–Rényi `G(n, p)` with a pinned generator.
///
/// The stream is ChaCha8 seeded through `SeedableRng::seed_from_u64(seed)`
/// (rand_core 0.6). Pairs are visited as `(0,1), (0,2), …, (0,n-1), (1,2), …`;
/// each pair draws one `next_u64()`, maps its top 53 bits to `x ∈ [0, 1)`, and
/// becomes an edge when `x < p`. Identical `(n, p, seed)` therefore gives the
/// same graph on every platform.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph, GraphError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(GraphError::InvalidProbability(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut adjacency = vec![BitSet::new(n); n];
    for u in 0..n {
        for v in u + 1..n {
            let x = (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
            if x < p {
                adjacency[u].insert(v);
                adjacency[v].insert(u);
            }
        }
    }
    Ok(Graph {
        n,
        adjacency,
        labels: None,
    })
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrderingPolicy {
    /// Vertices in index order.
    #[default]
    Natural,
    /// Non-increasing degree, ties by smaller index.
    DegreeDesc,
}

/// A permutation of the vertices; `order[i]` is the vertex at position `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexOrdering {
    order: Vec<usize>,
    position: Vec<usize>,
    policy: OrderingPolicy,
}

impl VertexOrdering {
    pub fn new(g: &Graph, policy: OrderingPolicy) -> Self {
        let mut order: Vec<usize> = (0..g.n()).collect();
        if policy == OrderingPolicy::DegreeDesc {
            // stable sort keeps index order among equal degrees
            order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
        }
        Self::from_permutation(order, policy).expect("sorted indices form a permutation")
    }

    /// Wraps a caller-supplied permutation of `0..order.len()`.
    pub fn from_permutation(order: Vec<usize>, policy: OrderingPolicy) -> Result<Self, GraphError> {
        let n = order.len();
        let mut position = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if position[v] != usize::MAX {
                return Err(GraphError::NotAPermutation(v));
            }
            position[v] = i;
        }
        Ok(Self {
            order,
            position,
            policy,
        })
    }

    pub fn natural(n: usize) -> Self {
        Self::from_permutation((0..n).collect(), OrderingPolicy::Natural).unwrap()
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn position(&self, v: usize) -> usize {
        self.position[v]
    }

    pub fn policy(&self) -> OrderingPolicy {
        self.policy
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Members of `domain` in this ordering's relative order.
    pub fn restrict<'a>(&'a self, domain: &'a BitSet) -> impl Iterator<Item = usize> + 'a {
        self.order.iter().copied().filter(move |&v| domain.contains(v))
    }

    /// The ordering with `v` deleted and the remaining vertices renumbered as
    /// [`Graph::induced_subgraph`] would, relative order preserved.
    pub fn without(&self, v: usize) -> VertexOrdering {
        let order = self
            .order
            .iter()
            .filter(|&&w| w != v)
            .map(|&w| if w > v { w - 1 } else { w })
            .collect();
        Self::from_permutation(order, self.policy).expect("deleting a vertex keeps a permutation")
    }
}

/// Builds the ordering for `policy` on `g`.
pub fn make_ordering(g: &Graph, policy: OrderingPolicy) -> VertexOrdering {
    VertexOrdering::new(g, policy)
}
