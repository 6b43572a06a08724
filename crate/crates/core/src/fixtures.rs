//! The two worked-example graphs, as 1-based edge lists.

use crate::graph::Graph;

/// Nine vertices, seventeen edges, unique maximum clique {1, 3, 6, 8}.
pub const FIGURE1_EDGES: [(usize, usize); 17] = [
    (1, 3),
    (1, 5),
    (1, 6),
    (1, 8),
    (1, 9),
    (2, 5),
    (2, 6),
    (2, 8),
    (3, 4),
    (3, 6),
    (3, 7),
    (3, 8),
    (4, 8),
    (5, 6),
    (6, 8),
    (7, 8),
    (8, 9),
];

/// Seven vertices: vertex 1 hangs off the 6-cycle 2-5-4-3-6-7-2.
/// Greedy colouring in index order needs 2 colours, but 3 once vertex 1 is gone.
pub const FIGURE2_EDGES: [(usize, usize); 7] = [(1, 2), (2, 5), (5, 4), (4, 3), (3, 6), (6, 7), (7, 2)];

pub fn figure1() -> Graph {
    Graph::from_labelled_edges(9, &FIGURE1_EDGES).expect("figure 1 edge list is valid")
}

pub fn figure2() -> Graph {
    Graph::from_labelled_edges(7, &FIGURE2_EDGES).expect("figure 2 edge list is valid")
}
