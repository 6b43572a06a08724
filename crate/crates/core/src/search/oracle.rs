//! Exhaustive clique enumeration used to check the solver.
//!
//! Deliberately naive: a dense boolean matrix, every clique visited once by
//! extending with larger-indexed vertices, and no bounding at all.

use crate::error::SearchError;
use crate::graph::Graph;

pub const DEFAULT_ORACLE_LIMIT: usize = 30;

/// Exact `(ω, a maximum clique)` by enumerating every clique. The returned
/// clique is the lexicographically first one of maximum size.
pub fn brute_force_omega(g: &Graph, limit: usize) -> Result<(usize, Vec<usize>), SearchError> {
    let n = g.n();
    if n > limit {
        return Err(SearchError::OracleTooLarge { n, limit });
    }
    let matrix: Vec<Vec<bool>> = (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect();
    let mut best = Vec::new();
    let mut current = Vec::new();
    enumerate(&matrix, 0, &mut current, &mut best);
    Ok((best.len(), best))
}

fn enumerate(matrix: &[Vec<bool>], from: usize, current: &mut Vec<usize>, best: &mut Vec<usize>) {
    if current.len() > best.len() {
        *best = current.clone();
    }
    for v in from..matrix.len() {
        if current.iter().all(|&u| matrix[u][v]) {
            current.push(v);
            enumerate(matrix, v + 1, current, best);
            current.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn figure_one() {
        let g = fixtures::figure1();
        let (size, clique) = brute_force_omega(&g, 30).unwrap();
        assert_eq!(size, 4);
        let labels: Vec<usize> = clique.iter().map(|&v| g.label(v)).collect();
        assert_eq!(labels, vec![1, 3, 6, 8]);
    }

    #[test]
    fn path_and_figure_two() {
        let path = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let (size, clique) = brute_force_omega(&path, 30).unwrap();
        assert_eq!(size, 2);
        assert!(path.is_clique(&clique));
        // triangle-free
        assert_eq!(brute_force_omega(&fixtures::figure2(), 30).unwrap().0, 2);
    }

    #[test]
    fn empty_inputs() {
        assert_eq!(brute_force_omega(&Graph::empty(0), 30).unwrap(), (0, vec![]));
        assert_eq!(brute_force_omega(&Graph::empty(3), 30).unwrap(), (1, vec![0]));
    }

    #[test]
    fn size_guard() {
        assert_eq!(
            brute_force_omega(&Graph::empty(31), 30),
            Err(SearchError::OracleTooLarge { n: 31, limit: 30 })
        );
        assert!(brute_force_omega(&Graph::empty(31), 31).is_ok());
    }
}
