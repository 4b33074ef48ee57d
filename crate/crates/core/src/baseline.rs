//! Rejection sampling over edges: draw an edge uniformly (with replacement),
//! test it, give up after a fixed number of failures.
//!
//! Giving up says nothing about whether a cut edge exists.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::splitter::ToleranceWindow;
use crate::tree::{Edge, WeightedTree};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BaselineError {
    #[error("a single-vertex tree has no edges to sample")]
    NoEdges,
    #[error("max_attempts must be at least 1")]
    ZeroAttempts,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum BaselineOutcome {
    FoundEdge { edge: Edge, attempts: u64 },
    GaveUp { attempts: u64 },
}

impl BaselineOutcome {
    pub fn attempts(&self) -> u64 {
        match *self {
            BaselineOutcome::FoundEdge { attempts, .. } | BaselineOutcome::GaveUp { attempts } => attempts,
        }
    }

    pub fn found(&self) -> bool {
        matches!(self, BaselineOutcome::FoundEdge { .. })
    }
}

/// Samples edges from ChaCha8 seeded with `seed`.
///
/// Side weights for all edges come from one subtree-sum pass, so each
/// attempt is a constant-time test equivalent to `is_cut_edge`.
pub fn random_edge_baseline(
    tree: &WeightedTree,
    window: &ToleranceWindow,
    max_attempts: u64,
    seed: u64,
) -> Result<BaselineOutcome, BaselineError> {
    let edges = tree.edges();
    if edges.is_empty() {
        return Err(BaselineError::NoEdges);
    }
    if max_attempts == 0 {
        return Err(BaselineError::ZeroAttempts);
    }
    let rooted = tree.subtree_weights(0);
    let total = tree.total_weight();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 1..=max_attempts {
        let edge = edges[rng.gen_range(0..edges.len())];
        let child = if rooted.parent[edge.v] == edge.u {
            edge.v
        } else {
            edge.u
        };
        let side = rooted.down[child];
        if window.in_range(side) && window.in_range(total - side) {
            return Ok(BaselineOutcome::FoundEdge {
                edge,
                attempts: attempt,
            });
        }
    }
    Ok(BaselineOutcome::GaveUp { attempts: max_attempts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::splitter::is_cut_edge;

    fn unit_path(n: usize) -> WeightedTree {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        WeightedTree::build(n, vec![1; n], &edges, 0).unwrap()
    }

    #[test]
    fn wide_window_succeeds_first_try() {
        let t = unit_path(6);
        let w = ToleranceWindow::for_tree(&t, 6).unwrap();
        for seed in 0..20 {
            let out = random_edge_baseline(&t, &w, 10, seed).unwrap();
            assert!(matches!(out, BaselineOutcome::FoundEdge { attempts: 1, .. }));
        }
    }

    #[test]
    fn found_edge_is_a_cut_edge() {
        let t = unit_path(4);
        let w = ToleranceWindow::for_tree(&t, 0).unwrap();
        for seed in 0..50 {
            if let BaselineOutcome::FoundEdge { edge, .. } = random_edge_baseline(&t, &w, 100, seed).unwrap() {
                assert!(is_cut_edge(&t, edge, &w).unwrap());
                assert_eq!(edge, Edge::new(1, 2));
            }
        }
    }

    #[test]
    fn deterministic_per_seed() {
        let t = unit_path(9);
        let w = ToleranceWindow::for_tree(&t, 1).unwrap();
        let a = random_edge_baseline(&t, &w, 1000, 77).unwrap();
        let b = random_edge_baseline(&t, &w, 1000, 77).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn errors() {
        let single = WeightedTree::build(1, vec![1], &[], 0).unwrap();
        let w = ToleranceWindow::for_tree(&single, 0).unwrap();
        assert_eq!(random_edge_baseline(&single, &w, 5, 0), Err(BaselineError::NoEdges));
        let t = unit_path(3);
        let w = ToleranceWindow::for_tree(&t, 0).unwrap();
        assert_eq!(random_edge_baseline(&t, &w, 0, 0), Err(BaselineError::ZeroAttempts));
        // Odd unit path with no slack: nothing to find.
        assert_eq!(
            random_edge_baseline(&t, &w, 250, 3).unwrap(),
            BaselineOutcome::GaveUp { attempts: 250 }
        );
    }

    #[test]
    fn mean_attempts_on_unit_path_of_four() {
        // One cut edge among three: attempts are geometric with mean 3.
        let t = unit_path(4);
        let w = ToleranceWindow::for_tree(&t, 0).unwrap();
        let runs = 10_000u64;
        let sum: u64 = (0..runs)
            .map(|seed| random_edge_baseline(&t, &w, 1_000_000, seed).unwrap().attempts())
            .sum();
        let mean = sum as f64 / runs as f64;
        assert!((mean - 3.0).abs() <= 0.15, "mean attempts {mean}");
    }
}
