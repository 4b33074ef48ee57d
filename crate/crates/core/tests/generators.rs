mod common;

use std::collections::HashMap;

use common::{enumerate_spanning_trees, kirchhoff_count, prufer_encode};
use treesplit::generators::{grid_edges, prufer_decode, prufer_random_tree, wilson_spanning_tree};
use treesplit::Edge;

/// Asserts each count is within 4 standard deviations of `draws * p`.
fn assert_within_four_sigma(counts: &[u64], probs: &[f64], draws: u64) {
    for (i, (&c, &p)) in counts.iter().zip(probs).enumerate() {
        let mean = draws as f64 * p;
        let sd = (draws as f64 * p * (1.0 - p)).sqrt();
        assert!(
            (c as f64 - mean).abs() <= 4.0 * sd,
            "cell {i}: observed {c}, expected {mean:.1} +- {sd:.1}"
        );
    }
}

#[test]
fn prufer_decode_is_a_bijection() {
    for n in 3..=6usize {
        let total = n.pow(n as u32 - 2);
        let mut seen = std::collections::HashSet::new();
        for code in 0..total {
            let seq: Vec<usize> = (0..n - 2).map(|k| code / n.pow(k as u32) % n).collect();
            let t = prufer_decode(&seq);
            t.with_unit_weights().unwrap();
            assert_eq!(prufer_encode(n, &t.edges), seq);
            assert!(seen.insert(t.edges));
        }
        assert_eq!(seen.len(), total);
    }
}

#[test]
fn prufer_trees_uniform_on_five_vertices() {
    let draws = 100_000u64;
    let mut counts: HashMap<Vec<Edge>, u64> = HashMap::new();
    for seed in 0..draws {
        *counts.entry(prufer_random_tree(5, seed).unwrap().edges).or_default() += 1;
    }
    assert_eq!(counts.len(), 125);
    let cells: Vec<u64> = counts.values().copied().collect();
    assert_within_four_sigma(&cells, &vec![1.0 / 125.0; 125], draws);
}

#[test]
fn prufer_degree_marginals_on_eight_vertices() {
    // deg(i) - 1 counts occurrences of i among 6 uniform labels: Binomial(6, 1/8).
    let draws = 100_000u64;
    let n = 8;
    let binom = |k: u32| {
        let c = [1.0, 6.0, 15.0, 20.0, 15.0, 6.0, 1.0][k as usize];
        c * (1.0f64 / 8.0).powi(k as i32) * (7.0f64 / 8.0).powi(6 - k as i32)
    };
    let probs = [binom(0), binom(1), binom(2), 1.0 - binom(0) - binom(1) - binom(2)];
    let mut counts = vec![[0u64; 4]; n];
    for seed in 0..draws {
        let t = prufer_random_tree(n, seed).unwrap();
        let mut deg = vec![0usize; n];
        for e in &t.edges {
            deg[e.u] += 1;
            deg[e.v] += 1;
        }
        for (v, d) in deg.iter().enumerate() {
            counts[v][(*d - 1).min(3)] += 1;
        }
    }
    for cells in &counts {
        assert_within_four_sigma(cells, &probs, draws);
    }
}

#[test]
fn grid_spanning_tree_counts() {
    assert_eq!(kirchhoff_count(4, &grid_edges(2, 2)), 4);
    assert_eq!(kirchhoff_count(6, &grid_edges(3, 2)), 15);
    assert_eq!(kirchhoff_count(9, &grid_edges(3, 3)), 192);
    assert_eq!(enumerate_spanning_trees(9, &grid_edges(3, 3)).len(), 192);
    assert_eq!(kirchhoff_count(16, &grid_edges(4, 4)), 100_352);
}

#[test]
fn wilson_uniform_on_small_grid() {
    let all = enumerate_spanning_trees(6, &grid_edges(3, 2));
    assert_eq!(all.len(), 15);
    let draws = 30_000u64;
    let mut counts: HashMap<Vec<Edge>, u64> = HashMap::new();
    for seed in 0..draws {
        *counts
            .entry(wilson_spanning_tree(3, 2, seed).unwrap().edges)
            .or_default() += 1;
    }
    assert_eq!(counts.len(), 15);
    let cells: Vec<u64> = all.iter().map(|t| counts[t]).collect();
    assert_within_four_sigma(&cells, &[1.0 / 15.0; 15], draws);
}

#[test]
fn generators_are_deterministic() {
    assert_eq!(prufer_random_tree(500, 9).unwrap(), prufer_random_tree(500, 9).unwrap());
    assert_ne!(
        prufer_random_tree(500, 9).unwrap(),
        prufer_random_tree(500, 10).unwrap()
    );
    assert_eq!(
        wilson_spanning_tree(20, 20, 7).unwrap(),
        wilson_spanning_tree(20, 20, 7).unwrap()
    );
    let two_by_two = wilson_spanning_tree(2, 2, 1).unwrap();
    assert!(enumerate_spanning_trees(4, &grid_edges(2, 2)).contains(&two_by_two.edges));
}
