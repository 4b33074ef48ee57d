//! Seeded random instances.
//!
//! Every generator draws from ChaCha8 seeded through `seed_from_u64`, so the
//! same arguments give the same tree on every platform.

use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::tree::{BuildError, Edge, Topology, WeightedTree};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("tree size must be at least 1")]
    EmptyTree,
    #[error("grid dimensions must be at least 1x1, got {0}x{1}")]
    EmptyGrid(usize, usize),
    #[error("invalid weight range [{lo}, {hi}]")]
    BadRange { lo: i64, hi: i64 },
    #[error("weights must be non-negative, got {0}")]
    NegativeWeight(i64),
    #[error("cannot parse weight spec `{0}` (expected `const:<c>` or `uniform:<lo>:<hi>`)")]
    BadSpec(String),
    #[error(transparent)]
    Build(#[from] BuildError),
}

pub fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Decodes a Prüfer sequence over labels `0..n`, where `n = seq.len() + 2`.
pub fn prufer_decode(seq: &[usize]) -> Topology {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut ptr = degree.iter().position(|&d| d == 1).unwrap();
    let mut leaf = ptr;
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        edges.push(Edge::new(leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 && v < ptr {
            leaf = v;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push(Edge::new(leaf, n - 1));
    Topology::new(n, edges)
}

/// Uniform labeled tree on `n` vertices.
pub fn prufer_random_tree(n: usize, seed: u64) -> Result<Topology, GenError> {
    match n {
        0 => Err(GenError::EmptyTree),
        1 => Ok(Topology::new(1, Vec::new())),
        _ => {
            let mut rng = rng_for(seed);
            let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            Ok(prufer_decode(&seq))
        }
    }
}

/// Uniform spanning tree of the `width x height` grid (row-major ids) by
/// Wilson's loop-erased random walk rooted at vertex 0.
pub fn wilson_spanning_tree(width: usize, height: usize, seed: u64) -> Result<Topology, GenError> {
    if width == 0 || height == 0 {
        return Err(GenError::EmptyGrid(width, height));
    }
    let n = width * height;
    let mut rng = rng_for(seed);
    let mut in_tree = vec![false; n];
    let mut next = vec![0usize; n];
    let mut nbrs = Vec::with_capacity(4);
    in_tree[0] = true;
    for i in 0..n {
        // Walk until the tree is hit; overwriting `next` erases loops.
        let mut u = i;
        while !in_tree[u] {
            grid_neighbors(u, width, height, &mut nbrs);
            next[u] = nbrs[rng.gen_range(0..nbrs.len())];
            u = next[u];
        }
        let mut u = i;
        while !in_tree[u] {
            in_tree[u] = true;
            u = next[u];
        }
    }
    let edges = (1..n).map(|u| Edge::new(u, next[u])).collect();
    Ok(Topology::new(n, edges))
}

fn grid_neighbors(u: usize, width: usize, height: usize, out: &mut Vec<usize>) {
    out.clear();
    let (row, col) = (u / width, u % width);
    if row > 0 {
        out.push(u - width);
    }
    if col > 0 {
        out.push(u - 1);
    }
    if col + 1 < width {
        out.push(u + 1);
    }
    if row + 1 < height {
        out.push(u + width);
    }
}

/// Every edge of the `width x height` grid graph.
pub fn grid_edges(width: usize, height: usize) -> Vec<Edge> {
    let mut edges = Vec::new();
    for row in 0..height {
        for col in 0..width {
            let u = row * width + col;
            if col + 1 < width {
                edges.push(Edge::new(u, u + 1));
            }
            if row + 1 < height {
                edges.push(Edge::new(u, u + width));
            }
        }
    }
    edges.sort_unstable();
    edges
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightKind {
    Constant(i64),
    /// Inclusive on both ends.
    Uniform {
        lo: i64,
        hi: i64,
    },
}

impl FromStr for WeightKind {
    type Err = GenError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GenError::BadSpec(s.to_string());
        let parts: Vec<&str> = s.split(':').collect();
        let num = |p: &str| p.trim().parse::<i64>().map_err(|_| bad());
        let kind = match parts.as_slice() {
            ["const", c] => WeightKind::Constant(num(c)?),
            ["uniform", lo, hi] => WeightKind::Uniform {
                lo: num(lo)?,
                hi: num(hi)?,
            },
            _ => return Err(bad()),
        };
        kind.validate()?;
        Ok(kind)
    }
}

impl WeightKind {
    fn validate(&self) -> Result<(), GenError> {
        match *self {
            WeightKind::Constant(c) if c < 0 => Err(GenError::NegativeWeight(c)),
            WeightKind::Uniform { lo, hi } if lo > hi => Err(GenError::BadRange { lo, hi }),
            WeightKind::Uniform { lo, .. } if lo < 0 => Err(GenError::NegativeWeight(lo)),
            _ => Ok(()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WeightSpec {
    pub kind: WeightKind,
    pub seed: u64,
}

/// Attaches weights (scale 0) drawn per `spec`.
pub fn assign_weights(topology: &Topology, spec: &WeightSpec) -> Result<WeightedTree, GenError> {
    spec.kind.validate()?;
    let n = topology.vertex_count;
    let weights = match spec.kind {
        WeightKind::Constant(c) => vec![c; n],
        WeightKind::Uniform { lo, hi } => {
            let mut rng = rng_for(spec.seed);
            (0..n).map(|_| rng.gen_range(lo..=hi)).collect()
        }
    };
    Ok(topology.with_weights(weights, 0)?)
}
