//! Validated vertex-weighted trees and the traversal primitives the search
//! routines are built on.
//!
//! Weights are exact integers in *scaled units*: a stored weight `w` with
//! scale exponent `d` stands for the real value `w / 10^d`. All traversals
//! are iterative, so path-shaped trees with millions of vertices are fine.

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type VertexId = usize;

/// Marker stored in `parent[root]` by [`WeightedTree::subtree_weights`].
pub const NO_PARENT: VertexId = usize::MAX;

/// An undirected tree edge in canonical form (`u < v`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
}

impl Edge {
    /// Canonicalizes the endpoint order. Panics on a self-loop.
    pub fn new(a: VertexId, b: VertexId) -> Edge {
        assert_ne!(a, b, "an edge needs two distinct endpoints");
        Edge {
            u: a.min(b),
            v: a.max(b),
        }
    }
}

impl std::fmt::Display for Edge {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("a tree needs at least one vertex")]
    Empty,
    #[error("expected {expected} weights, got {found}")]
    WeightCountMismatch { expected: usize, found: usize },
    #[error("vertex {vertex} has negative weight {weight}")]
    NegativeWeight { vertex: VertexId, weight: i64 },
    #[error("total weight exceeds the signed 64-bit range")]
    WeightOverflow,
    #[error("a tree on {vertices} vertices has {expected} edges, got {found}")]
    EdgeCountMismatch {
        vertices: usize,
        expected: usize,
        found: usize,
    },
    #[error("vertex id {id} out of range for {vertices} vertices")]
    IdOutOfRange { id: VertexId, vertices: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("duplicate edge {0}")]
    DuplicateEdge(Edge),
    #[error("graph is disconnected: vertex {unreached} is not reachable from vertex 0")]
    Disconnected { unreached: VertexId },
}

/// Bare tree shape, as produced by the generators before weights are attached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Topology {
    pub vertex_count: usize,
    pub edges: Vec<Edge>,
}

impl Topology {
    pub fn new(vertex_count: usize, mut edges: Vec<Edge>) -> Topology {
        edges.sort_unstable();
        Topology { vertex_count, edges }
    }

    /// Attaches unit weights at scale 0.
    pub fn with_unit_weights(&self) -> Result<WeightedTree, BuildError> {
        self.with_weights(vec![1; self.vertex_count], 0)
    }

    pub fn with_weights(&self, weights: Vec<i64>, scale: u32) -> Result<WeightedTree, BuildError> {
        let pairs: Vec<(VertexId, VertexId)> = self.edges.iter().map(|e| (e.u, e.v)).collect();
        WeightedTree::build(self.vertex_count, weights, &pairs, scale)
    }
}

/// One component of `T - {v}`, identified by the neighbor of `v` it contains.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Component {
    pub anchor: VertexId,
    pub weight: i64,
}

/// Rooted view produced by a single subtree-sum pass.
#[derive(Clone, Debug)]
pub struct RootedWeights {
    pub root: VertexId,
    /// `parent[root] == NO_PARENT`.
    pub parent: Vec<VertexId>,
    /// Total weight of the subtree rooted at each vertex.
    pub down: Vec<i64>,
}

/// An immutable, validated vertex-weighted tree.
///
/// Adjacency is stored in compressed form with every neighbor list sorted
/// ascending, which is what gives the search routines their deterministic
/// smallest-id tie-breaking.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedTree {
    weights: Vec<i64>,
    offsets: Vec<usize>,
    neighbors: Vec<VertexId>,
    edges: Vec<Edge>,
    scale: u32,
    total: i64,
}

impl WeightedTree {
    pub fn build(
        vertex_count: usize,
        weights: Vec<i64>,
        edges: &[(VertexId, VertexId)],
        scale: u32,
    ) -> Result<WeightedTree, BuildError> {
        let n = vertex_count;
        if n == 0 {
            return Err(BuildError::Empty);
        }
        if weights.len() != n {
            return Err(BuildError::WeightCountMismatch {
                expected: n,
                found: weights.len(),
            });
        }
        let mut total: i64 = 0;
        for (vertex, &weight) in weights.iter().enumerate() {
            if weight < 0 {
                return Err(BuildError::NegativeWeight { vertex, weight });
            }
            total = total.checked_add(weight).ok_or(BuildError::WeightOverflow)?;
        }
        if edges.len() != n - 1 {
            return Err(BuildError::EdgeCountMismatch {
                vertices: n,
                expected: n - 1,
                found: edges.len(),
            });
        }

        let mut canonical = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            for id in [a, b] {
                if id >= n {
                    return Err(BuildError::IdOutOfRange { id, vertices: n });
                }
            }
            if a == b {
                return Err(BuildError::SelfLoop(a));
            }
            canonical.push(Edge::new(a, b));
        }
        canonical.sort_unstable();
        if let Some(pair) = canonical.windows(2).find(|p| p[0] == p[1]) {
            return Err(BuildError::DuplicateEdge(pair[0]));
        }

        let mut degree = vec![0usize; n];
        for e in &canonical {
            degree[e.u] += 1;
            degree[e.v] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        // Edges are sorted by (u, v): the first pass appends each vertex's
        // smaller neighbors in ascending order, the second its larger ones.
        let mut fill = offsets[..n].to_vec();
        let mut neighbors = vec![0; 2 * canonical.len()];
        for e in &canonical {
            neighbors[fill[e.v]] = e.u;
            fill[e.v] += 1;
        }
        for e in &canonical {
            neighbors[fill[e.u]] = e.v;
            fill[e.u] += 1;
        }

        let tree = WeightedTree {
            weights,
            offsets,
            neighbors,
            edges: canonical,
            scale,
            total,
        };
        tree.check_connected()?;
        Ok(tree)
    }

    fn check_connected(&self) -> Result<(), BuildError> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &x in self.neighbors(u) {
                if !seen[x] {
                    seen[x] = true;
                    stack.push(x);
                }
            }
        }
        match seen.iter().position(|s| !s) {
            Some(unreached) => Err(BuildError::Disconnected { unreached }),
            None => Ok(()),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn weight(&self, v: VertexId) -> i64 {
        self.weights[v]
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn total_weight(&self) -> i64 {
        self.total
    }

    /// Canonically ordered edge list.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Neighbors of `v`, ascending.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.neighbors[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        e.u < self.vertex_count() && e.v < self.vertex_count() && self.neighbors(e.u).binary_search(&e.v).is_ok()
    }

    pub fn topology(&self) -> Topology {
        Topology {
            vertex_count: self.vertex_count(),
            edges: self.edges.clone(),
        }
    }

    /// Same shape with every weight multiplied by `factor` and the scale
    /// raised accordingly (`factor` should be a power of ten for the real
    /// values to be preserved).
    pub fn rescaled(&self, factor: i64, extra_digits: u32) -> Result<WeightedTree, BuildError> {
        let weights = self
            .weights
            .iter()
            .map(|w| w.checked_mul(factor).ok_or(BuildError::WeightOverflow))
            .collect::<Result<Vec<_>, _>>()?;
        self.topology().with_weights(weights, self.scale + extra_digits)
    }

    /// Weight of the component containing `anchor` once `blocked` is removed,
    /// i.e. the `anchor` side of the edge `(blocked, anchor)`.
    ///
    /// `blocked` must be a neighbor of `anchor`; the walk costs time
    /// proportional to the size of that side.
    pub fn side_weight(&self, blocked: VertexId, anchor: VertexId) -> i64 {
        let mut sum = 0;
        let mut stack = vec![(anchor, blocked)];
        while let Some((u, from)) = stack.pop() {
            sum += self.weights[u];
            for &x in self.neighbors(u) {
                if x != from {
                    stack.push((x, u));
                }
            }
        }
        sum
    }

    /// Components of `T - {v}`, one per neighbor, ordered by anchor id.
    pub fn components_without(&self, v: VertexId) -> Vec<Component> {
        self.neighbors(v)
            .iter()
            .map(|&anchor| Component {
                anchor,
                weight: self.side_weight(v, anchor),
            })
            .collect()
    }

    /// Parent pointers and subtree sums for the tree rooted at `root`.
    pub fn subtree_weights(&self, root: VertexId) -> RootedWeights {
        let n = self.vertex_count();
        let mut parent = vec![NO_PARENT; n];
        // Breadth-first: the queue is known well ahead, so lookups overlap.
        let mut order = Vec::with_capacity(n);
        order.push(root);
        let mut head = 0;
        while head < order.len() {
            let u = order[head];
            head += 1;
            for &x in self.neighbors(u) {
                if x != parent[u] {
                    parent[x] = u;
                    order.push(x);
                }
            }
        }
        let mut down = self.weights.clone();
        for &u in order.iter().rev() {
            let p = parent[u];
            if p != NO_PARENT {
                down[p] += down[u];
            }
        }
        RootedWeights { root, parent, down }
    }
}
