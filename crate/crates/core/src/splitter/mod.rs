//! Balanced single-edge splits of weighted trees.
//!
//! A tree with total weight `S` is split by an edge when both sides of the
//! edge weigh within `ε` of `S / 2`. The search walks from a start vertex
//! toward the one component that is too heavy, and stops either at a vertex
//! with an in-window component (the edge to that component is the answer)
//! or at a vertex whose components are all too light. Such a vertex is a
//! certificate: no edge of the tree can be a cut edge.
//!
//! Two renditions of the walk are provided. [`find_cut_edge_literal`]
//! recomputes component weights by traversal at every step, and
//! [`find_cut_edge_descent`] does one subtree-sum pass up front and then
//! walks in O(n) total. They agree step for step, and [`oracle_find_all`]
//! checks every edge for differential testing.

mod classify;
mod descent;
mod literal;
mod oracle;
mod start;
mod unweighted;

use serde::Serialize;
use thiserror::Error;

use crate::tree::{Edge, VertexId, WeightedTree};

pub use classify::{classify_vertex, Domain};
pub use descent::find_cut_edge_descent;
pub use literal::find_cut_edge_literal;
pub use oracle::{find_witness_brute, is_witness, oracle_find_all};
pub use start::{avg_component_weight, improved_start, min_average_start, AvgWeight, StartRule};
pub use unweighted::split_unweighted;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SplitError {
    #[error("edge {0} is not in the tree")]
    EdgeNotInTree(Edge),
    #[error("vertex {id} out of range for {vertices} vertices")]
    VertexOutOfRange { id: VertexId, vertices: usize },
    #[error("vertex {0} has no neighbors")]
    IsolatedVertex(VertexId),
    #[error("doubled tolerance must be non-negative, got {0}")]
    NegativeTolerance(i64),
    #[error("window total {window} does not match tree total {tree}")]
    TotalMismatch { window: i64, tree: i64 },
    #[error("no cut edge and no witness vertex found")]
    NoCertificate,
}

/// The admissible band `[S/2 - ε, S/2 + ε]`, held as `S` and `2ε` so every
/// comparison stays in integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ToleranceWindow {
    total: i64,
    doubled_epsilon: i64,
}

impl ToleranceWindow {
    pub fn new(total: i64, doubled_epsilon: i64) -> Result<ToleranceWindow, SplitError> {
        if doubled_epsilon < 0 {
            return Err(SplitError::NegativeTolerance(doubled_epsilon));
        }
        Ok(ToleranceWindow { total, doubled_epsilon })
    }

    pub fn for_tree(tree: &WeightedTree, doubled_epsilon: i64) -> Result<ToleranceWindow, SplitError> {
        ToleranceWindow::new(tree.total_weight(), doubled_epsilon)
    }

    pub fn total(&self) -> i64 {
        self.total
    }

    pub fn doubled_epsilon(&self) -> i64 {
        self.doubled_epsilon
    }

    /// `|2w - S| <= 2ε`
    pub fn in_range(&self, w: i64) -> bool {
        (2 * w as i128 - self.total as i128).abs() <= self.doubled_epsilon as i128
    }

    /// `2w > S + 2ε`: the component is heavier than any admissible side.
    pub fn is_heavy(&self, w: i64) -> bool {
        2 * w as i128 > self.total as i128 + self.doubled_epsilon as i128
    }

    /// `2w < S - 2ε`: the component is lighter than any admissible side.
    pub fn is_light(&self, w: i64) -> bool {
        (2 * w as i128) < self.total as i128 - self.doubled_epsilon as i128
    }

    pub fn check_matches(&self, tree: &WeightedTree) -> Result<(), SplitError> {
        if self.total != tree.total_weight() {
            return Err(SplitError::TotalMismatch {
                window: self.total,
                tree: tree.total_weight(),
            });
        }
        Ok(())
    }
}

/// What examining one vertex tells us.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Classification {
    /// The component behind `edge` weighs `side_weight`, which is in the window.
    Found { edge: Edge, side_weight: i64 },
    /// The component anchored at `next` is too heavy; continue there.
    Descend { next: VertexId, component_weight: i64 },
    /// Every examined component is too light.
    NotSplittable { witness: VertexId },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub vertex: VertexId,
    pub classification: Classification,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    /// `w1` is the side containing `edge.u`, `w2` the side containing `edge.v`.
    Split {
        edge: Edge,
        w1: i64,
        w2: i64,
    },
    NotSplittable {
        witness: VertexId,
    },
}

impl Verdict {
    pub fn is_split(&self) -> bool {
        matches!(self, Verdict::Split { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CutResult {
    pub verdict: Verdict,
    pub trace: Vec<TraceStep>,
}

impl CutResult {
    pub fn iterations(&self) -> usize {
        self.trace.len()
    }

    /// Vertices examined, in order.
    pub fn path(&self) -> Vec<VertexId> {
        self.trace.iter().map(|s| s.vertex).collect()
    }

    /// Builds the final result from a trace ending in `Found` or `NotSplittable`.
    fn from_trace(trace: Vec<TraceStep>, total: i64) -> CutResult {
        let last = trace.last().expect("a search examines at least one vertex");
        let verdict = match last.classification {
            Classification::Found { edge, side_weight } => {
                // The in-window component sits on the far side from the examined vertex.
                let w1 = if edge.u == last.vertex {
                    total - side_weight
                } else {
                    side_weight
                };
                Verdict::Split {
                    edge,
                    w1,
                    w2: total - w1,
                }
            }
            Classification::NotSplittable { witness } => Verdict::NotSplittable { witness },
            Classification::Descend { .. } => unreachable!("search stopped mid-descent"),
        };
        CutResult { verdict, trace }
    }
}

/// Weights of the two sides of `e`: `w1` contains `e.u`.
pub fn edge_split_weights(tree: &WeightedTree, e: Edge) -> Result<(i64, i64), SplitError> {
    if !tree.contains_edge(e) {
        return Err(SplitError::EdgeNotInTree(e));
    }
    let w1 = tree.side_weight(e.v, e.u);
    Ok((w1, tree.total_weight() - w1))
}

pub fn is_cut_edge(tree: &WeightedTree, e: Edge, window: &ToleranceWindow) -> Result<bool, SplitError> {
    let (w1, w2) = edge_split_weights(tree, e)?;
    Ok(window.in_range(w1) && window.in_range(w2))
}

fn check_vertex(tree: &WeightedTree, v: VertexId) -> Result<(), SplitError> {
    if v >= tree.vertex_count() {
        return Err(SplitError::VertexOutOfRange {
            id: v,
            vertices: tree.vertex_count(),
        });
    }
    Ok(())
}
