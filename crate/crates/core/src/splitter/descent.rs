use crate::tree::{Component, VertexId, WeightedTree};

use super::classify::decide;
use super::{check_vertex, Classification, CutResult, SplitError, ToleranceWindow, TraceStep};

/// Linear-time search: one subtree-sum pass rooted at `start`, then a walk
/// down the heavy children.
///
/// At a vertex `u` the components of `T - {u}` are the children's subtrees
/// plus, away from the root, the parent side of weight `S - down[u]`. Once
/// the walk has descended, that parent side is always too light, so the
/// classification matches [`super::find_cut_edge_literal`] step for step.
pub fn find_cut_edge_descent(
    tree: &WeightedTree,
    window: &ToleranceWindow,
    start: VertexId,
) -> Result<CutResult, SplitError> {
    check_vertex(tree, start)?;
    window.check_matches(tree)?;

    let rooted = tree.subtree_weights(start);
    let total = window.total();
    let mut trace = Vec::new();
    let mut u = start;
    loop {
        let parent = rooted.parent[u];
        let components = tree.neighbors(u).iter().map(|&anchor| Component {
            anchor,
            weight: if anchor == parent {
                total - rooted.down[u]
            } else {
                rooted.down[anchor]
            },
        });
        let classification = decide(u, components, window);
        trace.push(TraceStep {
            vertex: u,
            classification,
        });
        match classification {
            Classification::Descend { next, .. } => {
                debug_assert_eq!(rooted.parent[next], u);
                u = next;
            }
            _ => return Ok(CutResult::from_trace(trace, total)),
        }
    }
}
