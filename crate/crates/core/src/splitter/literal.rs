use crate::tree::{VertexId, WeightedTree};

use super::classify::{classify_vertex, Domain};
use super::{check_vertex, Classification, CutResult, SplitError, ToleranceWindow, TraceStep};

/// Reference search: classify, step into the heavy component, repeat.
///
/// Component weights are recomputed by traversal at every step, so the worst
/// case is quadratic. Use [`super::find_cut_edge_descent`] for large trees.
pub fn find_cut_edge_literal(
    tree: &WeightedTree,
    window: &ToleranceWindow,
    start: VertexId,
) -> Result<CutResult, SplitError> {
    check_vertex(tree, start)?;
    window.check_matches(tree)?;

    let mut trace = Vec::new();
    let mut vertex = start;
    let mut domain = Domain::Whole;
    loop {
        let classification = classify_vertex(tree, vertex, window, domain);
        trace.push(TraceStep { vertex, classification });
        // Each step removes at least one vertex from the domain.
        debug_assert!(trace.len() <= tree.vertex_count());
        match classification {
            Classification::Descend { next, .. } => {
                domain = Domain::AwayFrom(vertex);
                vertex = next;
            }
            _ => return Ok(CutResult::from_trace(trace, window.total())),
        }
    }
}
