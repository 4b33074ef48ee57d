use crate::tree::{BuildError, Topology};

use super::{find_cut_edge_descent, improved_start, CutResult, ToleranceWindow};

/// Looks for an edge splitting the tree into two halves of equal order.
///
/// Unit weights with zero tolerance, started from [`improved_start`]. Odd
/// orders always come back not splittable.
pub fn split_unweighted(topology: &Topology) -> Result<CutResult, BuildError> {
    let tree = topology.with_unit_weights()?;
    let window = ToleranceWindow::for_tree(&tree, 0).expect("zero tolerance is valid");
    let start = improved_start(&tree);
    Ok(find_cut_edge_descent(&tree, &window, start).expect("start and window come from the tree"))
}
