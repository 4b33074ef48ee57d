use crate::tree::{Edge, VertexId, WeightedTree, NO_PARENT};

use super::ToleranceWindow;

/// Every cut edge of the tree, in canonical order, by exhaustive check.
pub fn oracle_find_all(tree: &WeightedTree, window: &ToleranceWindow) -> Vec<Edge> {
    let rooted = tree.subtree_weights(0);
    let total = tree.total_weight();
    tree.edges()
        .iter()
        .copied()
        .filter(|e| {
            let child = if rooted.parent[e.v] == e.u { e.v } else { e.u };
            let side = rooted.down[child];
            window.in_range(side) && window.in_range(total - side)
        })
        .collect()
}

/// True when every component of `T - {v}` on the full tree is too light:
/// the hypothesis that rules out any cut edge.
pub fn is_witness(tree: &WeightedTree, v: VertexId, window: &ToleranceWindow) -> bool {
    v < tree.vertex_count() && tree.components_without(v).iter().all(|c| window.is_light(c.weight))
}

/// Smallest-id witness vertex found by scanning every vertex.
pub fn find_witness_brute(tree: &WeightedTree, window: &ToleranceWindow) -> Option<VertexId> {
    let rooted = tree.subtree_weights(0);
    let total = tree.total_weight();
    (0..tree.vertex_count()).find(|&u| {
        let up = rooted.parent[u];
        let parent_side_light = up == NO_PARENT || window.is_light(total - rooted.down[u]);
        parent_side_light
            && tree
                .neighbors(u)
                .iter()
                .filter(|&&x| x != up)
                .all(|&x| window.is_light(rooted.down[x]))
    })
}
