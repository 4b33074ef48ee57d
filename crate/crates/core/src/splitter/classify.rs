use crate::tree::{Component, Edge, VertexId, WeightedTree};

use super::{Classification, ToleranceWindow};

/// Which part of the tree the current search step is confined to.
///
/// After descending from `p` into the heavy component anchored at `v`, the
/// search domain is the component of `T - {p}` containing `v`. Seen from
/// `v`, that is everything except the direction of `p`, so the domain is
/// just the excluded neighbor rather than a copied subtree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Domain {
    Whole,
    AwayFrom(VertexId),
}

impl Domain {
    fn admits(self, neighbor: VertexId) -> bool {
        match self {
            Domain::Whole => true,
            Domain::AwayFrom(p) => neighbor != p,
        }
    }
}

/// Classifies `v` from the components of `domain - {v}`, recomputed by
/// traversal.
///
/// Thresholds always use the whole tree's total, even inside a restricted
/// domain.
pub fn classify_vertex(tree: &WeightedTree, v: VertexId, window: &ToleranceWindow, domain: Domain) -> Classification {
    let components = tree
        .neighbors(v)
        .iter()
        .filter(|&&a| domain.admits(a))
        .map(|&anchor| Component {
            anchor,
            weight: tree.side_weight(v, anchor),
        });
    decide(v, components, window)
}

/// Applies the case priority to the components around `v`, which must come
/// in ascending anchor order: an in-window component wins (smallest anchor
/// first), then a heavy one, otherwise `v` is a witness.
pub(super) fn decide(
    v: VertexId,
    components: impl Iterator<Item = Component>,
    window: &ToleranceWindow,
) -> Classification {
    let mut heavy = None;
    for c in components {
        if window.in_range(c.weight) {
            return Classification::Found {
                edge: Edge::new(v, c.anchor),
                side_weight: c.weight,
            };
        }
        if heavy.is_none() && window.is_heavy(c.weight) {
            heavy = Some(c);
        }
    }
    match heavy {
        Some(c) => Classification::Descend {
            next: c.anchor,
            component_weight: c.weight,
        },
        None => Classification::NotSplittable { witness: v },
    }
}
