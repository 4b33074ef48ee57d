use std::cmp::Ordering;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::tree::{VertexId, WeightedTree};

use super::{check_vertex, SplitError};

/// Start vertex: maximum degree, then maximum weight, then smallest id.
pub fn improved_start(tree: &WeightedTree) -> VertexId {
    (0..tree.vertex_count())
        .max_by(|&a, &b| {
            tree.degree(a)
                .cmp(&tree.degree(b))
                .then(tree.weight(a).cmp(&tree.weight(b)))
                // max_by keeps the last maximum, so reverse the id order.
                .then(b.cmp(&a))
        })
        .expect("trees are non-empty")
}

/// Start vertex minimizing the mean component weight `(S - w(v)) / deg(v)`,
/// smallest id on ties. A single vertex is its own start.
pub fn min_average_start(tree: &WeightedTree) -> VertexId {
    (0..tree.vertex_count())
        .filter_map(|v| avg_component_weight(tree, v).ok().map(|avg| (avg, v)))
        .min()
        .map_or(0, |(_, v)| v)
}

/// Exact mean component weight `(S - w(v)) / deg(v)` around a vertex.
///
/// Not reduced; comparisons cross-multiply.
#[derive(Clone, Copy, Debug)]
pub struct AvgWeight {
    pub numerator: i64,
    pub denominator: i64,
}

impl PartialEq for AvgWeight {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for AvgWeight {}

impl PartialOrd for AvgWeight {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AvgWeight {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.numerator as i128 * other.denominator as i128;
        let rhs = other.numerator as i128 * self.denominator as i128;
        lhs.cmp(&rhs)
    }
}

pub fn avg_component_weight(tree: &WeightedTree, v: VertexId) -> Result<AvgWeight, SplitError> {
    check_vertex(tree, v)?;
    let degree = tree.degree(v);
    if degree == 0 {
        return Err(SplitError::IsolatedVertex(v));
    }
    Ok(AvgWeight {
        numerator: tree.total_weight() - tree.weight(v),
        denominator: degree as i64,
    })
}

/// How a search picks its first vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StartRule {
    Improved,
    /// See [`min_average_start`].
    MinAverage,
    /// Uniform over vertices, drawn from ChaCha8 seeded with `seed`.
    Random {
        seed: u64,
    },
    Vertex(VertexId),
}

impl StartRule {
    pub fn resolve(&self, tree: &WeightedTree) -> Result<VertexId, SplitError> {
        match *self {
            StartRule::Improved => Ok(improved_start(tree)),
            StartRule::MinAverage => Ok(min_average_start(tree)),
            StartRule::Random { seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                Ok(rng.gen_range(0..tree.vertex_count()))
            }
            StartRule::Vertex(v) => check_vertex(tree, v).map(|_| v),
        }
    }

    pub fn label(&self) -> String {
        match self {
            StartRule::Improved => "improved".into(),
            StartRule::MinAverage => "min-average".into(),
            StartRule::Random { .. } => "random".into(),
            StartRule::Vertex(v) => v.to_string(),
        }
    }
}

/// Parses `improved`, `min-average`, `random` (seed 0; see [`StartRule::with_seed`]) or a vertex id.
impl FromStr for StartRule {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "improved" => Ok(StartRule::Improved),
            "min-average" => Ok(StartRule::MinAverage),
            "random" => Ok(StartRule::Random { seed: 0 }),
            other => other
                .parse()
                .map(StartRule::Vertex)
                .map_err(|_| format!("expected `improved`, `min-average`, `random` or a vertex id, got `{other}`")),
        }
    }
}

impl StartRule {
    /// Replaces the seed of a `Random` rule; other rules are unchanged.
    pub fn with_seed(self, seed: u64) -> StartRule {
        match self {
            StartRule::Random { .. } => StartRule::Random { seed },
            other => other,
        }
    }
}
