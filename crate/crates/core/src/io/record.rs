//! Machine-readable search results, one JSON object per line.
//!
//! A record carries enough to re-check its verdict against the input file
//! alone: the edge for a split, the witness for a non-split, and the
//! tolerance and scale the run used.

use serde::{Deserialize, Serialize};

use super::decimal::{format_half, format_scaled, parse_doubled_epsilon, DecimalError};
use crate::splitter::{is_cut_edge, is_witness, Classification, CutResult, ToleranceWindow, Verdict};
use crate::tree::{Edge, VertexId, WeightedTree};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictKind {
    Split,
    NotSplittable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceRecord {
    pub vertex: VertexId,
    /// `found`, `descend` or `not_splittable`.
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub edge: Option<[VertexId; 2]>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub next: Option<VertexId>,
    /// Weight of the component that decided the step, when there is one.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub weight: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub verdict: VerdictKind,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub edge: Option<[VertexId; 2]>,
    /// Side weights for `edge`, `edge[0]`'s side first.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub sides: Option<[String; 2]>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<VertexId>,
    pub iterations: usize,
    pub method: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub start: Option<VertexId>,
    pub epsilon: String,
    pub total: String,
    pub scale: u32,
    pub elapsed_us: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub trace: Option<Vec<TraceRecord>>,
}

impl ResultRecord {
    pub fn new(
        tree: &WeightedTree,
        window: &ToleranceWindow,
        result: &CutResult,
        method: &str,
        start: Option<VertexId>,
        elapsed_us: u64,
        with_trace: bool,
    ) -> ResultRecord {
        let scale = tree.scale();
        let (verdict, edge, sides, witness) = match result.verdict {
            Verdict::Split { edge, w1, w2 } => (
                VerdictKind::Split,
                Some([edge.u, edge.v]),
                Some([format_scaled(w1, scale), format_scaled(w2, scale)]),
                None,
            ),
            Verdict::NotSplittable { witness } => (VerdictKind::NotSplittable, None, None, Some(witness)),
        };
        let trace = with_trace.then(|| {
            result
                .trace
                .iter()
                .map(|step| {
                    let mut rec = TraceRecord {
                        vertex: step.vertex,
                        kind: String::new(),
                        edge: None,
                        next: None,
                        weight: None,
                    };
                    match step.classification {
                        Classification::Found { edge, side_weight } => {
                            rec.kind = "found".into();
                            rec.edge = Some([edge.u, edge.v]);
                            rec.weight = Some(format_scaled(side_weight, scale));
                        }
                        Classification::Descend { next, component_weight } => {
                            rec.kind = "descend".into();
                            rec.next = Some(next);
                            rec.weight = Some(format_scaled(component_weight, scale));
                        }
                        Classification::NotSplittable { .. } => rec.kind = "not_splittable".into(),
                    }
                    rec
                })
                .collect()
        });
        ResultRecord {
            verdict,
            edge,
            sides,
            witness,
            iterations: result.iterations(),
            method: method.to_string(),
            start,
            epsilon: format_half(window.doubled_epsilon(), scale),
            total: format_scaled(window.total(), scale),
            scale,
            elapsed_us,
            trace,
        }
    }

    /// Re-checks the verdict from scratch: the edge with the cut-edge
    /// predicate, or the witness against every component of the full tree.
    pub fn verify(&self, tree: &WeightedTree) -> Result<bool, DecimalError> {
        let doubled = parse_doubled_epsilon(&self.epsilon, tree.scale())?;
        let window = match ToleranceWindow::for_tree(tree, doubled) {
            Ok(w) => w,
            Err(_) => return Ok(false),
        };
        Ok(match (&self.verdict, self.edge, self.witness) {
            (VerdictKind::Split, Some([u, v]), _) if u != v => {
                is_cut_edge(tree, Edge::new(u, v), &window).unwrap_or(false)
            }
            (VerdictKind::NotSplittable, _, Some(w)) => is_witness(tree, w, &window),
            _ => false,
        })
    }
}
