//! Search methods behind a common trait, looked up by name at runtime.

use crate::splitter::{
    find_cut_edge_descent, find_cut_edge_literal, find_witness_brute, oracle_find_all, CutResult, SplitError,
    ToleranceWindow, Verdict,
};
use crate::tree::{VertexId, WeightedTree};

pub trait SplitMethod: Send + Sync {
    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str;

    /// Whether the start vertex affects the run.
    fn uses_start(&self) -> bool {
        true
    }

    fn split(&self, tree: &WeightedTree, window: &ToleranceWindow, start: VertexId) -> Result<CutResult, SplitError>;
}

pub struct Descent;

impl SplitMethod for Descent {
    fn name(&self) -> &'static str {
        "descent"
    }

    fn description(&self) -> &'static str {
        "single subtree-sum pass, then walk toward the heavy side (O(n))"
    }

    fn split(&self, tree: &WeightedTree, window: &ToleranceWindow, start: VertexId) -> Result<CutResult, SplitError> {
        find_cut_edge_descent(tree, window, start)
    }
}

pub struct Literal;

impl SplitMethod for Literal {
    fn name(&self) -> &'static str {
        "literal"
    }

    fn description(&self) -> &'static str {
        "recompute component weights by traversal at every step"
    }

    fn split(&self, tree: &WeightedTree, window: &ToleranceWindow, start: VertexId) -> Result<CutResult, SplitError> {
        find_cut_edge_literal(tree, window, start)
    }
}

/// Exhaustive check of every edge; witnesses come from a scan of every vertex.
/// The trace is always empty.
pub struct Oracle;

impl SplitMethod for Oracle {
    fn name(&self) -> &'static str {
        "oracle"
    }

    fn description(&self) -> &'static str {
        "test every edge; scan every vertex for a witness"
    }

    fn uses_start(&self) -> bool {
        false
    }

    fn split(&self, tree: &WeightedTree, window: &ToleranceWindow, _start: VertexId) -> Result<CutResult, SplitError> {
        window.check_matches(tree)?;
        let verdict = match oracle_find_all(tree, window).first() {
            Some(&edge) => {
                let w1 = tree.side_weight(edge.v, edge.u);
                Verdict::Split {
                    edge,
                    w1,
                    w2: tree.total_weight() - w1,
                }
            }
            None => Verdict::NotSplittable {
                witness: find_witness_brute(tree, window).ok_or(SplitError::NoCertificate)?,
            },
        };
        Ok(CutResult {
            verdict,
            trace: Vec::new(),
        })
    }
}

pub struct MethodRegistry {
    methods: Vec<Box<dyn SplitMethod>>,
}

impl MethodRegistry {
    pub fn empty() -> MethodRegistry {
        MethodRegistry { methods: Vec::new() }
    }

    /// `descent`, `literal` and `oracle`.
    pub fn builtin() -> MethodRegistry {
        let mut registry = MethodRegistry::empty();
        registry.register(Box::new(Descent));
        registry.register(Box::new(Literal));
        registry.register(Box::new(Oracle));
        registry
    }

    /// Adds a method, replacing any existing one with the same name.
    pub fn register(&mut self, method: Box<dyn SplitMethod>) {
        self.methods.retain(|m| m.name() != method.name());
        self.methods.push(method);
    }

    pub fn get(&self, name: &str) -> Option<&dyn SplitMethod> {
        self.methods.iter().find(|m| m.name() == name).map(|m| m.as_ref())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.methods.iter().map(|m| m.name()).collect()
    }
}

impl Default for MethodRegistry {
    fn default() -> Self {
        MethodRegistry::builtin()
    }
}
