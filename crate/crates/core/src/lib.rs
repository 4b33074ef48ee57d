//! Balanced edge cuts in vertex-weighted trees.
//!
//! Given a tree and a tolerance `ε`, find an edge whose removal leaves two
//! components each weighing within `ε` of half the total, or return a
//! witness vertex whose every component is lighter than `S/2 - ε`, which
//! proves that no such edge exists.
//!
//! ```
//! use treesplit::{find_cut_edge_descent, improved_start, ToleranceWindow, Verdict, WeightedTree};
//!
//! let tree = WeightedTree::build(4, vec![1, 1, 1, 1], &[(0, 1), (1, 2), (2, 3)], 0).unwrap();
//! let window = ToleranceWindow::for_tree(&tree, 0).unwrap();
//! let result = find_cut_edge_descent(&tree, &window, improved_start(&tree)).unwrap();
//! assert!(matches!(result.verdict, Verdict::Split { w1: 2, w2: 2, .. }));
//! ```

pub mod baseline;
pub mod bench;
pub mod generators;
pub mod io;
pub mod registry;
pub mod splitter;
pub mod tree;

pub use baseline::{random_edge_baseline, BaselineOutcome};
pub use registry::{MethodRegistry, SplitMethod};
pub use splitter::{
    avg_component_weight, classify_vertex, edge_split_weights, find_cut_edge_descent, find_cut_edge_literal,
    find_witness_brute, improved_start, is_cut_edge, is_witness, min_average_start, oracle_find_all, split_unweighted,
    Classification, CutResult, Domain, SplitError, StartRule, ToleranceWindow, TraceStep, Verdict,
};
pub use tree::{BuildError, Component, Edge, Topology, VertexId, WeightedTree};
