#![allow(dead_code)]

use itertools::Itertools;

use treesplit::{Component, Edge, ToleranceWindow, Topology, VertexId, WeightedTree};

/// The 13-vertex example tree, weights in tenths (S = 4.7).
///
/// 0:0.2 1:0.1 2:0.6 3:0.3 4:0.7 5:0.4 6:0.2 7:0.1 8:0.3 9:0.5 10:0.6 11:0.4 12:0.3
/// Vertex 2 (weight 0.6, degree 5) is the witness; vertex 3 (0.3) the other hub.
pub const SAMPLE_WEIGHTS: [i64; 13] = [2, 1, 6, 3, 7, 4, 2, 1, 3, 5, 6, 4, 3];
pub const SAMPLE_EDGES: [(usize, usize); 12] = [
    (0, 1),
    (1, 2),
    (2, 3),
    (1, 12),
    (2, 7),
    (2, 10),
    (2, 11),
    (7, 8),
    (7, 9),
    (3, 4),
    (3, 5),
    (3, 6),
];
pub const SAMPLE_HEAVY: VertexId = 2;
pub const SAMPLE_HUB: VertexId = 3;

pub const SAMPLE_FILE: &str = "\
# 13-vertex example, S = 4.7
tree 13 scale=1
v 0 0.2
v 1 0.1
v 2 0.6
v 3 0.3
v 4 0.7
v 5 0.4
v 6 0.2
v 7 0.1
v 8 0.3
v 9 0.5
v 10 0.6
v 11 0.4
v 12 0.3
e 0 1
e 1 2
e 2 3
e 1 12
e 2 7
e 2 10
e 2 11
e 7 8
e 7 9
e 3 4
e 3 5
e 3 6
";

pub fn sample_tree() -> WeightedTree {
    WeightedTree::build(13, SAMPLE_WEIGHTS.to_vec(), &SAMPLE_EDGES, 1).unwrap()
}

/// ε = 0.05 at scale 1.
pub fn sample_window() -> ToleranceWindow {
    ToleranceWindow::for_tree(&sample_tree(), 1).unwrap()
}

/// Converse counterexample: 2 - 1(v) - 1(hub) with hub leaves 2, 2, 1, 1.
pub const COUNTER_WEIGHTS: [i64; 7] = [2, 1, 1, 2, 2, 1, 1];
pub const COUNTER_EDGES: [(usize, usize); 6] = [(0, 1), (1, 2), (2, 3), (2, 4), (2, 5), (2, 6)];
pub const COUNTER_V: VertexId = 1;
pub const COUNTER_HUB: VertexId = 2;

pub fn counter_tree() -> WeightedTree {
    WeightedTree::build(7, COUNTER_WEIGHTS.to_vec(), &COUNTER_EDGES, 0).unwrap()
}

/// ε = 1.
pub fn counter_window() -> ToleranceWindow {
    ToleranceWindow::for_tree(&counter_tree(), 2).unwrap()
}

pub fn unit_path(n: usize) -> WeightedTree {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    WeightedTree::build(n, vec![1; n], &edges, 0).unwrap()
}

/// Cut edges by removing each edge and flood-filling one side from scratch.
/// Shares nothing with the library's traversals.
pub fn brute_cut_edges(tree: &WeightedTree, doubled_epsilon: i64) -> Vec<Edge> {
    let n = tree.vertex_count();
    let total: i128 = tree.weights().iter().map(|&w| w as i128).sum();
    let mut adj = vec![Vec::new(); n];
    for e in tree.edges() {
        adj[e.u].push(e.v);
        adj[e.v].push(e.u);
    }
    let mut found = Vec::new();
    for e in tree.edges() {
        let mut seen = vec![false; n];
        let mut stack = vec![e.u];
        seen[e.u] = true;
        let mut side: i128 = 0;
        while let Some(x) = stack.pop() {
            side += tree.weight(x) as i128;
            for &y in &adj[x] {
                let crosses = (x == e.u && y == e.v) || (x == e.v && y == e.u);
                if !seen[y] && !crosses {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        let ok = |w: i128| (2 * w - total).abs() <= doubled_epsilon as i128;
        if ok(side) && ok(total - side) {
            found.push(*e);
        }
    }
    found
}

/// Witness check by direct flood fill of every component of T - {v}.
pub fn brute_is_witness(tree: &WeightedTree, v: VertexId, doubled_epsilon: i64) -> bool {
    let total = tree.total_weight() as i128;
    let comps: Vec<Component> = tree.components_without(v);
    let n = tree.vertex_count();
    let mut seen = vec![false; n];
    seen[v] = true;
    let mut weights = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut w: i128 = 0;
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(x) = stack.pop() {
            w += tree.weight(x) as i128;
            for &y in tree.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        weights.push(w);
    }
    assert_eq!(weights.len(), comps.len());
    weights.iter().all(|&w| 2 * w < total - doubled_epsilon as i128)
}

/// Number of spanning trees by the matrix-tree theorem: determinant of the
/// Laplacian with one row and column removed, via fraction-free elimination.
pub fn kirchhoff_count(n: usize, edges: &[Edge]) -> i128 {
    let mut lap = vec![vec![0i128; n]; n];
    for e in edges {
        lap[e.u][e.u] += 1;
        lap[e.v][e.v] += 1;
        lap[e.u][e.v] -= 1;
        lap[e.v][e.u] -= 1;
    }
    let m = n - 1;
    let mut a: Vec<Vec<i128>> = (1..n).map(|i| lap[i][1..].to_vec()).collect();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..m {
        if a[k][k] == 0 {
            match (k + 1..m).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..m {
            for j in k + 1..m {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[m - 1][m - 1]
}

/// Every spanning tree of a graph by testing each (n-1)-subset of edges.
pub fn enumerate_spanning_trees(n: usize, edges: &[Edge]) -> Vec<Vec<Edge>> {
    edges
        .iter()
        .copied()
        .combinations(n - 1)
        .filter(|subset| Topology::new(n, subset.clone()).with_unit_weights().is_ok())
        .collect()
}

/// Prüfer code of a labeled tree by repeatedly stripping the smallest leaf.
pub fn prufer_encode(n: usize, edges: &[Edge]) -> Vec<usize> {
    let mut adj: Vec<std::collections::BTreeSet<usize>> = vec![Default::default(); n];
    for e in edges {
        adj[e.u].insert(e.v);
        adj[e.v].insert(e.u);
    }
    let mut code = Vec::new();
    for _ in 0..n.saturating_sub(2) {
        let leaf = (0..n).find(|&x| adj[x].len() == 1).unwrap();
        let parent = *adj[leaf].iter().next().unwrap();
        code.push(parent);
        adj[parent].remove(&leaf);
        adj[leaf].clear();
    }
    code
}
