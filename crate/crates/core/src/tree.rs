//! Free trees: leaves, end-deletion, leaf orders, the weighted end-deleted
//! form, terminal edges, and exhaustive enumeration of isomorphism classes.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::ops::Deref;
use std::sync::OnceLock;

use thiserror::Error;

use crate::canon::canonical_form;
use crate::graph::{all_pairs_distances, edge, Edge, GraphError, LabeledGraph, VertexSet};

/// Enumeration cap used when `TREECUBE_MAX_ORDER` is unset.
pub const DEFAULT_MAX_ORDER: usize = 12;

/// Orders above this are refused even when the environment asks for more.
const HARD_MAX_ORDER: usize = 40;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("graph is not a tree")]
    NotATree,
    #[error("tree on {0} vertices has an empty end-deleted tree")]
    TooSmall(usize),
    #[error("the {0}-times end-deleted tree is empty")]
    Exhausted(usize),
    #[error("vertex set does not induce a nonempty subtree")]
    NotASubtree,
    #[error("invalid weighted tree: {0}")]
    InvalidWeights(String),
    #[error("order {order} outside the enumeration range 1..={max}")]
    OrderOutOfRange { order: usize, max: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A connected acyclic graph. The tree on zero vertices is allowed as the
/// result of end-deleting `P_1` or `P_2`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tree(LabeledGraph);

impl Tree {
    pub fn new(g: LabeledGraph) -> Result<Tree, TreeError> {
        if g.order() == 0 || is_tree(&g) {
            Ok(Tree(g))
        } else {
            Err(TreeError::NotATree)
        }
    }

    pub fn from_edges<I>(order: usize, edges: I) -> Result<Tree, TreeError>
    where
        I: IntoIterator<Item = Edge>,
    {
        Tree::new(LabeledGraph::from_edges(order, edges)?)
    }

    pub fn empty() -> Tree {
        Tree(LabeledGraph::empty(0))
    }

    pub fn path(order: usize) -> Tree {
        Tree(LabeledGraph::path(order))
    }

    pub fn star(leaves: usize) -> Tree {
        Tree(LabeledGraph::star(leaves))
    }

    pub fn graph(&self) -> &LabeledGraph {
        &self.0
    }

    pub fn into_graph(self) -> LabeledGraph {
        self.0
    }

    /// Degree-one vertices; the single vertex of `P_1` also counts.
    pub fn leaves(&self) -> VertexSet {
        if self.order() == 1 {
            return VertexSet::from([0]);
        }
        (0..self.order()).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Longest path length; 0 for the empty tree and `P_1`.
    pub fn diameter(&self) -> u32 {
        all_pairs_distances(&self.0).diameter().unwrap_or(0)
    }
}

impl Deref for Tree {
    type Target = LabeledGraph;
    fn deref(&self) -> &LabeledGraph {
        &self.0
    }
}

impl serde::Serialize for Tree {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl std::fmt::Debug for Tree {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Tree({}, {:?})", self.order(), self.edges())
    }
}

/// Connected with exactly `p - 1` edges. The empty graph is not a tree.
pub fn is_tree(g: &LabeledGraph) -> bool {
    g.order() >= 1 && g.size() == g.order() - 1 && g.is_connected()
}

/// Removes every leaf. Also returns, for each surviving vertex, its id in `t`.
pub fn end_deleted_with_labels(t: &Tree) -> (Tree, Vec<usize>) {
    let leaves = t.leaves();
    let keep: Vec<usize> = (0..t.order()).filter(|v| !leaves.contains(v)).collect();
    (Tree(t.induced_subgraph(&keep)), keep)
}

/// The end-deleted tree: `t` with all its leaves removed.
pub fn end_deleted(t: &Tree) -> Tree {
    end_deleted_with_labels(t).0
}

/// End-deletes `k` times; labels refer to vertices of `t`.
pub fn iterated_end_deleted(t: &Tree, k: usize) -> (Tree, Vec<usize>) {
    let mut current = t.clone();
    let mut labels: Vec<usize> = (0..t.order()).collect();
    for _ in 0..k {
        if current.order() == 0 {
            break;
        }
        let (next, keep) = end_deleted_with_labels(&current);
        labels = keep.into_iter().map(|v| labels[v]).collect();
        current = next;
    }
    (current, labels)
}

/// `orders[i]` holds the leaves of the `i`-times end-deleted tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeafOrderPartition {
    pub orders: Vec<VertexSet>,
}

impl LeafOrderPartition {
    /// Index `i` with `v` in `L_i`.
    pub fn order_of(&self, v: usize) -> Option<usize> {
        self.orders.iter().position(|set| set.contains(&v))
    }
}

pub fn leaf_orders(t: &Tree) -> LeafOrderPartition {
    let mut orders = Vec::new();
    let mut current = t.clone();
    let mut labels: Vec<usize> = (0..t.order()).collect();
    while current.order() > 0 {
        orders.push(current.leaves().into_iter().map(|v| labels[v]).collect());
        let (next, keep) = end_deleted_with_labels(&current);
        labels = keep.into_iter().map(|v| labels[v]).collect();
        current = next;
    }
    LeafOrderPartition { orders }
}

/// Vertices at distance exactly `k` from the subtree induced on `subtree`.
pub fn k_periphery(t: &Tree, subtree: &VertexSet, k: u32) -> Result<VertexSet, TreeError> {
    if subtree.is_empty() || subtree.iter().any(|&v| v >= t.order()) {
        return Err(TreeError::NotASubtree);
    }
    let members: Vec<usize> = subtree.iter().copied().collect();
    if !t.induced_subgraph(&members).is_connected() {
        return Err(TreeError::NotASubtree);
    }
    let mut dist: Vec<Option<u32>> = vec![None; t.order()];
    let mut queue = VecDeque::new();
    for &v in subtree {
        dist[v] = Some(0);
        queue.push_back(v);
    }
    while let Some(u) = queue.pop_front() {
        let du = dist[u].expect("queued");
        for &w in t.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    Ok((0..t.order()).filter(|&v| dist[v] == Some(k)).collect())
}

/// End-deleted tree plus, per skeleton vertex, the number of leaves of the
/// original tree hanging from it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedTree {
    skeleton: Tree,
    weights: Vec<usize>,
}

impl WeightedTree {
    /// Every skeleton vertex needs total degree at least two once its leaves
    /// are attached, otherwise it would itself be a leaf.
    pub fn new(skeleton: Tree, weights: Vec<usize>) -> Result<WeightedTree, TreeError> {
        if skeleton.order() == 0 {
            return Err(TreeError::InvalidWeights("empty skeleton".into()));
        }
        if weights.len() != skeleton.order() {
            return Err(TreeError::InvalidWeights(format!(
                "{} weights for {} skeleton vertices",
                weights.len(),
                skeleton.order()
            )));
        }
        if let Some(v) = (0..skeleton.order()).find(|&v| skeleton.degree(v) + weights[v] < 2) {
            return Err(TreeError::InvalidWeights(format!(
                "skeleton vertex {v} would not survive end-deletion"
            )));
        }
        Ok(WeightedTree { skeleton, weights })
    }

    pub fn skeleton(&self) -> &Tree {
        &self.skeleton
    }

    pub fn weights(&self) -> &[usize] {
        &self.weights
    }
}

pub fn weighted_form(t: &Tree) -> Result<WeightedTree, TreeError> {
    if t.order() <= 2 {
        return Err(TreeError::TooSmall(t.order()));
    }
    let (skeleton, labels) = end_deleted_with_labels(t);
    let leaves = t.leaves();
    let weights = labels
        .iter()
        .map(|&v| t.neighbors(v).iter().filter(|w| leaves.contains(w)).count())
        .collect();
    WeightedTree::new(skeleton, weights)
}

/// Attaches `weight(v)` fresh leaves to each skeleton vertex `v`. Skeleton
/// vertices keep their ids; leaves follow in skeleton order.
pub fn expand(w: &WeightedTree) -> Tree {
    let q = w.skeleton.order();
    let total = q + w.weights.iter().sum::<usize>();
    let mut edges = w.skeleton.edges();
    let mut next = q;
    for (v, &count) in w.weights.iter().enumerate() {
        for _ in 0..count {
            edges.push((v, next));
            next += 1;
        }
    }
    Tree::from_edges(total, edges).expect("attaching leaves to a tree yields a tree")
}

/// Edges with at least one degree-one endpoint.
pub fn terminal_edges(t: &Tree) -> BTreeSet<Edge> {
    t.edges()
        .into_iter()
        .filter(|&(u, v)| t.degree(u) == 1 || t.degree(v) == 1)
        .collect()
}

/// Terminal edges of the `k`-times end-deleted tree, in the labels of `t`.
pub fn kth_order_terminal_edges(t: &Tree, k: usize) -> Result<BTreeSet<Edge>, TreeError> {
    let (core, labels) = iterated_end_deleted(t, k);
    if core.order() == 0 {
        return Err(TreeError::Exhausted(k));
    }
    Ok(terminal_edges(&core)
        .into_iter()
        .map(|(u, v)| edge(labels[u], labels[v]))
        .collect())
}

/// One or two central vertices, found by peeling leaves layer by layer.
fn centers(t: &Tree) -> Vec<usize> {
    let n = t.order();
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut remaining = n;
    while remaining > 2 {
        let layer: Vec<usize> = (0..n).filter(|&v| alive[v] && degree[v] <= 1).collect();
        for &v in &layer {
            alive[v] = false;
            for &w in t.neighbors(v) {
                degree[w] = degree[w].saturating_sub(1);
            }
        }
        remaining -= layer.len();
    }
    (0..n).filter(|&v| alive[v]).collect()
}

fn rooted_code(t: &Tree, root: usize, parent: Option<usize>) -> Vec<u8> {
    let mut children: Vec<Vec<u8>> = t
        .neighbors(root)
        .iter()
        .filter(|&&w| Some(w) != parent)
        .map(|&w| rooted_code(t, w, Some(root)))
        .collect();
    children.sort();
    let mut code = vec![1];
    code.extend(children.into_iter().flatten());
    code.push(0);
    code
}

/// Parenthesis code of `t` rooted at its center (or central edge), with
/// children sorted. Equal codes exactly for isomorphic trees; linear up to
/// the sort.
pub fn tree_code(t: &Tree) -> Vec<u8> {
    match centers(t).as_slice() {
        [] => Vec::new(),
        [c] => rooted_code(t, *c, None),
        [a, b] => {
            let mut halves = [rooted_code(t, *a, Some(*b)), rooted_code(t, *b, Some(*a))];
            halves.sort();
            let mut code = vec![2];
            code.extend(halves.into_iter().flatten());
            code
        }
        _ => unreachable!("a tree has at most two centers"),
    }
}

/// Largest order [`enumerate_trees`] accepts: `TREECUBE_MAX_ORDER` when set
/// to a valid number, [`DEFAULT_MAX_ORDER`] otherwise.
pub fn enumeration_cap() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("TREECUBE_MAX_ORDER")
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .map(|cap: usize| cap.clamp(1, HARD_MAX_ORDER))
            .unwrap_or(DEFAULT_MAX_ORDER)
    })
}

static ENUMERATED: [OnceLock<Vec<Tree>>; HARD_MAX_ORDER + 1] =
    [const { OnceLock::new() }; HARD_MAX_ORDER + 1];

fn trees_of_order(p: usize) -> &'static [Tree] {
    ENUMERATED[p].get_or_init(|| {
        if p == 1 {
            return vec![Tree::path(1)];
        }
        let mut seen = HashSet::new();
        let mut found = Vec::new();
        for smaller in trees_of_order(p - 1) {
            for v in 0..smaller.order() {
                let mut edges = smaller.edges();
                edges.push((v, p - 1));
                let grown = Tree::from_edges(p, edges).expect("leaf extension of a tree");
                if seen.insert(tree_code(&grown)) {
                    found.push(grown);
                }
            }
        }
        let mut canonical: Vec<_> = found
            .iter()
            .map(|t| {
                let cert = canonical_form(t);
                let rep = Tree::new(cert.to_graph()).expect("certificate of a tree");
                (cert, rep)
            })
            .collect();
        canonical.sort_by(|a, b| a.0.cmp(&b.0));
        canonical.into_iter().map(|(_, t)| t).collect()
    })
}

/// One representative per isomorphism class of free trees on `p` vertices.
///
/// Representatives are the canonical graphs of their certificates, listed
/// in certificate order, so the output is identical across runs.
pub fn enumerate_trees(p: usize) -> Result<&'static [Tree], TreeError> {
    let max = enumeration_cap();
    if p == 0 || p > max {
        return Err(TreeError::OrderOutOfRange { order: p, max });
    }
    Ok(trees_of_order(p))
}
