//! Clique structure of tree cubes and cube-root extraction.
//!
//! In `G = P_3(T)` with `diam(T) >= 4` every maximal clique is the 1-span
//! `N[u] ∪ N[v]` of an edge `uv` joining two internal vertices of `T`, and
//! these clique edges form the end-deleted tree. Two such cliques share at
//! least three vertices exactly when their clique edges share an endpoint
//! `w`, and then they share precisely `N[w]`. [`constructive_root`] rebuilds
//! `T` from that structure; [`cube_root`] falls back to enumeration, and
//! every answer is checked against `G` before it is returned.

use std::collections::{BTreeSet, HashMap};
use std::sync::OnceLock;

use serde::Serialize;
use thiserror::Error;

use crate::canon::{canonical_form, find_isomorphism, is_isomorphic, CanonicalForm};
use crate::graph::{edge, edge_span, is_complete, power, Edge, LabeledGraph, VertexSet};
use crate::tree::{
    end_deleted_with_labels, enumerate_trees, enumeration_cap, iterated_end_deleted, Tree,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CubeError {
    /// The graph is complete, so its cube roots are not unique.
    #[error("complete graph: the cube root is not unique")]
    AmbiguousStructure,
    #[error("graph is not the cube of a tree")]
    NotACube,
    #[error("tree of diameter {0} has no clique edges to work with")]
    NoCliqueStructure(u32),
    #[error("the {0}-times end-deleted tree is empty")]
    Exhausted(usize),
    #[error("order {order} exceeds the enumeration limit {max}")]
    OrderBeyondLimit { order: usize, max: usize },
    #[error("clique structure inconsistent with a tree cube: {0}")]
    CliqueStructure(String),
}

/// A maximal clique of a tree cube together with the tree edge it is
/// centred on, when known.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct CliqueRecord {
    pub members: VertexSet,
    pub clique_edge: Option<Edge>,
}

/// Edges of `t` whose endpoints are both internal.
pub fn clique_edges_of_tree(t: &Tree) -> BTreeSet<Edge> {
    let leaves = t.leaves();
    t.edges()
        .into_iter()
        .filter(|(u, v)| !leaves.contains(u) && !leaves.contains(v))
        .collect()
}

/// One record per clique edge, with members the 1-span of the edge in `t`.
pub fn cliques_of_cube(t: &Tree) -> Vec<CliqueRecord> {
    clique_edges_of_tree(t)
        .into_iter()
        .map(|e| CliqueRecord {
            members: edge_span(t, e, 1).expect("clique edges are edges of t"),
            clique_edge: Some(e),
        })
        .collect()
}

/// All inclusion-maximal cliques, each sorted, listed in lexicographic order.
pub fn maximal_cliques(g: &LabeledGraph) -> Vec<VertexSet> {
    fn expand(
        g: &LabeledGraph,
        current: &mut Vec<usize>,
        mut candidates: Vec<usize>,
        mut excluded: Vec<usize>,
        out: &mut Vec<VertexSet>,
    ) {
        if candidates.is_empty() {
            if excluded.is_empty() {
                out.push(current.iter().copied().collect());
            }
            return;
        }
        // Pivot with the most neighbours among the candidates.
        let pivot = candidates
            .iter()
            .chain(&excluded)
            .copied()
            .max_by_key(|&u| candidates.iter().filter(|&&v| g.has_edge(u, v)).count())
            .expect("candidates nonempty");
        let branch: Vec<usize> = candidates
            .iter()
            .copied()
            .filter(|&v| !g.has_edge(pivot, v))
            .collect();
        for v in branch {
            current.push(v);
            let next_candidates = candidates
                .iter()
                .copied()
                .filter(|&w| g.has_edge(v, w))
                .collect();
            let next_excluded = excluded
                .iter()
                .copied()
                .filter(|&w| g.has_edge(v, w))
                .collect();
            expand(g, current, next_candidates, next_excluded, out);
            current.pop();
            candidates.retain(|&w| w != v);
            excluded.push(v);
        }
    }
    let mut out = Vec::new();
    if g.order() > 0 {
        expand(
            g,
            &mut Vec::new(),
            (0..g.order()).collect(),
            Vec::new(),
            &mut out,
        );
    }
    out.sort();
    out
}

/// The end-deleted tree as read off the maximal cliques of a non-complete
/// tree cube.
///
/// Nodes `0..hubs.len()` are skeleton vertices of degree at least two, each
/// the common centre of the cliques listed in `hubs[i]`; the remaining nodes
/// are skeleton leaves, one per clique contained in a single hub.
struct CliqueSkeleton {
    hubs: Vec<Vec<usize>>,
    /// `N_T[w]` for each hub `w`.
    cores: Vec<VertexSet>,
    /// Clique owning each pendant node.
    pendant_clique: Vec<usize>,
    /// Skeleton nodes joined by each clique edge.
    endpoints: Vec<(usize, usize)>,
}

impl CliqueSkeleton {
    fn build(cliques: &[VertexSet]) -> Result<CliqueSkeleton, String> {
        let q = cliques.len();
        if q < 2 {
            return Err(format!("{q} maximal cliques; need at least two"));
        }
        let shared = |e: usize, f: usize| cliques[e].intersection(&cliques[f]).count();
        let line = LabeledGraph::from_fn(q, |e, f| shared(e, f) >= 3);
        if !line.is_connected() {
            return Err("clique adjacency is disconnected".into());
        }
        let hubs: Vec<Vec<usize>> = maximal_cliques(&line)
            .into_iter()
            .map(|h| h.into_iter().collect())
            .collect();
        let mut hubs_of: Vec<Vec<usize>> = vec![Vec::new(); q];
        let mut pair_cover = HashMap::new();
        for (h, members) in hubs.iter().enumerate() {
            for (i, &e) in members.iter().enumerate() {
                hubs_of[e].push(h);
                for &f in &members[i + 1..] {
                    *pair_cover.entry((e, f)).or_insert(0) += 1;
                }
            }
        }
        if pair_cover.len() != line.size() || pair_cover.values().any(|&c| c != 1) {
            return Err("clique adjacency is not the line graph of a tree".into());
        }
        let mut pendant_clique = Vec::new();
        let mut endpoints = Vec::with_capacity(q);
        for (e, owners) in hubs_of.iter().enumerate() {
            match owners.as_slice() {
                [a, b] => endpoints.push((*a, *b)),
                [a] => {
                    endpoints.push((*a, hubs.len() + pendant_clique.len()));
                    pendant_clique.push(e);
                }
                _ => return Err(format!("clique {e} lies in {} hubs", owners.len())),
            }
        }
        let nodes = hubs.len() + pendant_clique.len();
        let skeleton = LabeledGraph::from_edges(nodes, endpoints.iter().map(|&(a, b)| edge(a, b)))
            .map_err(|e| e.to_string())?;
        if nodes != q + 1 || !skeleton.is_connected() {
            return Err("clique adjacency does not describe a tree".into());
        }
        let cores = hubs
            .iter()
            .map(|members| {
                members[1..]
                    .iter()
                    .fold(cliques[members[0]].clone(), |acc, &e| {
                        acc.intersection(&cliques[e]).copied().collect()
                    })
            })
            .collect();
        Ok(CliqueSkeleton {
            hubs,
            cores,
            pendant_clique,
            endpoints,
        })
    }

    fn node_count(&self) -> usize {
        self.hubs.len() + self.pendant_clique.len()
    }

    fn tree(&self) -> Tree {
        Tree::from_edges(
            self.node_count(),
            self.endpoints.iter().map(|&(a, b)| edge(a, b)),
        )
        .expect("checked to be a tree in build")
    }

    /// Cliques whose centre edge touches each node.
    fn stars(&self) -> Vec<BTreeSet<usize>> {
        let mut stars = vec![BTreeSet::new(); self.node_count()];
        for (e, &(a, b)) in self.endpoints.iter().enumerate() {
            stars[a].insert(e);
            stars[b].insert(e);
        }
        stars
    }
}

/// Rebuilds a root of `g` from its maximal cliques, on the vertex labels of
/// `g`, so that `power(root, 3) == g` holds exactly.
///
/// A leaf hanging from skeleton vertex `w` lies in exactly the cliques
/// centred on edges at `w`; an internal vertex `x` lies in those centred on
/// edges within distance one of `x`. Skeleton vertices are matched to graph
/// vertices by that signature and the remaining vertices are attached as
/// leaves. Returns `None` when the heuristic fails or `g` is not the cube of
/// a tree of diameter at least four.
pub fn constructive_root(g: &LabeledGraph) -> Option<Tree> {
    let p = g.order();
    if p < 5 || is_complete(g) || !g.is_connected() {
        return None;
    }
    let cliques = maximal_cliques(g);
    let skeleton = CliqueSkeleton::build(&cliques).ok()?;
    let stars = skeleton.stars();
    let nodes = skeleton.node_count();
    let skeleton_tree = skeleton.tree();
    let reach: Vec<BTreeSet<usize>> = (0..nodes)
        .map(|n| {
            let mut set = stars[n].clone();
            for &m in skeleton_tree.neighbors(n) {
                set.extend(&stars[m]);
            }
            set
        })
        .collect();
    let membership: Vec<BTreeSet<usize>> = (0..p)
        .map(|x| {
            (0..cliques.len())
                .filter(|&e| cliques[e].contains(&x))
                .collect()
        })
        .collect();

    let mut assigned = vec![usize::MAX; nodes];
    let mut used = vec![false; p];
    let hubs = skeleton.hubs.len();
    for n in 0..nodes {
        let pool: &VertexSet = if n < hubs {
            &skeleton.cores[n]
        } else {
            &cliques[skeleton.pendant_clique[n - hubs]]
        };
        let x = pool
            .iter()
            .copied()
            .find(|&x| !used[x] && membership[x] == reach[n])?;
        assigned[n] = x;
        used[x] = true;
    }

    let mut edges: Vec<Edge> = skeleton
        .endpoints
        .iter()
        .map(|&(a, b)| edge(assigned[a], assigned[b]))
        .collect();
    for x in (0..p).filter(|&x| !used[x]) {
        let parent = (0..nodes).find(|&n| stars[n] == membership[x])?;
        edges.push(edge(x, assigned[parent]));
    }
    let root = Tree::from_edges(p, edges).ok()?;
    (power(&root, 3) == *g).then_some(root)
}

/// The end-deleted tree of the cube root of `g`, rebuilt from the way the
/// maximal cliques of `g` overlap.
pub fn tree_of_cliques(g: &LabeledGraph) -> Result<Tree, CubeError> {
    match cube_root(g) {
        RootResult::AmbiguousComplete { .. } => return Err(CubeError::AmbiguousStructure),
        RootResult::NotACube => return Err(CubeError::NotACube),
        RootResult::Unique(_) => {}
    }
    if g.order() <= 2 {
        // Cubes of P_1 and P_2 have no clique edges.
        return Ok(Tree::empty());
    }
    CliqueSkeleton::build(&maximal_cliques(g))
        .map(|s| s.tree())
        .map_err(CubeError::CliqueStructure)
}

/// Cliques centred on an edge with an endpoint that is a leaf of the
/// end-deleted tree.
pub fn terminal_cliques(t: &Tree) -> Result<Vec<CliqueRecord>, CubeError> {
    let diameter = t.diameter();
    if diameter < 4 {
        return Err(CubeError::NoCliqueStructure(diameter));
    }
    let (core, labels) = end_deleted_with_labels(t);
    let pendant: VertexSet = core.leaves().into_iter().map(|v| labels[v]).collect();
    Ok(cliques_of_cube(t)
        .into_iter()
        .filter(|r| {
            let (u, v) = r
                .clique_edge
                .expect("records from cliques_of_cube carry edges");
            pendant.contains(&u) || pendant.contains(&v)
        })
        .collect())
}

/// Terminal cliques of the cube of the `k`-times end-deleted tree, in the
/// labels of `t`.
pub fn kth_order_terminal_cliques(t: &Tree, k: usize) -> Result<Vec<CliqueRecord>, CubeError> {
    let (core, labels) = iterated_end_deleted(t, k);
    if core.order() == 0 {
        return Err(CubeError::Exhausted(k));
    }
    let relabel = |v: usize| labels[v];
    Ok(terminal_cliques(&core)?
        .into_iter()
        .map(|r| CliqueRecord {
            members: r.members.into_iter().map(relabel).collect(),
            clique_edge: r.clique_edge.map(|(u, v)| edge(relabel(u), relabel(v))),
        })
        .collect())
}

/// Outcome of cube-root extraction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootResult {
    /// The root tree, on the vertex labels of the input.
    Unique(Tree),
    /// The input is complete on at least three vertices; every tree of
    /// diameter at most three cubes to it. Above the enumeration limit the
    /// roots are not listed.
    AmbiguousComplete {
        roots: Vec<Tree>,
        roots_enumerated: bool,
    },
    NotACube,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RootKind {
    Unique,
    AmbiguousComplete,
    NotACube,
}

/// Serializable summary of a [`RootResult`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootReport {
    pub kind: RootKind,
    pub order: usize,
    pub roots: Vec<Vec<Edge>>,
    pub certificates: Vec<CanonicalForm>,
    pub roots_enumerated: bool,
}

impl RootResult {
    pub fn kind(&self) -> RootKind {
        match self {
            RootResult::Unique(_) => RootKind::Unique,
            RootResult::AmbiguousComplete { .. } => RootKind::AmbiguousComplete,
            RootResult::NotACube => RootKind::NotACube,
        }
    }

    pub fn roots(&self) -> &[Tree] {
        match self {
            RootResult::Unique(t) => std::slice::from_ref(t),
            RootResult::AmbiguousComplete { roots, .. } => roots,
            RootResult::NotACube => &[],
        }
    }

    pub fn report(&self, order: usize) -> RootReport {
        RootReport {
            kind: self.kind(),
            order,
            roots: self.roots().iter().map(|t| t.edges()).collect(),
            certificates: self.roots().iter().map(|t| canonical_form(t)).collect(),
            roots_enumerated: !matches!(
                self,
                RootResult::AmbiguousComplete {
                    roots_enumerated: false,
                    ..
                }
            ),
        }
    }
}

fn complete_roots(p: usize) -> RootResult {
    match enumerate_trees(p) {
        Ok(trees) => RootResult::AmbiguousComplete {
            roots: trees
                .iter()
                .filter(|t| t.diameter() <= 3)
                .cloned()
                .collect(),
            roots_enumerated: true,
        },
        Err(_) => RootResult::AmbiguousComplete {
            roots: Vec::new(),
            roots_enumerated: false,
        },
    }
}

/// Relabels `t` onto `g` along an isomorphism `P_3(t) -> g`.
fn relabel_onto(t: &Tree, g: &LabeledGraph) -> Option<Tree> {
    let map = find_isomorphism(&power(t, 3), g)?;
    Some(Tree::new(t.permute(&map)).expect("relabelled tree"))
}

const TABLE_SLOTS: usize = 41;
static CUBE_TABLES: [OnceLock<HashMap<CanonicalForm, usize>>; TABLE_SLOTS] =
    [const { OnceLock::new() }; TABLE_SLOTS];

/// Certificate of each cube on `p` vertices, keyed to the first tree in
/// enumeration order that produces it.
fn cube_table(p: usize) -> Option<&'static HashMap<CanonicalForm, usize>> {
    let trees = enumerate_trees(p).ok()?;
    let slot = CUBE_TABLES.get(p)?;
    Some(slot.get_or_init(|| {
        let mut table = HashMap::new();
        for (i, t) in trees.iter().enumerate() {
            table.entry(canonical_form(&power(t, 3))).or_insert(i);
        }
        table
    }))
}

/// Extracts the cube root of `g`.
///
/// The clique-structure reconstruction runs first; when it fails the cube
/// of every tree on `|V(g)|` vertices is compared against `g`, as long as
/// that order is within the enumeration limit. A `Unique` root always
/// satisfies `power(root, 3) == g` on the labels of `g`.
pub fn cube_root(g: &LabeledGraph) -> RootResult {
    let p = g.order();
    if p == 0 || !g.is_connected() {
        return RootResult::NotACube;
    }
    if is_complete(g) {
        return match p {
            1 | 2 => RootResult::Unique(Tree::path(p)),
            _ => complete_roots(p),
        };
    }
    if let Some(root) = constructive_root(g) {
        return RootResult::Unique(root);
    }
    let Some(table) = cube_table(p) else {
        return RootResult::NotACube;
    };
    match table.get(&canonical_form(g)) {
        Some(&i) => {
            let tree = &enumerate_trees(p).expect("table exists")[i];
            RootResult::Unique(relabel_onto(tree, g).expect("certificates matched"))
        }
        None => RootResult::NotACube,
    }
}

/// Brute-force counterpart of [`cube_root`]: cubes every tree on
/// `|V(g)|` vertices and keeps those isomorphic to `g`.
pub fn cube_root_oracle(g: &LabeledGraph) -> Result<RootResult, CubeError> {
    let p = g.order();
    if p == 0 {
        return Ok(RootResult::NotACube);
    }
    let trees = enumerate_trees(p).map_err(|_| CubeError::OrderBeyondLimit {
        order: p,
        max: enumeration_cap(),
    })?;
    let matches: Vec<Tree> = trees
        .iter()
        .filter(|t| is_isomorphic(&power(t, 3), g))
        .cloned()
        .collect();
    Ok(match matches.first() {
        None => RootResult::NotACube,
        Some(_) if p >= 3 && is_complete(g) => RootResult::AmbiguousComplete {
            roots: matches,
            roots_enumerated: true,
        },
        Some(first) => RootResult::Unique(relabel_onto(first, g).expect("isomorphic cube")),
    })
}

pub fn is_tree_cube(g: &LabeledGraph) -> bool {
    cube_root(g).kind() != RootKind::NotACube
}

/// Leaves of the unique cube root, as vertices of `g`.
pub fn terminal_vertices(g: &LabeledGraph) -> Result<VertexSet, CubeError> {
    match cube_root(g) {
        RootResult::Unique(t) => Ok(t.leaves()),
        RootResult::AmbiguousComplete { .. } => Err(CubeError::AmbiguousStructure),
        RootResult::NotACube => Err(CubeError::NotACube),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(items: &[usize]) -> VertexSet {
        items.iter().copied().collect()
    }

    /// Centre 0 with `legs` paths of length `len`.
    fn spider(legs: usize, len: usize) -> Tree {
        let mut edges = Vec::new();
        for leg in 0..legs {
            let base = 1 + leg * len;
            edges.push((0, base));
            for i in 1..len {
                edges.push((base + i - 1, base + i));
            }
        }
        Tree::from_edges(1 + legs * len, edges).unwrap()
    }

    fn brute_force_maximal_cliques(g: &LabeledGraph) -> Vec<VertexSet> {
        let n = g.order();
        let is_clique = |mask: u32| {
            (0..n).all(|u| {
                (u + 1..n).all(|v| mask >> u & 1 == 0 || mask >> v & 1 == 0 || g.has_edge(u, v))
            })
        };
        let mut out: Vec<VertexSet> = (1u32..1 << n)
            .filter(|&m| is_clique(m) && (0..n).all(|w| m >> w & 1 == 1 || !is_clique(m | 1 << w)))
            .map(|m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
            .collect();
        out.sort();
        out
    }

    #[test]
    fn clique_edges_are_internal_edges() {
        assert_eq!(
            clique_edges_of_tree(&Tree::path(5)),
            BTreeSet::from([(1, 2), (2, 3)])
        );
        assert!(clique_edges_of_tree(&Tree::star(4)).is_empty());
        assert_eq!(clique_edges_of_tree(&Tree::path(7)).len(), 4);
    }

    #[test]
    fn cliques_from_the_tree_side() {
        let records = cliques_of_cube(&Tree::path(5));
        let members: Vec<_> = records.iter().map(|r| r.members.clone()).collect();
        assert_eq!(members, vec![set(&[0, 1, 2, 3]), set(&[1, 2, 3, 4])]);
        let p7 = cliques_of_cube(&Tree::path(7));
        let centred = p7.iter().find(|r| r.clique_edge == Some((2, 3))).unwrap();
        assert_eq!(centred.members, set(&[1, 2, 3, 4]));
    }

    #[test]
    fn maximal_cliques_match_brute_force() {
        let cube = power(&LabeledGraph::path(5), 3);
        let expected = brute_force_maximal_cliques(&cube);
        assert_eq!(expected, vec![set(&[0, 1, 2, 3]), set(&[1, 2, 3, 4])]);
        assert_eq!(maximal_cliques(&cube), expected);
        assert_eq!(
            maximal_cliques(&LabeledGraph::complete(4)),
            vec![set(&[0, 1, 2, 3])]
        );
        assert_eq!(maximal_cliques(&LabeledGraph::cycle(4)).len(), 4);
        for g in [
            LabeledGraph::cycle(7),
            LabeledGraph::complete_bipartite(3, 4),
            power(&spider(3, 2).into_graph(), 2),
        ] {
            assert_eq!(maximal_cliques(&g), brute_force_maximal_cliques(&g));
        }
    }

    #[test]
    fn tree_of_cliques_matches_end_deletion() {
        let t = tree_of_cliques(&power(&LabeledGraph::path(5), 3)).unwrap();
        assert!(is_isomorphic(&t, &LabeledGraph::path(3)));
        let t = tree_of_cliques(&power(&LabeledGraph::path(7), 3)).unwrap();
        assert!(is_isomorphic(&t, &LabeledGraph::path(5)));
        assert_eq!(
            tree_of_cliques(&LabeledGraph::complete(5)),
            Err(CubeError::AmbiguousStructure)
        );
        assert_eq!(
            tree_of_cliques(&LabeledGraph::cycle(6)),
            Err(CubeError::NotACube)
        );
    }

    #[test]
    fn terminal_cliques_of_paths_and_spiders() {
        assert_eq!(terminal_cliques(&Tree::path(5)).unwrap().len(), 2);
        let p7: Vec<_> = terminal_cliques(&Tree::path(7))
            .unwrap()
            .into_iter()
            .map(|r| r.clique_edge.unwrap())
            .collect();
        assert_eq!(p7, vec![(1, 2), (4, 5)]);
        assert_eq!(terminal_cliques(&spider(3, 3)).unwrap().len(), 3);
        assert_eq!(
            terminal_cliques(&Tree::star(5)),
            Err(CubeError::NoCliqueStructure(2))
        );
    }

    #[test]
    fn higher_order_terminal_cliques() {
        let p7 = kth_order_terminal_cliques(&Tree::path(7), 1).unwrap();
        let p5: Vec<_> = terminal_cliques(&Tree::path(5))
            .unwrap()
            .into_iter()
            .map(|r| CliqueRecord {
                members: r.members.iter().map(|v| v + 1).collect(),
                clique_edge: r.clique_edge.map(|(a, b)| (a + 1, b + 1)),
            })
            .collect();
        assert_eq!(p7, p5);
        assert_eq!(
            kth_order_terminal_cliques(&Tree::path(5), 1),
            Err(CubeError::NoCliqueStructure(2))
        );
        assert_eq!(
            kth_order_terminal_cliques(&Tree::path(9), 1).unwrap().len(),
            2
        );
        assert_eq!(
            kth_order_terminal_cliques(&Tree::path(3), 2),
            Err(CubeError::Exhausted(2))
        );
        assert_eq!(
            kth_order_terminal_cliques(&Tree::path(7), 0),
            terminal_cliques(&Tree::path(7))
        );
    }

    #[test]
    fn cube_roots_of_small_graphs() {
        let k5_minus = power(&LabeledGraph::path(5), 3);
        match cube_root(&k5_minus) {
            RootResult::Unique(t) => {
                assert!(is_isomorphic(&t, &LabeledGraph::path(5)));
                assert_eq!(power(&t, 3), k5_minus);
            }
            other => panic!("unexpected {other:?}"),
        }
        match cube_root(&LabeledGraph::complete(4)) {
            RootResult::AmbiguousComplete {
                roots,
                roots_enumerated: true,
            } => assert_eq!(roots.len(), 2),
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(cube_root(&LabeledGraph::cycle(6)), RootResult::NotACube);
        assert_eq!(cube_root(&LabeledGraph::empty(3)), RootResult::NotACube);
        assert_eq!(
            cube_root(&LabeledGraph::empty(1)),
            RootResult::Unique(Tree::path(1))
        );
        assert_eq!(
            cube_root(&LabeledGraph::complete(2)),
            RootResult::Unique(Tree::path(2))
        );
    }

    #[test]
    fn oracle_on_small_graphs() {
        let k5_minus = power(&LabeledGraph::path(5), 3);
        assert_eq!(
            cube_root_oracle(&k5_minus).unwrap().kind(),
            RootKind::Unique
        );
        assert_eq!(
            cube_root_oracle(&LabeledGraph::complete(4))
                .unwrap()
                .roots()
                .len(),
            2
        );
        assert_eq!(
            cube_root_oracle(&LabeledGraph::cycle(6)).unwrap(),
            RootResult::NotACube
        );
        assert_eq!(
            cube_root_oracle(&LabeledGraph::empty(1)).unwrap(),
            RootResult::Unique(Tree::path(1))
        );
        assert_eq!(
            cube_root_oracle(&LabeledGraph::complete(2)).unwrap(),
            RootResult::Unique(Tree::path(2))
        );
        assert!(matches!(
            cube_root_oracle(&LabeledGraph::empty(enumeration_cap() + 1)),
            Err(CubeError::OrderBeyondLimit { .. })
        ));
    }

    #[test]
    fn complete_graphs_above_the_limit_are_not_enumerated() {
        let big = LabeledGraph::complete(enumeration_cap() + 1);
        assert_eq!(
            cube_root(&big),
            RootResult::AmbiguousComplete {
                roots: Vec::new(),
                roots_enumerated: false
            }
        );
        assert!(!cube_root(&big).report(big.order()).roots_enumerated);
    }

    #[test]
    fn tree_cube_membership() {
        let mut k5_minus_e = LabeledGraph::complete(5).edges();
        k5_minus_e.retain(|&e| e != (0, 4));
        assert!(is_tree_cube(
            &LabeledGraph::from_edges(5, k5_minus_e).unwrap()
        ));
        assert!(!is_tree_cube(&LabeledGraph::path(5)));
        assert!((3..8).all(|p| is_tree_cube(&LabeledGraph::complete(p))));
    }

    #[test]
    fn terminal_vertices_come_from_the_root() {
        assert_eq!(
            terminal_vertices(&power(&LabeledGraph::path(5), 3)).unwrap(),
            set(&[0, 4])
        );
        assert_eq!(
            terminal_vertices(&power(&LabeledGraph::path(7), 3)).unwrap(),
            set(&[0, 6])
        );
        assert_eq!(
            terminal_vertices(&LabeledGraph::complete(5)),
            Err(CubeError::AmbiguousStructure)
        );
        assert_eq!(
            terminal_vertices(&LabeledGraph::cycle(5)),
            Err(CubeError::NotACube)
        );
    }

    #[test]
    fn constructive_path_recovers_every_tree_with_a_clique_structure() {
        for p in 5..=11 {
            for t in enumerate_trees(p)
                .unwrap()
                .iter()
                .filter(|t| t.diameter() >= 4)
            {
                let g = power(t, 3);
                let root = constructive_root(&g).unwrap_or_else(|| panic!("no root for {t:?}"));
                assert_eq!(power(&root, 3), g);
            }
        }
    }

    #[test]
    fn report_lists_edges_and_certificates() {
        let report = cube_root(&LabeledGraph::complete(4)).report(4);
        assert_eq!(report.kind, RootKind::AmbiguousComplete);
        assert_eq!(report.roots.len(), 2);
        assert_eq!(report.certificates.len(), 2);
        let report = RootResult::NotACube.report(6);
        assert!(report.roots.is_empty() && report.roots_enumerated);
    }
}
