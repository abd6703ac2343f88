//! Simple undirected graphs on dense vertex ids `0..p`, hop distances,
//! graph powers and vertex/edge spans.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Unordered vertex pair, always stored with the smaller id first.
pub type Edge = (usize, usize);

/// Set of vertex ids in ascending order.
pub type VertexSet = BTreeSet<usize>;

/// Builds the normalized form of an unordered pair.
pub fn edge(u: usize, v: usize) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("graph6 offset {offset}: {message}")]
    Graph6 { offset: usize, message: String },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("{{{0}, {1}}} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("vertices are not mutually reachable")]
    Unreachable,
    #[error("graph is disconnected")]
    Disconnected,
}

/// Input and output encodings understood by [`parse_graph`] and
/// [`LabeledGraph::encode`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphFormat {
    /// Vertex count on the first line, then one `u v` pair per line.
    #[default]
    EdgeList,
    Graph6,
}

/// A simple undirected graph whose vertices are exactly `0..order`.
///
/// Values are immutable once built; every operation returns a new graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LabeledGraph {
    adj: Vec<Vec<usize>>,
    matrix: Vec<bool>,
    size: usize,
}

impl LabeledGraph {
    /// Graph on `order` vertices with no edges.
    pub fn empty(order: usize) -> Self {
        LabeledGraph {
            adj: vec![Vec::new(); order],
            matrix: vec![false; order * order],
            size: 0,
        }
    }

    /// Builds a graph, rejecting self-loops, duplicates and out-of-range ids.
    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut g = LabeledGraph::empty(order);
        for (u, v) in edges {
            for w in [u, v] {
                if w >= order {
                    return Err(GraphError::VertexOutOfRange { vertex: w, order });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if g.matrix[u * order + v] {
                let (a, b) = edge(u, v);
                return Err(GraphError::DuplicateEdge(a, b));
            }
            g.matrix[u * order + v] = true;
            g.matrix[v * order + u] = true;
            g.adj[u].push(v);
            g.adj[v].push(u);
            g.size += 1;
        }
        for list in &mut g.adj {
            list.sort_unstable();
        }
        Ok(g)
    }

    /// Builds a graph from an adjacency predicate evaluated on every pair `u < v`.
    pub fn from_fn(order: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut edges = Vec::new();
        for v in 0..order {
            for u in 0..v {
                if adjacent(u, v) {
                    edges.push((u, v));
                }
            }
        }
        LabeledGraph::from_edges(order, edges).expect("pairs u < v are always valid")
    }

    pub fn complete(order: usize) -> Self {
        LabeledGraph::from_fn(order, |_, _| true)
    }

    /// Path `0 - 1 - ... - (order-1)`.
    pub fn path(order: usize) -> Self {
        LabeledGraph::from_fn(order, |u, v| v == u + 1)
    }

    /// Cycle on `order >= 3` vertices.
    pub fn cycle(order: usize) -> Self {
        assert!(order >= 3, "cycles need at least three vertices");
        LabeledGraph::from_fn(order, |u, v| v == u + 1 || (u == 0 && v == order - 1))
    }

    /// Star `K_{1,leaves}` centred on vertex 0.
    pub fn star(leaves: usize) -> Self {
        LabeledGraph::from_fn(leaves + 1, |u, _| u == 0)
    }

    /// Complete bipartite graph with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        LabeledGraph::from_fn(a + b, |u, v| u < a && v >= a)
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let n = self.order();
        u < n && v < n && self.matrix[u * n + v]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.size);
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    /// Subgraph induced on `keep`, relabelled so that `keep[i]` becomes `i`.
    pub fn induced_subgraph(&self, keep: &[usize]) -> LabeledGraph {
        LabeledGraph::from_fn(keep.len(), |i, j| self.has_edge(keep[i], keep[j]))
    }

    /// Deletes the given vertices; survivors keep their relative order.
    pub fn remove_vertices(&self, removed: &VertexSet) -> LabeledGraph {
        let keep: Vec<usize> = (0..self.order()).filter(|v| !removed.contains(v)).collect();
        self.induced_subgraph(&keep)
    }

    /// The card `G - v`: vertices above `v` shift down by one.
    pub fn remove_vertex(&self, v: usize) -> LabeledGraph {
        self.remove_vertices(&VertexSet::from([v]))
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> LabeledGraph {
        assert_eq!(perm.len(), self.order());
        let edges = self.edges().into_iter().map(|(u, v)| (perm[u], perm[v]));
        LabeledGraph::from_edges(self.order(), edges).expect("a permutation preserves simplicity")
    }

    fn bfs(&self, source: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.order()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].expect("queued vertices are labelled");
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Vertex sets of the connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order()];
        let mut out = Vec::new();
        for s in 0..self.order() {
            if seen[s] {
                continue;
            }
            let mut comp: Vec<usize> = Vec::new();
            for (v, d) in self.bfs(s).into_iter().enumerate() {
                if d.is_some() {
                    seen[v] = true;
                    comp.push(v);
                }
            }
            out.push(comp);
        }
        out
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.order() == 0 || self.bfs(0).iter().all(Option::is_some)
    }

    /// Vertex count line followed by one `u v` line per edge.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.order());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// graph6 string without the optional `>>graph6<<` header.
    pub fn to_graph6(&self) -> String {
        let n = self.order();
        let mut bytes: Vec<u8> = Vec::new();
        if n <= 62 {
            bytes.push(n as u8 + 63);
        } else if n <= 258_047 {
            bytes.push(126);
            for shift in [12, 6, 0] {
                bytes.push(((n >> shift) & 63) as u8 + 63);
            }
        } else {
            bytes.extend([126, 126]);
            for shift in [30, 24, 18, 12, 6, 0] {
                bytes.push(((n >> shift) & 63) as u8 + 63);
            }
        }
        let mut acc = 0u8;
        let mut filled = 0;
        for v in 1..n {
            for u in 0..v {
                acc = (acc << 1) | u8::from(self.has_edge(u, v));
                filled += 1;
                if filled == 6 {
                    bytes.push(acc + 63);
                    acc = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            bytes.push((acc << (6 - filled)) + 63);
        }
        String::from_utf8(bytes).expect("graph6 bytes are printable ASCII")
    }

    pub fn encode(&self, format: GraphFormat) -> String {
        match format {
            GraphFormat::EdgeList => self.to_edge_list(),
            GraphFormat::Graph6 => format!("{}\n", self.to_graph6()),
        }
    }
}

/// Serialized as `{"order": p, "edges": [[u, v], ...]}`.
impl Serialize for LabeledGraph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("LabeledGraph", 2)?;
        s.serialize_field("order", &self.order())?;
        s.serialize_field("edges", &self.edges())?;
        s.end()
    }
}

impl fmt::Debug for LabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LabeledGraph({}, {:?})", self.order(), self.edges())
    }
}

/// Parses the native edge-list format.
///
/// Blank lines and `#` comments are skipped. Line numbers in errors are
/// 1-based and refer to the original text.
pub fn parse_edge_list(text: &str) -> Result<LabeledGraph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (header_line, header) = lines.next().ok_or(GraphError::Parse {
        line: 1,
        message: "missing vertex count".into(),
    })?;
    let order: usize = header.parse().map_err(|_| GraphError::Parse {
        line: header_line,
        message: format!("expected a vertex count, found {header:?}"),
    })?;
    let mut seen = std::collections::HashSet::new();
    let mut edges = Vec::new();
    for (line, content) in lines {
        let at_line = |message: String| GraphError::Parse { line, message };
        let fields: Vec<&str> = content.split_whitespace().collect();
        let [a, b] = fields.as_slice() else {
            return Err(at_line(format!("expected \"u v\", found {content:?}")));
        };
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| at_line(format!("invalid vertex id {s:?}")))
        };
        let (u, v) = (parse(a)?, parse(b)?);
        let problem = if u >= order || v >= order {
            Some(GraphError::VertexOutOfRange {
                vertex: u.max(v),
                order,
            })
        } else if u == v {
            Some(GraphError::SelfLoop(u))
        } else if !seen.insert(edge(u, v)) {
            let (a, b) = edge(u, v);
            Some(GraphError::DuplicateEdge(a, b))
        } else {
            None
        };
        if let Some(err) = problem {
            return Err(at_line(err.to_string()));
        }
        edges.push((u, v));
    }
    LabeledGraph::from_edges(order, edges)
}

/// Parses a single graph6 string, with or without the `>>graph6<<` header.
pub fn parse_graph6(text: &str) -> Result<LabeledGraph, GraphError> {
    let trimmed = text.trim();
    let (body, base) = match trimmed.strip_prefix(">>graph6<<") {
        Some(rest) => (rest.as_bytes(), 10),
        None => (trimmed.as_bytes(), 0),
    };
    let err = |offset: usize, message: &str| GraphError::Graph6 {
        offset: base + offset,
        message: message.to_string(),
    };
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(i, "byte outside the printable graph6 range"));
        }
    }
    let value = |slice: &[u8]| {
        slice
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize)
    };
    let (order, start) = match body {
        [] => return Err(err(0, "empty input")),
        [126, 126, ..] if body.len() >= 8 => (value(&body[2..8]), 8),
        [126, 126, ..] => return Err(err(0, "truncated 36-bit vertex count")),
        [126, ..] if body.len() >= 4 => (value(&body[1..4]), 4),
        [126, ..] => return Err(err(0, "truncated 18-bit vertex count")),
        [b, ..] => ((b - 63) as usize, 1),
    };
    let bits_needed = order * order.saturating_sub(1) / 2;
    let expected = bits_needed.div_ceil(6);
    let data = &body[start..];
    if data.len() != expected {
        return Err(err(
            start,
            &format!(
                "expected {expected} data bytes for {order} vertices, found {}",
                data.len()
            ),
        ));
    }
    let bit = |k: usize| (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..order {
        for u in 0..v {
            if bit(k) {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    if k % 6 != 0 && (k..expected * 6).any(bit) {
        return Err(err(start + expected - 1, "nonzero padding bits"));
    }
    LabeledGraph::from_edges(order, edges)
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<LabeledGraph, GraphError> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Graph6 => parse_graph6(text),
    }
}

/// Hop counts between all vertex pairs; `None` marks unreachable pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    order: usize,
    dist: Vec<Option<u32>>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        self.dist[u * self.order + v]
    }

    /// Largest finite distance, or `None` if some pair is unreachable.
    pub fn diameter(&self) -> Option<u32> {
        self.dist.iter().try_fold(0, |acc, d| d.map(|d| acc.max(d)))
    }
}

/// Breadth-first distances from every vertex.
pub fn all_pairs_distances(g: &LabeledGraph) -> DistanceMatrix {
    let order = g.order();
    let mut dist = Vec::with_capacity(order * order);
    for s in 0..order {
        dist.extend(g.bfs(s));
    }
    DistanceMatrix { order, dist }
}

/// `k`-th power: same vertices, `u ~ v` iff `1 <= d(u, v) <= k`.
///
/// Unreachable pairs stay non-adjacent, so a disconnected graph is powered
/// component by component.
pub fn power(g: &LabeledGraph, k: u32) -> LabeledGraph {
    assert!(k >= 1, "graph powers start at k = 1");
    let d = all_pairs_distances(g);
    LabeledGraph::from_fn(g.order(), |u, v| d.get(u, v).is_some_and(|x| x <= k))
}

/// Vacuously true on zero or one vertex.
pub fn is_complete(g: &LabeledGraph) -> bool {
    let n = g.order();
    g.size() == n * n.saturating_sub(1) / 2
}

fn require_edge(g: &LabeledGraph, (u, v): Edge) -> Result<(), GraphError> {
    if g.has_edge(u, v) {
        Ok(())
    } else {
        Err(GraphError::NotAnEdge(u, v))
    }
}

fn require_vertex(g: &LabeledGraph, v: usize) -> Result<(), GraphError> {
    if v < g.order() {
        Ok(())
    } else {
        Err(GraphError::VertexOutOfRange {
            vertex: v,
            order: g.order(),
        })
    }
}

/// One plus the smallest endpoint-to-endpoint distance; an edge is at
/// distance 0 from itself.
pub fn edge_distance(g: &LabeledGraph, e1: Edge, e2: Edge) -> Result<u32, GraphError> {
    require_edge(g, e1)?;
    require_edge(g, e2)?;
    if edge(e1.0, e1.1) == edge(e2.0, e2.1) {
        return Ok(0);
    }
    let d = all_pairs_distances(g);
    [(e1.0, e2.0), (e1.0, e2.1), (e1.1, e2.0), (e1.1, e2.1)]
        .into_iter()
        .filter_map(|(a, b)| d.get(a, b))
        .min()
        .map(|n| n + 1)
        .ok_or(GraphError::Unreachable)
}

/// Distance from `v` to the nearer endpoint of `e`.
pub fn edge_vertex_distance(g: &LabeledGraph, e: Edge, v: usize) -> Result<u32, GraphError> {
    require_edge(g, e)?;
    require_vertex(g, v)?;
    let from_v = g.bfs(v);
    [from_v[e.0], from_v[e.1]]
        .into_iter()
        .flatten()
        .min()
        .ok_or(GraphError::Unreachable)
}

/// Ball of radius `k` around `v`.
pub fn vertex_span(g: &LabeledGraph, v: usize, k: u32) -> VertexSet {
    g.bfs(v)
        .into_iter()
        .enumerate()
        .filter(|(_, d)| d.is_some_and(|d| d <= k))
        .map(|(u, _)| u)
        .collect()
}

/// Union of the radius-`k` balls around both endpoints of `e`.
pub fn edge_span(g: &LabeledGraph, e: Edge, k: u32) -> Result<VertexSet, GraphError> {
    require_edge(g, e)?;
    let mut span = vertex_span(g, e.0, k);
    span.extend(vertex_span(g, e.1, k));
    Ok(span)
}

pub fn eccentricity(g: &LabeledGraph, v: usize) -> Result<u32, GraphError> {
    require_vertex(g, v)?;
    g.bfs(v)
        .into_iter()
        .try_fold(0, |acc, d| d.map(|d| acc.max(d)))
        .ok_or(GraphError::Disconnected)
}

/// Vertices whose eccentricity equals the maximum over the graph.
pub fn peripheral_vertices(g: &LabeledGraph) -> Result<VertexSet, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let ecc: Vec<u32> = (0..g.order())
        .map(|v| eccentricity(g, v))
        .collect::<Result<_, _>>()?;
    let max = ecc.iter().copied().max().unwrap_or(0);
    Ok((0..g.order()).filter(|&v| ecc[v] == max).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(items: &[usize]) -> VertexSet {
        items.iter().copied().collect()
    }

    #[test]
    fn parses_edge_lists() {
        let g = parse_edge_list("3\n0 1\n1 2").unwrap();
        assert_eq!(g, LabeledGraph::path(3));
        let single = parse_edge_list("1\n").unwrap();
        assert_eq!((single.order(), single.size()), (1, 0));
        assert!(parse_edge_list("# comment\n\n2\n0 1 # trailing\n").is_ok());
    }

    #[test]
    fn edge_list_errors_name_the_line() {
        match parse_edge_list("2\n0 0") {
            Err(GraphError::Parse { line: 2, message }) => assert!(message.contains("self-loop")),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_edge_list("3\n0 1\n\n1 0"),
            Err(GraphError::Parse { line: 4, .. })
        ));
        assert!(matches!(
            parse_edge_list("2\n0 2"),
            Err(GraphError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("x\n"),
            Err(GraphError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("3\n0 1 2"),
            Err(GraphError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list(""),
            Err(GraphError::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn graph6_matches_reference_encoding() {
        // Reference string produced by petgraph for the same five-vertex graph.
        let g = LabeledGraph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(g.to_graph6(), "DQc");
        assert_eq!(parse_graph6("DQc").unwrap(), g);
        assert_eq!(parse_graph6(">>graph6<<DQc\n").unwrap(), g);
        assert_eq!(LabeledGraph::complete(4).to_graph6(), "C~");
        assert_eq!(parse_graph6("?").unwrap().order(), 0);
    }

    #[test]
    fn graph6_long_vertex_count() {
        let g = LabeledGraph::path(70);
        let s = g.to_graph6();
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn graph6_errors_carry_offsets() {
        assert!(matches!(
            parse_graph6("D"),
            Err(GraphError::Graph6 { offset: 1, .. })
        ));
        assert!(matches!(
            parse_graph6("D\tc"),
            Err(GraphError::Graph6 { offset: 1, .. })
        ));
        // 3 vertices use 3 bits; the low padding bits must be zero.
        assert!(matches!(parse_graph6("B@"), Err(GraphError::Graph6 { .. })));
        assert!(matches!(
            parse_graph6(""),
            Err(GraphError::Graph6 { offset: 0, .. })
        ));
    }

    #[test]
    fn distances() {
        let d = all_pairs_distances(&LabeledGraph::path(5));
        assert_eq!(d.get(0, 4), Some(4));
        assert_eq!(d.diameter(), Some(4));
        let d = all_pairs_distances(&LabeledGraph::empty(2));
        assert_eq!(d.get(0, 1), None);
        assert_eq!(d.diameter(), None);
        let d = all_pairs_distances(&LabeledGraph::complete(4));
        for u in 0..4 {
            for v in 0..4 {
                assert_eq!(d.get(u, v), Some(u32::from(u != v)));
            }
        }
    }

    #[test]
    fn powers() {
        assert_eq!(power(&LabeledGraph::path(4), 3), LabeledGraph::complete(4));
        let p5 = power(&LabeledGraph::path(5), 3);
        assert_eq!(p5.size(), 9);
        assert!(!p5.has_edge(0, 4));
        let c6 = LabeledGraph::cycle(6);
        assert_eq!(power(&c6, 1), c6);
        // Components are powered separately.
        let two = LabeledGraph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(power(&two, 5), two);
    }

    #[test]
    fn completeness() {
        assert!(is_complete(&LabeledGraph::complete(4)));
        assert!(!is_complete(&power(&LabeledGraph::path(5), 3)));
        assert!(is_complete(&LabeledGraph::empty(1)));
        assert!(is_complete(&LabeledGraph::empty(0)));
    }

    #[test]
    fn edge_distances() {
        let p5 = LabeledGraph::path(5);
        assert_eq!(edge_distance(&p5, (0, 1), (3, 4)), Ok(3));
        assert_eq!(edge_distance(&p5, (0, 1), (1, 2)), Ok(1));
        assert_eq!(edge_distance(&p5, (1, 2), (2, 1)), Ok(0));
        assert_eq!(
            edge_distance(&p5, (0, 2), (1, 2)),
            Err(GraphError::NotAnEdge(0, 2))
        );
        let two = LabeledGraph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            edge_distance(&two, (0, 1), (2, 3)),
            Err(GraphError::Unreachable)
        );
    }

    #[test]
    fn edge_vertex_distances() {
        let p5 = LabeledGraph::path(5);
        assert_eq!(edge_vertex_distance(&p5, (0, 1), 4), Ok(3));
        assert_eq!(edge_vertex_distance(&p5, (0, 1), 1), Ok(0));
        assert_eq!(edge_vertex_distance(&p5, (1, 2), 3), Ok(1));
        let two = LabeledGraph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(
            edge_vertex_distance(&two, (0, 1), 2),
            Err(GraphError::Unreachable)
        );
    }

    #[test]
    fn spans() {
        let p7 = LabeledGraph::path(7);
        assert_eq!(vertex_span(&p7, 3, 0), set(&[3]));
        assert_eq!(vertex_span(&p7, 3, 2), set(&[1, 2, 3, 4, 5]));
        assert_eq!(
            vertex_span(&LabeledGraph::complete(4), 2, 1),
            set(&[0, 1, 2, 3])
        );
        assert_eq!(edge_span(&p7, (2, 3), 1).unwrap(), set(&[1, 2, 3, 4]));
        assert_eq!(edge_span(&p7, (2, 3), 0).unwrap(), set(&[2, 3]));
        assert_eq!(
            edge_span(&LabeledGraph::path(5), (1, 2), 1).unwrap(),
            set(&[0, 1, 2, 3])
        );
    }

    #[test]
    fn eccentricities() {
        let p5 = LabeledGraph::path(5);
        assert_eq!(eccentricity(&p5, 2), Ok(2));
        assert_eq!(peripheral_vertices(&p5).unwrap(), set(&[0, 4]));
        let k4 = LabeledGraph::complete(4);
        assert!((0..4).all(|v| eccentricity(&k4, v) == Ok(1)));
        assert_eq!(peripheral_vertices(&k4).unwrap(), set(&[0, 1, 2, 3]));
        assert_eq!(
            peripheral_vertices(&LabeledGraph::star(4)).unwrap(),
            set(&[1, 2, 3, 4])
        );
        assert_eq!(
            peripheral_vertices(&LabeledGraph::empty(2)),
            Err(GraphError::Disconnected)
        );
    }

    #[test]
    fn vertex_removal_relabels_densely() {
        let g = LabeledGraph::path(5).remove_vertex(2);
        assert_eq!(g, LabeledGraph::from_edges(4, [(0, 1), (2, 3)]).unwrap());
        assert_eq!(g.components(), vec![vec![0, 1], vec![2, 3]]);
    }
}
