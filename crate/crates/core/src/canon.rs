//! Isomorphism certificates.
//!
//! Canonical labelling by individualization and refinement: the vertex
//! partition is refined to an equitable one, the first non-singleton cell is
//! split by individualizing each of its vertices in turn, and the
//! lexicographically smallest adjacency string over all discrete leaves is
//! the certificate. Automorphisms found along the way (two leaves with equal
//! strings) prune sibling branches that lie in one orbit of the stabilizer
//! of the current prefix.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::LabeledGraph;

/// Byte certificate of an isomorphism class.
///
/// Layout: vertex count as 4 little-endian bytes, followed by the upper
/// triangle of the canonically relabelled adjacency matrix packed row by
/// row, most significant bit first. The certificate therefore also encodes a
/// representative graph, recoverable with [`CanonicalForm::to_graph`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    fn encode(g: &LabeledGraph, order: &[usize]) -> CanonicalForm {
        let n = g.order();
        let mut bytes = (n as u32).to_le_bytes().to_vec();
        bytes.extend(adjacency_bits(g, order));
        CanonicalForm(bytes)
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// Number of vertices of the certified graph.
    pub fn order(&self) -> usize {
        u32::from_le_bytes(self.0[..4].try_into().expect("certificate header")) as usize
    }

    /// The canonical representative of the class.
    pub fn to_graph(&self) -> LabeledGraph {
        let n = self.order();
        let bits = &self.0[4..];
        let mut k = 0usize;
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if bits[k / 8] >> (7 - k % 8) & 1 == 1 {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        LabeledGraph::from_edges(n, edges).expect("certificate encodes a simple graph")
    }

    pub fn to_hex(&self) -> String {
        hex::encode(&self.0)
    }

    /// Parses a certificate previously rendered by [`CanonicalForm::to_hex`].
    pub fn from_hex(text: &str) -> Result<CanonicalForm, String> {
        let bytes = hex::decode(text.trim()).map_err(|e| e.to_string())?;
        if bytes.len() < 4 {
            return Err("certificate shorter than its header".into());
        }
        let n = u32::from_le_bytes(bytes[..4].try_into().expect("length checked")) as usize;
        let pairs = n * n.saturating_sub(1) / 2;
        if bytes.len() != 4 + pairs.div_ceil(8) {
            return Err(format!("wrong certificate length for {n} vertices"));
        }
        Ok(CanonicalForm(bytes))
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.to_hex())
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl From<CanonicalForm> for String {
    fn from(c: CanonicalForm) -> String {
        c.to_hex()
    }
}

impl TryFrom<String> for CanonicalForm {
    type Error = String;
    fn try_from(s: String) -> Result<Self, String> {
        CanonicalForm::from_hex(&s)
    }
}

/// Upper-triangle adjacency of `g` relabelled so that `order[i]` becomes `i`.
fn adjacency_bits(g: &LabeledGraph, order: &[usize]) -> Vec<u8> {
    let n = order.len();
    let pairs = n * n.saturating_sub(1) / 2;
    let mut bytes = vec![0u8; pairs.div_ceil(8)];
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if g.has_edge(order[i], order[j]) {
                bytes[k / 8] |= 1 << (7 - k % 8);
            }
            k += 1;
        }
    }
    bytes
}

/// Ordered partition of the vertex set: `cells[c]` lists the members of
/// cell `c`, `cell_of[v]` is the index of the cell holding `v`.
#[derive(Clone)]
struct Partition {
    cells: Vec<Vec<usize>>,
    cell_of: Vec<usize>,
}

impl Partition {
    fn from_cells(cells: Vec<Vec<usize>>, n: usize) -> Partition {
        let mut cell_of = vec![0; n];
        for (c, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = c;
            }
        }
        Partition { cells, cell_of }
    }

    fn is_discrete(&self) -> bool {
        self.cells.iter().all(|c| c.len() == 1)
    }

    /// Splits cells by neighbour counts into every cell until equitable.
    ///
    /// Each vertex is keyed by its current cell followed by its neighbour
    /// count per cell; sorting the keys yields the refined ordered partition.
    /// The procedure only looks at cell indices and adjacency, so it commutes
    /// with relabelling.
    fn refine(mut self, g: &LabeledGraph) -> Partition {
        let n = g.order();
        loop {
            let k = self.cells.len();
            let mut keyed: Vec<(Vec<usize>, usize)> = (0..n)
                .map(|v| {
                    let mut key = vec![0usize; k + 1];
                    key[0] = self.cell_of[v];
                    for &w in g.neighbors(v) {
                        key[1 + self.cell_of[w]] += 1;
                    }
                    (key, v)
                })
                .collect();
            keyed.sort();
            let mut cells: Vec<Vec<usize>> = Vec::new();
            let mut last: Option<&Vec<usize>> = None;
            for (key, v) in &keyed {
                if last != Some(key) {
                    cells.push(Vec::new());
                    last = Some(key);
                }
                cells.last_mut().expect("pushed above").push(*v);
            }
            let changed = cells.len() != k;
            self = Partition::from_cells(cells, n);
            if !changed {
                return self;
            }
        }
    }

    /// Places `v` in a singleton cell directly before the rest of its cell.
    fn individualize(&self, v: usize) -> Partition {
        let c = self.cell_of[v];
        let mut cells = Vec::with_capacity(self.cells.len() + 1);
        cells.extend(self.cells[..c].iter().cloned());
        cells.push(vec![v]);
        cells.push(self.cells[c].iter().copied().filter(|&w| w != v).collect());
        cells.extend(self.cells[c + 1..].iter().cloned());
        Partition::from_cells(cells, self.cell_of.len())
    }
}

struct Leaf {
    bits: Vec<u8>,
    order: Vec<usize>,
    path: Vec<usize>,
}

struct Search<'a> {
    graph: &'a LabeledGraph,
    best: Option<Leaf>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Returns `Some(depth)` when a leaf turned out to be the image of an
    /// earlier leaf: every node below `depth` on the current path is then
    /// equivalent to an explored one, so the search resumes at `depth`.
    fn visit(&mut self, partition: Partition, prefix: &mut Vec<usize>) -> Option<usize> {
        let partition = partition.refine(self.graph);
        if partition.is_discrete() {
            let order: Vec<usize> = partition.cells.iter().map(|c| c[0]).collect();
            return self.leaf(order, prefix);
        }
        let target = partition
            .cells
            .iter()
            .position(|c| c.len() > 1)
            .expect("partition is not discrete");
        let mut candidates = partition.cells[target].clone();
        candidates.sort_unstable();
        let depth = prefix.len();
        let mut explored: Vec<usize> = Vec::new();
        for v in candidates {
            if !explored.is_empty() && self.same_orbit(prefix, &explored, v) {
                continue;
            }
            prefix.push(v);
            let jump = self.visit(partition.individualize(v), prefix);
            prefix.pop();
            explored.push(v);
            if let Some(target_depth) = jump {
                if target_depth < depth {
                    return jump;
                }
            }
        }
        None
    }

    fn leaf(&mut self, order: Vec<usize>, prefix: &[usize]) -> Option<usize> {
        let bits = adjacency_bits(self.graph, &order);
        let Some(best) = &self.best else {
            self.best = Some(Leaf {
                bits,
                order,
                path: prefix.to_vec(),
            });
            return None;
        };
        match bits.cmp(&best.bits) {
            Ordering::Less => {
                self.best = Some(Leaf {
                    bits,
                    order,
                    path: prefix.to_vec(),
                });
                None
            }
            Ordering::Equal => {
                // order[i] and best.order[i] play the same role.
                let mut sigma = vec![0; order.len()];
                for (&a, &b) in order.iter().zip(&best.order) {
                    sigma[a] = b;
                }
                let common = prefix
                    .iter()
                    .zip(&best.path)
                    .take_while(|(a, b)| a == b)
                    .count();
                self.automorphisms.push(sigma);
                Some(common)
            }
            Ordering::Greater => None,
        }
    }

    /// Whether `v` shares an orbit with an explored sibling under the group
    /// generated by the known automorphisms that fix `prefix` pointwise.
    fn same_orbit(&self, prefix: &[usize], explored: &[usize], v: usize) -> bool {
        let n = self.graph.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut any = false;
        for sigma in &self.automorphisms {
            if prefix.iter().any(|&p| sigma[p] != p) {
                continue;
            }
            any = true;
            for (x, &y) in sigma.iter().enumerate() {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                if rx != ry {
                    parent[rx] = ry;
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&u| find(&mut parent, u) == rv)
    }
}

/// Certificate together with a canonical ordering of the vertices:
/// `order[i]` is the vertex placed at position `i` of the canonical graph.
pub fn canonical_labeling(g: &LabeledGraph) -> (CanonicalForm, Vec<usize>) {
    let n = g.order();
    if n == 0 {
        return (CanonicalForm::encode(g, &[]), Vec::new());
    }
    let initial = Partition::from_cells(vec![(0..n).collect()], n);
    let mut search = Search {
        graph: g,
        best: None,
        automorphisms: Vec::new(),
    };
    search.visit(initial, &mut Vec::new());
    let order = search.best.expect("search reaches at least one leaf").order;
    (CanonicalForm::encode(g, &order), order)
}

/// Certificate equal for exactly the graphs isomorphic to `g`.
pub fn canonical_form(g: &LabeledGraph) -> CanonicalForm {
    canonical_labeling(g).0
}

pub fn is_isomorphic(g: &LabeledGraph, h: &LabeledGraph) -> bool {
    g.order() == h.order() && g.size() == h.size() && canonical_form(g) == canonical_form(h)
}

/// An isomorphism `g -> h` as a vertex map, if one exists.
pub fn find_isomorphism(g: &LabeledGraph, h: &LabeledGraph) -> Option<Vec<usize>> {
    if g.order() != h.order() || g.size() != h.size() {
        return None;
    }
    let (cg, og) = canonical_labeling(g);
    let (ch, oh) = canonical_labeling(h);
    if cg != ch {
        return None;
    }
    let mut map = vec![0; g.order()];
    for (&a, &b) in og.iter().zip(&oh) {
        map[a] = b;
    }
    Some(map)
}
