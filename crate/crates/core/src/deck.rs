//! Decks, deck checking, and reconstruction of tree cubes from their decks.
//!
//! The pipeline: keep the cards that are themselves tree cubes (these are
//! the cards obtained by deleting a leaf of the root), rebuild the root tree
//! from them by re-attaching a leaf, cube the candidate, and accept it only
//! if its deck equals the input deck.

use std::collections::{HashMap, HashSet};

use serde::Serialize;
use thiserror::Error;

use crate::canon::{canonical_form, CanonicalForm};
use crate::cube::{cube_root, RootKind};
use crate::graph::{parse_edge_list, parse_graph6, power, GraphError, GraphFormat, LabeledGraph};
use crate::tree::{tree_code, Tree};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DeckError {
    #[error("decks of graphs on {0} vertices are out of scope; at least 3 are needed")]
    OrderTooSmall(usize),
    #[error("selected cards are not the leaf-deleted cubes of any tree")]
    NotATreeDeck,
    #[error("invalid deck: {0}")]
    InvalidDeck(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Multiset of card certificates, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Deck {
    order: usize,
    cards: Vec<CanonicalForm>,
}

impl Deck {
    pub fn new(order: usize, mut cards: Vec<CanonicalForm>) -> Result<Deck, DeckError> {
        if cards.len() != order {
            return Err(DeckError::InvalidDeck(format!(
                "{} cards for a graph on {order} vertices",
                cards.len()
            )));
        }
        if let Some(bad) = cards.iter().find(|c| c.order() + 1 != order) {
            return Err(DeckError::InvalidDeck(format!(
                "card on {} vertices in a deck of order {order}",
                bad.order()
            )));
        }
        cards.sort();
        Ok(Deck { order, cards })
    }

    /// Vertex count of the graph the deck belongs to.
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn cards(&self) -> &[CanonicalForm] {
        &self.cards
    }

    /// `deck p` header followed by one card per block (edge list) or line
    /// (graph6). Cards are written as their canonical graphs.
    pub fn to_text(&self, format: GraphFormat) -> String {
        let mut out = format!("deck {}\n", self.order);
        for (i, card) in self.cards.iter().enumerate() {
            let g = card.to_graph();
            match format {
                GraphFormat::EdgeList => {
                    if i > 0 {
                        out.push('\n');
                    }
                    out.push_str(&g.to_edge_list());
                }
                GraphFormat::Graph6 => {
                    out.push_str(&g.to_graph6());
                    out.push('\n');
                }
            }
        }
        out
    }
}

/// Parses a deck file. Cards are edge-list blocks separated by blank lines,
/// or one graph6 string per line; the format is detected from the first card.
pub fn parse_deck(text: &str) -> Result<Deck, DeckError> {
    let lines: Vec<&str> = text.lines().collect();
    let mut idx = lines
        .iter()
        .position(|l| !l.trim().is_empty())
        .ok_or(DeckError::Parse {
            line: 1,
            message: "empty deck file".into(),
        })?;
    let header: Vec<&str> = lines[idx].split_whitespace().collect();
    let order = match header.as_slice() {
        ["deck", p] => p.parse::<usize>().map_err(|_| DeckError::Parse {
            line: idx + 1,
            message: format!("invalid deck order {p:?}"),
        })?,
        _ => {
            return Err(DeckError::Parse {
                line: idx + 1,
                message: "expected header \"deck p\"".into(),
            })
        }
    };
    idx += 1;
    let rest = &lines[idx..];
    let first = rest.iter().find(|l| !l.trim().is_empty());
    let edge_list = first.is_some_and(|l| l.trim().chars().any(|c| c.is_ascii_digit()));
    let mut cards = Vec::new();
    if edge_list {
        let mut start = 0;
        while start < rest.len() {
            while start < rest.len() && rest[start].trim().is_empty() {
                start += 1;
            }
            if start == rest.len() {
                break;
            }
            let mut end = start;
            while end < rest.len() && !rest[end].trim().is_empty() {
                end += 1;
            }
            let block = rest[start..end].join("\n");
            let g = parse_edge_list(&block).map_err(|e| match e {
                GraphError::Parse { line, message } => DeckError::Parse {
                    line: idx + start + line,
                    message,
                },
                other => DeckError::Parse {
                    line: idx + start + 1,
                    message: other.to_string(),
                },
            })?;
            cards.push(canonical_form(&g));
            start = end;
        }
    } else {
        for (offset, line) in rest.iter().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let g = parse_graph6(line).map_err(|e| DeckError::Parse {
                line: idx + offset + 1,
                message: e.to_string(),
            })?;
            cards.push(canonical_form(&g));
        }
    }
    Deck::new(order, cards)
}

/// One card per vertex: the certificate of `g - v`.
pub fn deck(g: &LabeledGraph) -> Deck {
    let cards = (0..g.order())
        .map(|v| canonical_form(&g.remove_vertex(v)))
        .collect();
    Deck::new(g.order(), cards).expect("a graph's own deck is well-formed")
}

/// Whether `s` is the deck of `g`. Decks of a different order never match.
pub fn deck_check(g: &LabeledGraph, s: &Deck) -> bool {
    g.order() == s.order() && deck(g) == *s
}

/// A card that is a tree cube, with its cube roots.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SelectedCard {
    pub card: CanonicalForm,
    /// The unique root, or every diameter-at-most-three tree for a complete card.
    pub roots: Vec<Tree>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CardSelection {
    pub selected: Vec<SelectedCard>,
}

impl CardSelection {
    pub fn is_empty(&self) -> bool {
        self.selected.is_empty()
    }

    pub fn len(&self) -> usize {
        self.selected.len()
    }
}

/// Keeps the cards that are cubes of trees.
pub fn select_cube_cards(s: &Deck) -> CardSelection {
    let mut roots_of: HashMap<&CanonicalForm, Option<Vec<Tree>>> = HashMap::new();
    let mut selected = Vec::new();
    for card in s.cards() {
        let roots = roots_of.entry(card).or_insert_with(|| {
            let result = cube_root(&card.to_graph());
            (result.kind() != RootKind::NotACube).then(|| result.roots().to_vec())
        });
        if let Some(roots) = roots {
            selected.push(SelectedCard {
                card: card.clone(),
                roots: roots.clone(),
            });
        }
    }
    CardSelection { selected }
}

/// Trees on `target_order` vertices whose leaf-deleted cubes all appear
/// among the selected cards, with multiplicity.
///
/// Candidates come from attaching a fresh leaf at every vertex of every
/// root of every distinct selected card, cards with fewer roots first. The
/// selection may also hold cards of internal vertices (deleting an internal
/// vertex can leave a tree cube), so the leaf cards of a candidate need only
/// be a sub-multiset of it. Survivors still need a full deck check.
pub fn endpoint_tree_candidates(
    selection: &CardSelection,
    target_order: usize,
) -> Result<Vec<Tree>, DeckError> {
    let mut available: HashMap<&CanonicalForm, usize> = HashMap::new();
    for c in &selection.selected {
        *available.entry(&c.card).or_default() += 1;
    }
    let mut seeds: Vec<&SelectedCard> = selection.selected.iter().collect();
    seeds.sort_by(|a, b| (a.roots.len(), &a.card).cmp(&(b.roots.len(), &b.card)));
    seeds.dedup_by(|a, b| a.card == b.card);

    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for root in seeds.iter().flat_map(|c| &c.roots) {
        if root.order() + 1 != target_order {
            continue;
        }
        for u in 0..root.order() {
            let mut edges = root.edges();
            edges.push((u, root.order()));
            let tree = Tree::from_edges(target_order, edges).expect("leaf extension of a tree");
            if !seen.insert(tree_code(&tree)) {
                continue;
            }
            let cube = power(&tree, 3);
            let mut needed: HashMap<CanonicalForm, usize> = HashMap::new();
            for leaf in tree.leaves() {
                *needed
                    .entry(canonical_form(&cube.remove_vertex(leaf)))
                    .or_default() += 1;
            }
            if needed
                .iter()
                .all(|(c, &n)| available.get(c).is_some_and(|&have| have >= n))
            {
                out.push(tree);
            }
        }
    }
    if out.is_empty() {
        Err(DeckError::NotATreeDeck)
    } else {
        Ok(out)
    }
}

/// The first tree from [`endpoint_tree_candidates`].
pub fn tree_from_endpoint_deck(
    selection: &CardSelection,
    target_order: usize,
) -> Result<Tree, DeckError> {
    endpoint_tree_candidates(selection, target_order).map(|mut c| c.swap_remove(0))
}

/// Outcome of [`reconstruct`]. `recognized` implies `graph` is present and
/// its deck equals the input deck.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReconstructionReport {
    pub recognized: bool,
    pub graph: Option<LabeledGraph>,
    pub tree: Option<Tree>,
    pub certificate: Option<CanonicalForm>,
    pub trace: Vec<String>,
}

impl ReconstructionReport {
    fn rejected(trace: Vec<String>) -> ReconstructionReport {
        ReconstructionReport {
            recognized: false,
            graph: None,
            tree: None,
            certificate: None,
            trace,
        }
    }

    fn accepted(graph: LabeledGraph, tree: Tree, trace: Vec<String>) -> ReconstructionReport {
        ReconstructionReport {
            recognized: true,
            certificate: Some(canonical_form(&graph)),
            graph: Some(graph),
            tree: Some(tree),
            trace,
        }
    }
}

/// Reconstructs the tree cube whose deck is `s`, or reports that no tree
/// cube has this deck.
pub fn reconstruct(s: &Deck) -> Result<ReconstructionReport, DeckError> {
    let p = s.order();
    if p < 3 {
        return Err(DeckError::OrderTooSmall(p));
    }
    let mut trace = Vec::new();
    let complete_card = canonical_form(&LabeledGraph::complete(p - 1));
    if s.cards().iter().all(|c| *c == complete_card) {
        trace.push(format!("every card is K{}: the graph is K{p}", p - 1));
        let graph = LabeledGraph::complete(p);
        let star = Tree::star(p - 1);
        if deck_check(&graph, s) {
            trace.push("deck check passed".into());
            return Ok(ReconstructionReport::accepted(graph, star, trace));
        }
        return Ok(ReconstructionReport::rejected(trace));
    }

    let selection = select_cube_cards(s);
    trace.push(format!("{} of {p} cards are tree cubes", selection.len()));
    let candidates = match endpoint_tree_candidates(&selection, p) {
        Ok(c) => c,
        Err(err) => {
            trace.push(format!("tree rebuild failed: {err}"));
            return Ok(ReconstructionReport::rejected(trace));
        }
    };
    trace.push(format!("{} candidate trees", candidates.len()));
    for (i, tree) in candidates.into_iter().enumerate() {
        let graph = power(&tree, 3);
        if deck_check(&graph, s) {
            trace.push(format!("candidate {i} passed the deck check"));
            return Ok(ReconstructionReport::accepted(graph, tree, trace));
        }
        trace.push(format!("candidate {i} failed the deck check"));
    }
    Ok(ReconstructionReport::rejected(trace))
}

/// Whether `s` is the deck of a tree cube.
pub fn recognize(s: &Deck) -> Result<bool, DeckError> {
    reconstruct(s).map(|r| r.recognized)
}
