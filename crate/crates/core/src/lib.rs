//! Tree cubes: graph powers, isomorphism certificates, free-tree
//! enumeration, the clique structure of `P_3(T)`, cube-root extraction and
//! reconstruction of tree cubes from their decks.

pub mod canon;
pub mod cube;
pub mod deck;
pub mod graph;
pub mod tree;

pub use canon::{
    canonical_form, canonical_labeling, find_isomorphism, is_isomorphic, CanonicalForm,
};
pub use cube::{
    clique_edges_of_tree, cliques_of_cube, constructive_root, cube_root, cube_root_oracle,
    is_tree_cube, kth_order_terminal_cliques, maximal_cliques, terminal_cliques, terminal_vertices,
    tree_of_cliques, CliqueRecord, CubeError, RootKind, RootReport, RootResult,
};
pub use deck::{
    deck, deck_check, endpoint_tree_candidates, parse_deck, recognize, reconstruct,
    select_cube_cards, tree_from_endpoint_deck, CardSelection, Deck, DeckError,
    ReconstructionReport, SelectedCard,
};
pub use graph::{
    all_pairs_distances, eccentricity, edge, edge_distance, edge_span, edge_vertex_distance,
    is_complete, parse_edge_list, parse_graph, parse_graph6, peripheral_vertices, power,
    vertex_span, DistanceMatrix, Edge, GraphError, GraphFormat, LabeledGraph, VertexSet,
};
pub use tree::{
    end_deleted, end_deleted_with_labels, enumerate_trees, enumeration_cap, expand, is_tree,
    iterated_end_deleted, k_periphery, kth_order_terminal_edges, leaf_orders, terminal_edges,
    tree_code, weighted_form, LeafOrderPartition, Tree, TreeError, WeightedTree, DEFAULT_MAX_ORDER,
};
