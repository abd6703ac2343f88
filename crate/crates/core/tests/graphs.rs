mod common;

use common::*;
use proptest::prelude::*;
use treecube::{
    all_pairs_distances, edge_span, is_complete, parse_graph, power, vertex_span, GraphFormat,
    LabeledGraph,
};

fn connected_graph() -> impl Strategy<Value = LabeledGraph> {
    (arb_tree(2..=10), any::<u64>()).prop_map(|(t, extra)| {
        let n = t.order();
        let mut bit = 0;
        LabeledGraph::from_fn(n, |u, v| {
            bit += 1;
            t.has_edge(u, v) || (extra >> (bit % 64) & 1 == 1 && bit % 3 == 0)
        })
    })
}

proptest! {
    #[test]
    fn power_is_the_distance_threshold(g in arb_graph(1..=9), k in 1u32..5) {
        let d = all_pairs_distances(&g);
        let pk = power(&g, k);
        for u in 0..g.order() {
            for v in 0..g.order() {
                let near = u != v && d.get(u, v).is_some_and(|d| d <= k);
                prop_assert_eq!(pk.has_edge(u, v), near);
            }
        }
    }

    #[test]
    fn first_power_is_identity(g in arb_graph(0..=9), k in 1u32..5) {
        prop_assert_eq!(power(&g, 1), g.clone());
        prop_assert_eq!(power(&power(&g, 1), k), power(&g, k));
    }

    #[test]
    fn powers_beyond_the_diameter_are_complete(g in connected_graph(), extra in 0u32..3) {
        let diam = all_pairs_distances(&g).diameter().unwrap();
        let full = power(&g, diam.max(1) + extra);
        prop_assert!(is_complete(&full));
        prop_assert_eq!(power(&g, diam.max(1)), full);
    }

    #[test]
    fn edge_span_is_the_union_of_endpoint_spans(g in connected_graph(), k in 0u32..4, pick in any::<prop::sample::Index>()) {
        let edges = g.edges();
        let (u, v) = edges[pick.index(edges.len())];
        let mut union = vertex_span(&g, u, k);
        union.extend(vertex_span(&g, v, k));
        prop_assert_eq!(edge_span(&g, (u, v), k).unwrap(), union);
    }

    #[test]
    fn encodings_round_trip(g in arb_graph(0..=12)) {
        for format in [GraphFormat::EdgeList, GraphFormat::Graph6] {
            prop_assert_eq!(parse_graph(&g.encode(format), format).unwrap(), g.clone());
        }
    }
}
