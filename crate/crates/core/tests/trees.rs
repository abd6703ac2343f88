mod common;

use std::collections::{BTreeSet, HashSet};

use common::*;
use proptest::prelude::*;
use treecube::{
    canonical_form, end_deleted, enumerate_trees, expand, is_isomorphic, leaf_orders,
    peripheral_vertices, tree_code, weighted_form, CanonicalForm, Tree,
};

/// Every Prüfer sequence over 0..p.
fn all_prufer_trees(p: usize) -> Vec<Tree> {
    let len = p - 2;
    let total = p.pow(len as u32);
    (0..total)
        .map(|mut code| {
            let seq: Vec<usize> = (0..len)
                .map(|_| {
                    let d = code % p;
                    code /= p;
                    d
                })
                .collect();
            prufer_tree(&seq)
        })
        .collect()
}

#[test]
fn enumeration_matches_brute_force_classes_of_labelled_trees() {
    for p in 2..=7 {
        let perms = permutations(p);
        let classes: BTreeSet<u64> = all_prufer_trees(p)
            .iter()
            .map(|t| brute_certificate(t, &perms))
            .collect();
        let reps: BTreeSet<u64> = enumerate_trees(p)
            .unwrap()
            .iter()
            .map(|t| brute_certificate(t, &perms))
            .collect();
        assert_eq!(enumerate_trees(p).unwrap().len(), classes.len(), "p={p}");
        assert_eq!(reps, classes, "p={p}");
    }
}

#[test]
fn every_labelled_tree_on_eight_vertices_has_one_representative() {
    let reps: HashSet<CanonicalForm> = enumerate_trees(8)
        .unwrap()
        .iter()
        .map(|t| canonical_form(t))
        .collect();
    let hit: HashSet<CanonicalForm> = all_prufer_trees(8)
        .iter()
        .map(|t| canonical_form(t))
        .collect();
    assert_eq!(hit, reps);
}

#[test]
fn enumerated_trees_are_pairwise_non_isomorphic() {
    for p in 1..=10 {
        let trees = enumerate_trees(p).unwrap();
        let codes: HashSet<Vec<u8>> = trees.iter().map(tree_code).collect();
        let certs: HashSet<CanonicalForm> = trees.iter().map(|t| canonical_form(t)).collect();
        assert_eq!(codes.len(), trees.len());
        assert_eq!(certs.len(), trees.len());
    }
}

#[test]
fn weighted_form_round_trips() {
    for p in 3..=10 {
        for t in enumerate_trees(p).unwrap() {
            let w = weighted_form(t).unwrap();
            assert!(is_isomorphic(&expand(&w), t), "{t:?}");
            assert_eq!(w.skeleton().order(), t.order() - t.leaves().len());
            assert_eq!(w.weights().iter().sum::<usize>(), t.leaves().len());
        }
    }
}

#[test]
fn leaf_orders_partition_the_vertices() {
    for p in 1..=10 {
        for t in enumerate_trees(p).unwrap() {
            let orders = leaf_orders(t);
            let mut seen = BTreeSet::new();
            for level in &orders.orders {
                assert!(!level.is_empty());
                for &v in level {
                    assert!(seen.insert(v), "vertex {v} in two leaf orders of {t:?}");
                }
            }
            assert_eq!(seen.len(), p);
            assert_eq!(orders.orders[0], t.leaves());
        }
    }
}

#[test]
fn end_deletion_is_the_induced_subgraph_off_the_leaves() {
    for p in 1..=10 {
        for t in enumerate_trees(p).unwrap() {
            assert_eq!(end_deleted(t).graph(), &t.remove_vertices(&t.leaves()));
        }
    }
}

#[test]
fn peripheral_vertices_are_leaves() {
    for p in 2..=10 {
        for t in enumerate_trees(p).unwrap() {
            assert!(peripheral_vertices(t).unwrap().is_subset(&t.leaves()));
        }
    }
}

proptest! {
    #[test]
    fn tree_code_separates_exactly_like_certificates(a in arb_tree(2..=18), b in arb_tree(2..=18)) {
        prop_assert_eq!(tree_code(&a) == tree_code(&b), canonical_form(&a) == canonical_form(&b));
    }

    #[test]
    fn sampled_trees_match_exactly_one_representative(t in arb_tree(2..=8)) {
        let matches = enumerate_trees(t.order()).unwrap().iter().filter(|r| is_isomorphic(r, &t)).count();
        prop_assert_eq!(matches, 1);
    }

    #[test]
    fn tree_code_is_label_invariant((t, perm) in arb_tree(2..=24).prop_flat_map(|t| {
        let n = t.order();
        (Just(t), arb_perm(n))
    })) {
        let moved = Tree::new(t.permute(&perm)).unwrap();
        prop_assert_eq!(tree_code(&t), tree_code(&moved));
        prop_assert_eq!(canonical_form(&t), canonical_form(&moved));
    }

    #[test]
    fn weighted_form_round_trips_on_larger_trees(t in arb_tree(3..=24)) {
        let back = expand(&weighted_form(&t).unwrap());
        prop_assert_eq!(tree_code(&back), tree_code(&t));
    }
}
