#![allow(dead_code)]

use proptest::prelude::*;
use treecube::{LabeledGraph, Tree};

/// Graph on `n` vertices whose edge set is the bit pattern `mask` over
/// pairs (u, v), u < v, in row-major order.
pub fn graph_from_mask(n: usize, mask: u64) -> LabeledGraph {
    let mut bit = 0;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    LabeledGraph::from_edges(n, edges).unwrap()
}

pub fn pairs(n: usize) -> u32 {
    (n * n.saturating_sub(1) / 2) as u32
}

/// Every permutation of 0..n in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        out.push(perm.clone());
        let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
}

/// Smallest edge mask over all relabellings: a certificate by brute force.
pub fn brute_certificate(g: &LabeledGraph, perms: &[Vec<usize>]) -> u64 {
    let n = g.order();
    let mut index = vec![0u32; n * n];
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            index[u * n + v] = bit;
            index[v * n + u] = bit;
            bit += 1;
        }
    }
    let edges = g.edges();
    perms
        .iter()
        .map(|p| {
            edges
                .iter()
                .fold(0u64, |m, &(u, v)| m | 1 << index[p[u] * n + p[v]])
        })
        .min()
        .unwrap_or(0)
}

/// Decodes a Prüfer sequence over 0..seq.len()+2.
pub fn prufer_tree(seq: &[usize]) -> Tree {
    let p = seq.len() + 2;
    let mut degree = vec![1usize; p];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::new();
    for &v in seq {
        let leaf = (0..p).find(|&u| degree[u] == 1).unwrap();
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..p).filter(|&u| degree[u] == 1).collect();
    edges.push((rest[0], rest[1]));
    Tree::from_edges(p, edges).unwrap()
}

pub fn arb_graph(orders: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = LabeledGraph> {
    orders.prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), pairs(n) as usize).prop_map(move |bits| {
            let mut next = bits.into_iter();
            LabeledGraph::from_fn(n, |_, _| next.next().unwrap())
        })
    })
}

pub fn arb_tree(orders: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Tree> {
    orders.prop_flat_map(|p| {
        assert!(p >= 2);
        prop::collection::vec(0..p, p - 2).prop_map(|seq| prufer_tree(&seq))
    })
}

pub fn arb_perm(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

pub fn arb_graph_with_perm(
    orders: std::ops::RangeInclusive<usize>,
) -> impl Strategy<Value = (LabeledGraph, Vec<usize>)> {
    arb_graph(orders).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), arb_perm(n))
    })
}
