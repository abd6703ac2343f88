//! Deterministic graph corpora for the sweeps.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use treecube::{cube_root_oracle, enumerate_trees, power, LabeledGraph, RootKind, Tree};

/// Seed for every generated corpus; changing it changes every report.
pub const CORPUS_SEED: u64 = 0x7c3b_1e05;

/// Uniform labelled tree on `p >= 2` vertices via a random Prüfer sequence.
pub fn random_tree(p: usize, rng: &mut impl Rng) -> Tree {
    assert!(p >= 2);
    let seq: Vec<usize> = (0..p.saturating_sub(2))
        .map(|_| rng.gen_range(0..p))
        .collect();
    let mut degree = vec![1usize; p];
    for &v in &seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(p - 1);
    for &v in &seq {
        let leaf = (0..p)
            .find(|&u| degree[u] == 1)
            .expect("a leaf always exists");
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..p).filter(|&u| degree[u] == 1).collect();
    edges.push((rest[0], rest[1]));
    Tree::from_edges(p, edges).expect("Prüfer decoding yields a tree")
}

fn toggled(g: &LabeledGraph, pairs: &[(usize, usize)]) -> LabeledGraph {
    LabeledGraph::from_fn(g.order(), |u, v| g.has_edge(u, v) ^ pairs.contains(&(u, v)))
}

fn random_pair(p: usize, rng: &mut impl Rng) -> (usize, usize) {
    loop {
        let (a, b) = (rng.gen_range(0..p), rng.gen_range(0..p));
        if a != b {
            return (a.min(b), a.max(b));
        }
    }
}

/// Connected graphs that the brute-force oracle labels as non-cubes, with
/// orders cycling through `min_order..=max_order`.
///
/// Even slots hold a random spanning tree plus random extra edges; odd slots
/// hold the cube of a random enumerated tree with one or two vertex pairs
/// toggled, which keeps them close to genuine cubes.
pub fn non_cube_corpus(
    count: usize,
    min_order: usize,
    max_order: usize,
    seed: u64,
) -> Vec<LabeledGraph> {
    assert!(4 <= min_order && min_order <= max_order);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let span = max_order - min_order + 1;
    let mut out = Vec::with_capacity(count);
    let mut slot = 0usize;
    while out.len() < count {
        let p = min_order + slot % span;
        let candidate = if slot.is_multiple_of(2) {
            let tree = random_tree(p, &mut rng);
            let density = rng.gen_range(0.05..0.6);
            LabeledGraph::from_fn(p, |u, v| tree.has_edge(u, v) || rng.gen_bool(density))
        } else {
            let trees = enumerate_trees(p).expect("corpus orders are within the limit");
            let tree = &trees[rng.gen_range(0..trees.len())];
            let flips = rng.gen_range(1..=2);
            let pairs: Vec<_> = (0..flips).map(|_| random_pair(p, &mut rng)).collect();
            toggled(&power(tree, 3), &pairs)
        };
        if candidate.is_connected()
            && cube_root_oracle(&candidate).map(|r| r.kind()) == Ok(RootKind::NotACube)
        {
            out.push(candidate);
            slot += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_deterministic_and_labelled() {
        let a = non_cube_corpus(12, 4, 7, CORPUS_SEED);
        let b = non_cube_corpus(12, 4, 7, CORPUS_SEED);
        assert_eq!(a, b);
        assert!(a
            .iter()
            .all(|g| g.is_connected() && (4..=7).contains(&g.order())));
    }

    #[test]
    fn random_trees_are_trees() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for p in 2..12 {
            assert_eq!(random_tree(p, &mut rng).order(), p);
        }
    }
}
