//! Search for non-isomorphic trees with isomorphic powers.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use treecube::{canonical_form, enumerate_trees, is_complete, power, CanonicalForm, Tree};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CollisionPair {
    pub first: Tree,
    pub second: Tree,
    /// Certificate of the common power.
    pub power: CanonicalForm,
    pub complete: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CollisionResult {
    pub n: u32,
    pub max_order: usize,
    pub require_noncomplete: bool,
    pub pairs: Vec<CollisionPair>,
}

fn collisions_at(
    p: usize,
    n: u32,
    require_noncomplete: bool,
) -> anyhow::Result<Vec<CollisionPair>> {
    let trees = enumerate_trees(p)?;
    let mut groups: BTreeMap<CanonicalForm, Vec<&Tree>> = BTreeMap::new();
    for t in trees {
        groups
            .entry(canonical_form(&power(t, n)))
            .or_default()
            .push(t);
    }
    let mut pairs = Vec::new();
    for (cert, members) in groups {
        if members.len() < 2 {
            continue;
        }
        let complete = is_complete(&cert.to_graph());
        if complete && require_noncomplete {
            continue;
        }
        for (i, a) in members.iter().enumerate() {
            for b in &members[i + 1..] {
                pairs.push(CollisionPair {
                    first: (*a).clone(),
                    second: (*b).clone(),
                    power: cert.clone(),
                    complete,
                });
            }
        }
    }
    Ok(pairs)
}

/// Every pair of non-isomorphic trees of equal order `<= max_order` whose
/// `n`-th powers are isomorphic, grouped by order and then by certificate.
/// Runs on the current rayon pool.
pub fn collide(
    n: u32,
    max_order: usize,
    require_noncomplete: bool,
) -> anyhow::Result<CollisionResult> {
    anyhow::ensure!(n >= 2, "the power must be at least 2");
    let per_order: Vec<Vec<CollisionPair>> = (1..=max_order)
        .into_par_iter()
        .map(|p| collisions_at(p, n, require_noncomplete))
        .collect::<anyhow::Result<_>>()?;
    Ok(CollisionResult {
        n,
        max_order,
        require_noncomplete,
        pairs: per_order.into_iter().flatten().collect(),
    })
}
