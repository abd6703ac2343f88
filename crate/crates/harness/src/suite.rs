//! Exhaustive invariant sweeps over enumerated trees.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use anyhow::{bail, Context};
use rayon::prelude::*;
use serde::Serialize;
use treecube::{
    all_pairs_distances, canonical_form, cliques_of_cube, cube_root, cube_root_oracle, deck,
    deck_check, end_deleted, enumerate_trees, enumeration_cap, is_complete, is_isomorphic, is_tree,
    is_tree_cube, maximal_cliques, power, recognize, reconstruct, tree_code, tree_of_cliques,
    CanonicalForm, LabeledGraph, RootResult, Tree, VertexSet,
};

use crate::corpus::{non_cube_corpus, CORPUS_SEED};

/// Free trees on 0..=20 vertices.
pub const FREE_TREE_COUNTS: [usize; 21] = [
    0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320, 48629, 123867, 317955,
    823065,
];

/// Size of the non-cube corpus compared against the brute-force oracle.
pub const ORACLE_CORPUS_SIZE: usize = 200;
/// Number of random non-cubes whose decks must be rejected.
pub const NEGATIVE_CORPUS_SIZE: usize = 50;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Power,
    Enumeration,
    Thm31,
    Thm32,
    Lemma21,
    Lemma24,
    Lemma25,
    RcPipeline,
    EndpointCards,
    RecognitionNegative,
    OracleAgreement,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::Power,
        Suite::Enumeration,
        Suite::Thm31,
        Suite::Thm32,
        Suite::Lemma21,
        Suite::Lemma24,
        Suite::Lemma25,
        Suite::RcPipeline,
        Suite::EndpointCards,
        Suite::RecognitionNegative,
        Suite::OracleAgreement,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Power => "power",
            Suite::Enumeration => "enumeration",
            Suite::Thm31 => "thm31",
            Suite::Thm32 => "thm32",
            Suite::Lemma21 => "lemma21",
            Suite::Lemma24 => "lemma24",
            Suite::Lemma25 => "lemma25",
            Suite::RcPipeline => "rc-pipeline",
            Suite::EndpointCards => "endpoint-cards",
            Suite::RecognitionNegative => "recognition-negative",
            Suite::OracleAgreement => "oracle-agreement",
        }
    }

    /// Deck sweeps do a factor of `p` more isomorphism work per tree.
    pub fn default_max_order(self) -> usize {
        match self {
            Suite::RcPipeline | Suite::EndpointCards | Suite::RecognitionNegative => 9,
            Suite::Lemma24 => 8,
            _ => 10,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Suite, String> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
                format!("unknown suite `{s}`; expected one of {}", names.join(", "))
            })
    }
}

impl Serialize for Suite {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

/// One unit of work: an order, plus the certificates of the graphs under test.
/// Order-level suites leave `subjects` empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Case {
    pub order: usize,
    pub subjects: Vec<CanonicalForm>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub order: usize,
    pub subjects: Vec<CanonicalForm>,
    pub detail: String,
}

impl Failure {
    fn new(case: &Case, detail: impl Into<String>) -> Failure {
        Failure {
            order: case.order,
            subjects: case.subjects.clone(),
            detail: detail.into(),
        }
    }

    pub fn case(&self) -> Case {
        Case {
            order: self.order,
            subjects: self.subjects.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub suite: Suite,
    pub max_order: usize,
    pub checked: usize,
    pub failures: Vec<Failure>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn tree_cases(min: usize, max: usize, keep: impl Fn(&Tree) -> bool) -> anyhow::Result<Vec<Case>> {
    let mut cases = Vec::new();
    for p in min..=max {
        for t in enumerate_trees(p)? {
            if keep(t) {
                cases.push(Case {
                    order: p,
                    subjects: vec![canonical_form(t)],
                });
            }
        }
    }
    Ok(cases)
}

fn graph_case(g: &LabeledGraph) -> Case {
    Case {
        order: g.order(),
        subjects: vec![canonical_form(g)],
    }
}

/// Non-cubes whose decks must not be recognised.
pub fn negative_corpus(max_order: usize) -> Vec<LabeledGraph> {
    if max_order < 4 {
        return Vec::new();
    }
    let mut graphs: Vec<LabeledGraph> = (4..=max_order).map(LabeledGraph::cycle).collect();
    if max_order >= 6 {
        graphs.push(LabeledGraph::complete_bipartite(3, 3));
    }
    graphs.extend(non_cube_corpus(
        NEGATIVE_CORPUS_SIZE,
        4,
        max_order,
        CORPUS_SEED ^ 1,
    ));
    graphs
}

/// The work list of `suite` up to `max_order`, in a fixed order.
pub fn cases(suite: Suite, max_order: usize) -> anyhow::Result<Vec<Case>> {
    let cap = enumeration_cap();
    if max_order > cap {
        bail!("max order {max_order} exceeds the enumeration limit {cap}");
    }
    let per_order = |min: usize| -> Vec<Case> {
        (min..=max_order)
            .map(|order| Case {
                order,
                subjects: Vec::new(),
            })
            .collect()
    };
    Ok(match suite {
        Suite::Power | Suite::Lemma24 => tree_cases(1, max_order, |_| true)?,
        Suite::Enumeration => per_order(1),
        Suite::Thm31 | Suite::RcPipeline | Suite::EndpointCards => {
            tree_cases(3, max_order, |_| true)?
        }
        Suite::Thm32 => per_order(1),
        Suite::Lemma21 | Suite::Lemma25 => tree_cases(1, max_order, |t| t.diameter() >= 4)?,
        Suite::RecognitionNegative => negative_corpus(max_order).iter().map(graph_case).collect(),
        Suite::OracleAgreement => {
            let mut cases = Vec::new();
            for p in 1..=max_order {
                for t in enumerate_trees(p)? {
                    cases.push(graph_case(&power(t, 3)));
                }
            }
            if max_order >= 4 {
                let corpus = non_cube_corpus(ORACLE_CORPUS_SIZE, 4, max_order, CORPUS_SEED);
                cases.extend(corpus.iter().map(graph_case));
            }
            cases
        }
    })
}

fn subject_tree(case: &Case, i: usize) -> Result<Tree, Failure> {
    let g = case.subjects.get(i).map(CanonicalForm::to_graph);
    g.and_then(|g| Tree::new(g).ok())
        .ok_or_else(|| Failure::new(case, format!("subject {i} is not a tree")))
}

fn subject_graph(case: &Case) -> Result<LabeledGraph, Failure> {
    case.subjects
        .first()
        .map(CanonicalForm::to_graph)
        .ok_or_else(|| Failure::new(case, "missing subject"))
}

/// Distance threshold computed by Floyd–Warshall, independently of the
/// breadth-first search inside the library.
fn power_by_floyd_warshall(g: &LabeledGraph, k: u32) -> LabeledGraph {
    let n = g.order();
    let inf = u32::MAX / 2;
    let mut d = vec![inf; n * n];
    for u in 0..n {
        d[u * n + u] = 0;
        for &v in g.neighbors(u) {
            d[u * n + v] = 1;
        }
    }
    for m in 0..n {
        for u in 0..n {
            for v in 0..n {
                let via = d[u * n + m] + d[m * n + v];
                if via < d[u * n + v] {
                    d[u * n + v] = via;
                }
            }
        }
    }
    LabeledGraph::from_fn(n, |u, v| d[u * n + v] <= k)
}

fn check_power(case: &Case) -> Result<(), Failure> {
    let t = subject_tree(case, 0)?;
    let expected = power_by_floyd_warshall(&t, 3);
    if power(&t, 3) != expected {
        return Err(Failure::new(
            case,
            "cube differs from the distance threshold",
        ));
    }
    let dist = all_pairs_distances(&t);
    for k in 1..=4 {
        let pk = power(&t, k);
        for u in 0..t.order() {
            for v in 0..t.order() {
                let near = u != v && dist.get(u, v).is_some_and(|d| d <= k);
                if pk.has_edge(u, v) != near {
                    return Err(Failure::new(case, format!("power {k} wrong at ({u}, {v})")));
                }
            }
        }
    }
    Ok(())
}

fn check_enumeration(case: &Case) -> Result<(), Failure> {
    let p = case.order;
    let trees = enumerate_trees(p).map_err(|e| Failure::new(case, e.to_string()))?;
    if let Some(&want) = FREE_TREE_COUNTS.get(p) {
        if trees.len() != want {
            return Err(Failure::new(
                case,
                format!("{} trees, expected {want}", trees.len()),
            ));
        }
    }
    let certs: Vec<CanonicalForm> = trees.iter().map(|t| canonical_form(t)).collect();
    if certs.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Failure::new(
            case,
            "certificates are not strictly increasing",
        ));
    }
    let mut codes: Vec<Vec<u8>> = trees.iter().map(tree_code).collect();
    codes.sort();
    codes.dedup();
    if codes.len() != trees.len() {
        return Err(Failure::new(case, "tree codes collide"));
    }
    if let Some(i) = trees.iter().position(|t| t.order() != p || !is_tree(t)) {
        return Err(Failure::new(
            case,
            format!("entry {i} is not a tree on {p} vertices"),
        ));
    }
    Ok(())
}

fn check_thm31(case: &Case) -> Result<(), Failure> {
    let t = subject_tree(case, 0)?;
    let cube = power(&t, 3);
    let leaves = t.leaves();
    for v in 0..t.order() {
        let commutes = is_isomorphic(&power(&t.remove_vertex(v), 3), &cube.remove_vertex(v));
        if commutes != leaves.contains(&v) {
            let kind = if leaves.contains(&v) {
                "leaf"
            } else {
                "internal vertex"
            };
            return Err(Failure::new(
                case,
                format!("{kind} {v}: deletion commutes with cubing = {commutes}"),
            ));
        }
    }
    Ok(())
}

fn thm32_pair(case: &Case) -> Result<(), Failure> {
    let a = subject_tree(case, 0)?;
    let b = subject_tree(case, 1)?;
    if is_isomorphic(&a, &b) {
        return Ok(());
    }
    let (ca, cb) = (power(&a, 3), power(&b, 3));
    if is_isomorphic(&ca, &cb) && !(is_complete(&ca) && is_complete(&cb)) {
        return Err(Failure::new(
            case,
            "non-isomorphic trees with isomorphic non-complete cubes",
        ));
    }
    Ok(())
}

fn check_thm32(case: &Case) -> Vec<Failure> {
    if case.subjects.len() == 2 {
        return thm32_pair(case).err().into_iter().collect();
    }
    let trees = match enumerate_trees(case.order) {
        Ok(t) => t,
        Err(e) => return vec![Failure::new(case, e.to_string())],
    };
    let mut groups: HashMap<CanonicalForm, Vec<usize>> = HashMap::new();
    for (i, t) in trees.iter().enumerate() {
        groups
            .entry(canonical_form(&power(t, 3)))
            .or_default()
            .push(i);
    }
    let mut failures = Vec::new();
    let mut keys: Vec<&CanonicalForm> = groups.keys().collect();
    keys.sort();
    for key in keys {
        let members = &groups[key];
        if members.len() < 2 || is_complete(&key.to_graph()) {
            continue;
        }
        for (x, &i) in members.iter().enumerate() {
            for &j in &members[x + 1..] {
                let pair = Case {
                    order: case.order,
                    subjects: vec![canonical_form(&trees[i]), canonical_form(&trees[j])],
                };
                failures.extend(thm32_pair(&pair).err());
            }
        }
    }
    failures
}

fn check_lemma21(case: &Case) -> Result<(), Failure> {
    let t = subject_tree(case, 0)?;
    let found = maximal_cliques(&power(&t, 3));
    let mut spans: Vec<VertexSet> = cliques_of_cube(&t).into_iter().map(|c| c.members).collect();
    spans.sort();
    if found != spans {
        return Err(Failure::new(
            case,
            format!(
                "{} maximal cliques, {} internal-edge spans",
                found.len(),
                spans.len()
            ),
        ));
    }
    Ok(())
}

fn check_lemma24(case: &Case) -> Result<(), Failure> {
    let t = subject_tree(case, 0)?;
    let cube = power(&t, 3);
    let leaves: Vec<usize> = t.leaves().into_iter().collect();
    for mask in 1u64..(1 << leaves.len()) {
        let removed: VertexSet = leaves
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        if removed.len() == t.order() {
            continue;
        }
        if !is_tree_cube(&cube.remove_vertices(&removed)) {
            return Err(Failure::new(
                case,
                format!("deleting leaves {removed:?} leaves a non-cube"),
            ));
        }
    }
    Ok(())
}

fn check_lemma25(case: &Case) -> Result<(), Failure> {
    let t = subject_tree(case, 0)?;
    let rebuilt = tree_of_cliques(&power(&t, 3)).map_err(|e| Failure::new(case, e.to_string()))?;
    if !is_isomorphic(&rebuilt, &end_deleted(&t)) {
        return Err(Failure::new(
            case,
            "tree of cliques differs from the end-deleted tree",
        ));
    }
    Ok(())
}

fn check_rc_pipeline(case: &Case) -> Result<(), Failure> {
    let t = subject_tree(case, 0)?;
    let cube = power(&t, 3);
    let cards = deck(&cube);
    if !deck_check(&cube, &cards) {
        return Err(Failure::new(
            case,
            "deck check rejects the graph's own deck",
        ));
    }
    let report = reconstruct(&cards).map_err(|e| Failure::new(case, e.to_string()))?;
    match &report.graph {
        Some(g) if report.recognized && is_isomorphic(g, &cube) => {}
        _ => {
            return Err(Failure::new(
                case,
                format!("not reconstructed: {}", report.trace.join("; ")),
            ))
        }
    }
    Ok(())
}

/// Among the cards of a non-complete cube, the tree cubes should be exactly
/// the leaf-deleted ones. Each internal vertex whose card is a tree cube is
/// reported.
fn check_endpoint_cards(case: &Case) -> Vec<Failure> {
    let t = match subject_tree(case, 0) {
        Ok(t) => t,
        Err(f) => return vec![f],
    };
    let cube = power(&t, 3);
    if is_complete(&cube) {
        return Vec::new();
    }
    let leaves = t.leaves();
    (0..t.order())
        .filter(|v| !leaves.contains(v) && is_tree_cube(&cube.remove_vertex(*v)))
        .map(|v| Failure::new(case, format!("card of internal vertex {v} is a tree cube")))
        .collect()
}

fn check_recognition_negative(case: &Case) -> Result<(), Failure> {
    let g = subject_graph(case)?;
    let cards = deck(&g);
    if !deck_check(&g, &cards) {
        return Err(Failure::new(
            case,
            "deck check rejects the graph's own deck",
        ));
    }
    match recognize(&cards) {
        Ok(false) => Ok(()),
        Ok(true) => Err(Failure::new(case, "deck of a non-cube was recognised")),
        Err(e) => Err(Failure::new(case, e.to_string())),
    }
}

fn certificates(roots: &[Tree]) -> Vec<CanonicalForm> {
    let mut certs: Vec<CanonicalForm> = roots.iter().map(|t| canonical_form(t)).collect();
    certs.sort();
    certs
}

fn check_oracle_agreement(case: &Case) -> Result<(), Failure> {
    let g = subject_graph(case)?;
    let fast = cube_root(&g);
    let oracle = cube_root_oracle(&g).map_err(|e| Failure::new(case, e.to_string()))?;
    let agree = match (&fast, &oracle) {
        (RootResult::Unique(a), RootResult::Unique(b)) => {
            power(a, 3) == g && power(b, 3) == g && is_isomorphic(a, b)
        }
        (
            RootResult::AmbiguousComplete { roots: a, .. },
            RootResult::AmbiguousComplete { roots: b, .. },
        ) => certificates(a) == certificates(b),
        (RootResult::NotACube, RootResult::NotACube) => true,
        _ => false,
    };
    if !agree {
        return Err(Failure::new(
            case,
            format!(
                "cube_root gave {:?}, oracle gave {:?}",
                fast.kind(),
                oracle.kind()
            ),
        ));
    }
    Ok(())
}

/// Runs one case. The failures of a report replay through this function.
pub fn check_case(suite: Suite, case: &Case) -> Vec<Failure> {
    let single = |r: Result<(), Failure>| r.err().into_iter().collect();
    match suite {
        Suite::Power => single(check_power(case)),
        Suite::Enumeration => single(check_enumeration(case)),
        Suite::Thm31 => single(check_thm31(case)),
        Suite::Thm32 => check_thm32(case),
        Suite::Lemma21 => single(check_lemma21(case)),
        Suite::Lemma24 => single(check_lemma24(case)),
        Suite::Lemma25 => single(check_lemma25(case)),
        Suite::RcPipeline => single(check_rc_pipeline(case)),
        Suite::EndpointCards => check_endpoint_cards(case),
        Suite::RecognitionNegative => single(check_recognition_negative(case)),
        Suite::OracleAgreement => single(check_oracle_agreement(case)),
    }
}

/// Re-runs the case behind `failure`.
pub fn replay(suite: Suite, failure: &Failure) -> Vec<Failure> {
    check_case(suite, &failure.case())
}

/// Thread pool with `workers` threads, or one per available core.
pub fn pool(workers: Option<usize>) -> anyhow::Result<rayon::ThreadPool> {
    let threads = match workers {
        Some(0) => bail!("worker count must be positive"),
        Some(n) => n,
        None => std::thread::available_parallelism().map_or(1, |n| n.get()),
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .context("building thread pool")
}

/// Runs `suite` over every case up to `max_order`. Failures come back in
/// case order whatever the worker count.
pub fn run_suite(
    suite: Suite,
    max_order: usize,
    workers: Option<usize>,
) -> anyhow::Result<VerificationReport> {
    let start = Instant::now();
    let pool = pool(workers)?;
    let cases = pool.install(|| cases(suite, max_order))?;
    let failures: Vec<Failure> = pool
        .install(|| {
            cases
                .par_iter()
                .map(|case| check_case(suite, case))
                .collect::<Vec<_>>()
        })
        .into_iter()
        .flatten()
        .collect();
    Ok(VerificationReport {
        suite,
        max_order,
        checked: cases.len(),
        failures,
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(suite.name().parse::<Suite>(), Ok(suite));
        }
        assert!("thm33".parse::<Suite>().is_err());
    }

    #[test]
    fn floyd_warshall_oracle_on_a_path() {
        let p5 = Tree::path(5);
        let cube = power_by_floyd_warshall(&p5, 3);
        assert_eq!(cube.size(), 9);
        assert!(!cube.has_edge(0, 4));
    }

    #[test]
    fn small_sweeps_pass() {
        for suite in Suite::ALL
            .into_iter()
            .filter(|&s| s != Suite::EndpointCards)
        {
            let report = run_suite(suite, 6, Some(2)).unwrap();
            assert!(report.passed(), "{suite}: {:?}", report.failures);
            assert!(report.checked > 0, "{suite}");
        }
    }

    #[test]
    fn injected_failure_replays() {
        let case = Case {
            order: 4,
            subjects: vec![canonical_form(&LabeledGraph::complete(4))],
        };
        let failures = check_case(Suite::RecognitionNegative, &case);
        assert_eq!(failures.len(), 1);
        assert_eq!(replay(Suite::RecognitionNegative, &failures[0]), failures);
    }
}
