//! Verification sweeps, collision search, and report types behind the
//! `treecube` command-line tool.

pub mod collide;
pub mod corpus;
pub mod suite;

pub use collide::{collide, CollisionPair, CollisionResult};
pub use corpus::{non_cube_corpus, random_tree, CORPUS_SEED};
pub use suite::{
    cases, check_case, negative_corpus, pool, replay, run_suite, Case, Failure, Suite,
    VerificationReport, FREE_TREE_COUNTS,
};
