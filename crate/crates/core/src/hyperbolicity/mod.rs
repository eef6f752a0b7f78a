//! Gromov hyperbolicity: four-point arithmetic, pruning predicates, the
//! hierarchical search, and a brute-force oracle.

mod brute;
mod checks;
mod classify;
mod search;
mod value;

pub use brute::{brute_force_hyperbolicity, brute_force_hyperbolicity_with_limit, DEFAULT_BRUTE_FORCE_LIMIT};
pub use checks::{bound_lemmas_check, lemma_sandwich_check, CheckReport};
pub use classify::{classify, compute_acc_val, valuable_bound2, AccVal, Candidate, PairBounds, SkipRule, Verdict};
pub use search::{
    compute_hyperbolicity, hyperbolicity, LevelStats, PassStats, RunStats, SearchConfig, SearchMode,
    StopPoint, Timings, DEFAULT_MEMORY_BUDGET,
};
pub use value::{delta4, tau4, Doubled};

use serde::Serialize;

use crate::graph::VertexId;

/// A value together with a quadruple attaining it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct QuadrupleResult {
    pub delta: Doubled,
    pub witness: [VertexId; 4],
}

impl QuadrupleResult {
    /// δ = 0 witnessed by the first four vertex ids (repeated when `n < 4`).
    pub fn trivial(n: usize) -> QuadrupleResult {
        let n = n.max(1) as VertexId;
        QuadrupleResult { delta: Doubled::ZERO, witness: [0, 1 % n, 2 % n, 3 % n] }
    }
}
