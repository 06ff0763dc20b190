//! Exact computation of `γ_{b,2}` at desk scale.
//!
//! Three independent routes:
//! - [`exact_bruteforce`]: iterative-deepening enumeration of all strength
//!   assignments, the ground-truth oracle for tiny graphs;
//! - [`exact_bnb`]: branch and bound on the first-unheard vertex with
//!   counting-based pruning, for graphs up to a few dozen vertices;
//! - [`exact_profile_dp`]: a column-profile dynamic program for strips of at
//!   most five rows, linear in the strip length.

mod bnb;
mod profile;

use std::time::Duration;

use thiserror::Error;

use crate::broadcast::Broadcast;
use crate::grid::GridGraph;

pub use bnb::{exact_bnb, exact_bnb_seeded, BnbOutcome};
pub use profile::{exact_profile_dp, profile_dp_sweep};

/// Resource caps for the exact solvers.
#[derive(Clone, Debug)]
pub struct SearchLimits {
    /// Only look for solutions of cost at most this cap.
    pub max_cost: Option<u64>,
    /// Maximum number of search nodes expanded.
    pub node_budget: u64,
    /// Wall-clock cap.
    pub time_budget: Option<Duration>,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_cost: None,
            node_budget: 20_000_000,
            time_budget: None,
        }
    }
}

impl SearchLimits {
    pub fn with_node_budget(budget: u64) -> Self {
        SearchLimits {
            node_budget: budget,
            ..SearchLimits::default()
        }
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ExactError {
    #[error("{0} has {1} vertices, above the brute-force cap of {2}")]
    TooLarge(GridGraph, u64, u64),
    #[error("search budget exhausted before any solution was found")]
    BudgetExceeded,
    #[error("no dominating broadcast of cost at most {0} exists")]
    NoSolutionUnderCap(u64),
    #[error("profile DP supports 2 to {max} rows, got {rows}")]
    UnsupportedWidth { rows: u64, max: u64 },
    #[error("profile DP needs at least as many columns as rows ({rows})")]
    StripTooShort { rows: u64 },
    #[error("profile DP supports path and cylinder strips only")]
    UnsupportedFamily,
}

/// Minimum cost of any dominating broadcast, by iterative-deepening
/// enumeration over all `3^{mn}` strength assignments. Guarded to tiny
/// graphs; this is the crate's ground truth.
pub fn exact_bruteforce(g: &GridGraph, limits: &SearchLimits) -> Result<u64, ExactError> {
    const MAX_VERTICES: u64 = 16;
    let nv = g.vertex_count();
    if nv > MAX_VERTICES {
        return Err(ExactError::TooLarge(*g, nv, MAX_VERTICES));
    }
    let verts: Vec<_> = g.vertices().collect();
    let start = std::time::Instant::now();
    let mut nodes = 0u64;

    // Deepen on the cost cap; at each level enumerate every assignment whose
    // total cost fits and test domination at the leaves. The first level
    // with a dominating assignment is the optimum.
    let hard_cap = limits.max_cost.unwrap_or(2 * nv);
    for cap in 0..=hard_cap {
        let mut b = Broadcast::new(*g);
        if search_all(&verts, &mut b, 0, cap, limits, &start, &mut nodes)? {
            return Ok(cap);
        }
    }
    Err(ExactError::NoSolutionUnderCap(hard_cap))
}

#[allow(clippy::too_many_arguments)]
fn search_all(
    verts: &[crate::grid::Vertex],
    b: &mut Broadcast,
    idx: usize,
    budget: u64,
    limits: &SearchLimits,
    start: &std::time::Instant,
    nodes: &mut u64,
) -> Result<bool, ExactError> {
    *nodes += 1;
    if *nodes > limits.node_budget {
        return Err(ExactError::BudgetExceeded);
    }
    if (*nodes).is_multiple_of(65536) {
        if let Some(t) = limits.time_budget {
            if start.elapsed() > t {
                return Err(ExactError::BudgetExceeded);
            }
        }
    }
    if idx == verts.len() {
        return Ok(b.is_dominating().dominating);
    }
    for s in 0..=2u64.min(budget) {
        b.set(verts[idx], s as u32).expect("in-range strengths");
        if search_all(verts, b, idx + 1, budget - s, limits, start, nodes)? {
            b.set(verts[idx], 0).expect("reset");
            return Ok(true);
        }
    }
    b.set(verts[idx], 0).expect("reset");
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::Family;

    fn grid(family: Family, m: u32, n: u32) -> GridGraph {
        GridGraph::new(family, m, n).unwrap()
    }

    #[test]
    fn bruteforce_examples() {
        let limits = SearchLimits::default();
        assert_eq!(
            exact_bruteforce(&grid(Family::PxP, 2, 2), &limits).unwrap(),
            2
        );
        assert_eq!(
            exact_bruteforce(&grid(Family::CxC, 3, 3), &limits).unwrap(),
            2
        );
        assert_eq!(
            exact_bruteforce(&grid(Family::PxP, 3, 3), &limits).unwrap(),
            2
        );
    }

    #[test]
    fn bruteforce_rejects_large_graphs() {
        assert!(matches!(
            exact_bruteforce(&grid(Family::PxP, 5, 5), &SearchLimits::default()),
            Err(ExactError::TooLarge(..))
        ));
    }

    #[test]
    fn bruteforce_respects_cost_cap() {
        let limits = SearchLimits {
            max_cost: Some(1),
            ..SearchLimits::default()
        };
        assert!(matches!(
            exact_bruteforce(&grid(Family::PxP, 2, 4), &limits),
            Err(ExactError::NoSolutionUnderCap(1))
        ));
    }

    #[test]
    fn bnb_matches_bruteforce_on_tiny_graphs() {
        let limits = SearchLimits::default();
        for family in [Family::PxP, Family::PxC, Family::CxC] {
            for m in 2..=4u32 {
                for n in 2..=6u32 {
                    let Ok(g) = GridGraph::new(family, m, n) else {
                        continue;
                    };
                    if g.vertex_count() > 12 {
                        continue;
                    }
                    let brute = exact_bruteforce(&g, &limits).unwrap();
                    let bnb = exact_bnb(&g, &limits).unwrap();
                    assert!(bnb.proved_optimal);
                    assert_eq!(bnb.value, brute, "{g}");
                }
            }
        }
    }
}
