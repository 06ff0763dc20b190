//! Branch and bound for `γ_{b,2}`.
//!
//! Branching rule: take the row-major-first unheard vertex `u` and try every
//! way some vertex within reach could cover it — strength 2 before strength
//! 1, nearer coverers first. Pruning uses pure counting: with per-graph
//! maximum ball sizes `b1` and `b2`, a cost budget of `C` covers at most
//! `b2·⌊C/2⌋ + b1·(C mod 2)` vertices when `b2 ≥ 2·b1`, and at most `b1·C`
//! otherwise, so the cheapest completion covering `u` unheard vertices has a
//! closed-form floor. No relaxation is solved inside the search.

use std::time::Instant;

use crate::broadcast::Broadcast;
use crate::grid::GridGraph;

use super::{ExactError, SearchLimits};

/// Result of a branch-and-bound run. When `proved_optimal` is false the
/// search exhausted its budget and `value` is only the best incumbent's
/// cost (still a valid upper bound; the certificate still dominates).
#[derive(Clone, Debug)]
pub struct BnbOutcome {
    pub value: u64,
    pub certificate: Broadcast,
    pub proved_optimal: bool,
    pub nodes: u64,
}

/// Cheapest conceivable completion cost to cover `unheard` vertices given
/// maximum ball sizes, a pure counting bound.
fn completion_lower_bound(unheard: u64, b1: u64, b2: u64) -> u64 {
    if unheard == 0 {
        return 0;
    }
    if b2 >= 2 * b1 {
        let q = unheard / b2;
        let r = unheard % b2;
        2 * q
            + if r == 0 {
                0
            } else if r <= b1 {
                1
            } else {
                2
            }
    } else {
        unheard.div_ceil(b1)
    }
}

struct Search<'a> {
    g: &'a GridGraph,
    balls: [Vec<Vec<u16>>; 2],
    b1max: u64,
    b2max: u64,
    strengths: Vec<u8>,
    heard_by: Vec<u16>,
    unheard: u64,
    cost: u64,
    incumbent: Option<(u64, Vec<u8>)>,
    bound: u64,
    nodes: u64,
    limits: &'a SearchLimits,
    start: Instant,
    exhausted: bool,
}

impl<'a> Search<'a> {
    fn new(g: &'a GridGraph, limits: &'a SearchLimits) -> Self {
        let nv = g.vertex_count() as usize;
        let mut balls = [vec![Vec::new(); nv], vec![Vec::new(); nv]];
        for v in g.vertices() {
            for (slot, r) in [(0usize, 1u32), (1, 2)] {
                balls[slot][g.index_of(v)] = g
                    .ball(v, r)
                    .expect("radius 1 or 2")
                    .into_iter()
                    .map(|u| g.index_of(u) as u16)
                    .collect();
            }
        }
        let b1max = balls[0].iter().map(Vec::len).max().unwrap_or(0) as u64;
        let b2max = balls[1].iter().map(Vec::len).max().unwrap_or(0) as u64;
        let bound = limits.max_cost.map_or(u64::MAX, |c| c.saturating_add(1));
        Search {
            g,
            balls,
            b1max,
            b2max,
            strengths: vec![0; nv],
            heard_by: vec![0; nv],
            unheard: nv as u64,
            cost: 0,
            incumbent: None,
            bound,
            nodes: 0,
            limits,
            start: Instant::now(),
            exhausted: false,
        }
    }

    fn budget_ok(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        if self.nodes > self.limits.node_budget {
            self.exhausted = true;
            return false;
        }
        if self.nodes.is_multiple_of(16384) {
            if let Some(t) = self.limits.time_budget {
                if self.start.elapsed() > t {
                    self.exhausted = true;
                    return false;
                }
            }
        }
        true
    }

    fn assign(&mut self, v: usize, s: u8) {
        self.strengths[v] = s;
        self.cost += s as u64;
        for &u in &self.balls[(s - 1) as usize][v] {
            if self.heard_by[u as usize] == 0 {
                self.unheard -= 1;
            }
            self.heard_by[u as usize] += 1;
        }
    }

    fn unassign(&mut self, v: usize, s: u8) {
        self.strengths[v] = 0;
        self.cost -= s as u64;
        for &u in &self.balls[(s - 1) as usize][v] {
            self.heard_by[u as usize] -= 1;
            if self.heard_by[u as usize] == 0 {
                self.unheard += 1;
            }
        }
    }

    fn record_if_better(&mut self) {
        if self.cost < self.bound {
            self.bound = self.cost;
            self.incumbent = Some((self.cost, self.strengths.clone()));
        }
    }

    fn dfs(&mut self, first_unheard_hint: usize) {
        self.nodes += 1;
        if !self.budget_ok() {
            return;
        }
        if self.unheard == 0 {
            self.record_if_better();
            return;
        }
        if self.cost + completion_lower_bound(self.unheard, self.b1max, self.b2max) >= self.bound {
            return;
        }
        let mut u = first_unheard_hint;
        while self.heard_by[u] != 0 {
            u += 1;
        }
        let target = self.g.vertex_at(u);

        // Candidate coverers: strength 2 over the radius-2 ball, then
        // strength 1 over the radius-1 ball; within a strength, nearest
        // first, then row-major. Already-assigned vertices are fixed.
        let mut candidates: Vec<(u8, u32, u16)> = Vec::with_capacity(18);
        for (s, slot) in [(2u8, 1usize), (1, 0)] {
            for &v in &self.balls[slot][u] {
                if self.strengths[v as usize] == 0 {
                    let d = self
                        .g
                        .distance_unchecked(target, self.g.vertex_at(v as usize));
                    candidates.push((s, d, v));
                }
            }
        }
        candidates.sort_by_key(|&(s, d, v)| (std::cmp::Reverse(s), d, v));

        for (s, _, v) in candidates {
            if self.cost + s as u64 >= self.bound {
                continue;
            }
            self.assign(v as usize, s);
            self.dfs(u);
            self.unassign(v as usize, s);
            if self.exhausted {
                return;
            }
        }
    }
}

/// Exact `γ_{b,2}` by branch and bound; see [`exact_bnb_seeded`].
pub fn exact_bnb(g: &GridGraph, limits: &SearchLimits) -> Result<BnbOutcome, ExactError> {
    exact_bnb_seeded(g, limits, None)
}

/// Branch and bound with an optional starting incumbent (a known dominating
/// broadcast, e.g. from a construction). The seed is re-verified before
/// use. Single-threaded and fully deterministic: value and certificate are
/// functions of the inputs alone.
pub fn exact_bnb_seeded(
    g: &GridGraph,
    limits: &SearchLimits,
    seed: Option<&Broadcast>,
) -> Result<BnbOutcome, ExactError> {
    let mut search = Search::new(g, limits);
    if let Some(b) = seed {
        let check = b.is_dominating();
        if b.graph() == g && check.dominating && b.cost() < search.bound {
            let mut strengths = vec![0u8; g.vertex_count() as usize];
            for (v, s) in b.broadcasters() {
                strengths[g.index_of(v)] = s as u8;
            }
            search.bound = b.cost();
            search.incumbent = Some((b.cost(), strengths));
        }
    }
    search.dfs(0);

    let exhausted = search.exhausted;
    let nodes = search.nodes;
    match search.incumbent {
        Some((value, strengths)) => {
            let certificate = broadcast_from(g, &strengths);
            debug_assert!(certificate.is_dominating().dominating);
            debug_assert_eq!(certificate.cost(), value);
            Ok(BnbOutcome {
                value,
                certificate,
                proved_optimal: !exhausted,
                nodes,
            })
        }
        None => {
            if exhausted {
                Err(ExactError::BudgetExceeded)
            } else {
                Err(ExactError::NoSolutionUnderCap(
                    limits
                        .max_cost
                        .expect("complete search finds a solution unless capped"),
                ))
            }
        }
    }
}

fn broadcast_from(g: &GridGraph, strengths: &[u8]) -> Broadcast {
    let entries = strengths
        .iter()
        .enumerate()
        .filter(|&(_, &s)| s > 0)
        .map(|(i, &s)| (g.vertex_at(i), s as u32));
    Broadcast::from_entries(*g, entries).expect("search strengths are valid")
}
