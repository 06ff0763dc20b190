//! Column-profile dynamic program for strips of at most five rows.
//!
//! Broadcasts reach at most two columns sideways, so a left-to-right scan
//! only ever needs the strengths of the two most recent columns plus the
//! not-yet-heard flags of their vertices. A column is finalized two
//! placements later: its surviving unheard vertices must be picked up by a
//! same-row strength-2 broadcast, or the transition is dead.
//!
//! Cylinders are handled by stitching: enumerate the first two columns,
//! carry the residual unheard sets of columns 0 and 1 through the scan, and
//! close the cycle by checking wraparound hearing in both directions. The
//! stitching multiplies the path cost by up to `9^m` start pairs, so cyclic
//! runs are noticeably heavier than path runs of the same length. Column
//! counts below 4 make the two-column windows overlap ambiguously, so the
//! 3-column cylinder falls back to branch and bound.

use std::collections::HashMap;

use crate::bounds;
use crate::grid::{Family, GridGraph};

use super::{exact_bnb, ExactError, SearchLimits};

const MAX_ROWS: u64 = 5;

/// Per-pattern precomputation for one strip width. A pattern is a base-3
/// encoding of one column's strengths; masks are row bitsets.
struct Patterns {
    count: usize,
    cost: Vec<u64>,
    /// Rows heard from a broadcaster in the same column.
    same: Vec<u8>,
    /// Rows heard one column away.
    adj: Vec<u8>,
    /// Rows heard two columns away (strength-2 broadcasters only).
    two: Vec<u8>,
    full: u8,
}

impl Patterns {
    fn new(m: usize) -> Self {
        let count = 3usize.pow(m as u32);
        let mut cost = vec![0u64; count];
        let mut same = vec![0u8; count];
        let mut adj = vec![0u8; count];
        let mut two = vec![0u8; count];
        for p in 0..count {
            let mut digits = [0u8; MAX_ROWS as usize];
            let mut q = p;
            for d in digits.iter_mut().take(m) {
                *d = (q % 3) as u8;
                q /= 3;
            }
            for (r, &s) in digits.iter().enumerate().take(m) {
                if s == 0 {
                    continue;
                }
                cost[p] += s as u64;
                if s == 2 {
                    two[p] |= 1 << r;
                }
                for t in 0..m {
                    let dist = r.abs_diff(t) as u8;
                    if dist <= s {
                        same[p] |= 1 << t;
                    }
                    if dist < s {
                        adj[p] |= 1 << t;
                    }
                }
            }
        }
        Patterns {
            count,
            cost,
            same,
            adj,
            two,
            full: ((1u16 << m) - 1) as u8,
        }
    }
}

/// DP state: strengths of the two most recent columns (pattern indices) and
/// the unheard flags of their vertices given everything placed so far.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
struct State {
    prev: u16,
    last: u16,
    unheard_prev: u8,
    unheard_last: u8,
}

fn insert_min<K: std::hash::Hash + Eq>(map: &mut HashMap<K, u64>, s: K, cost: u64) {
    map.entry(s)
        .and_modify(|c| *c = (*c).min(cost))
        .or_insert(cost);
}

/// One-pass path DP, returning `answers[n]` for every `1 ≤ n ≤ n_max`.
/// `cost_cap` prunes states that already exceed a known upper bound.
fn path_sweep(m: usize, n_max: u64, cost_cap: u64) -> Vec<Option<u64>> {
    let pats = Patterns::new(m);
    let mut answers = vec![None; (n_max + 1) as usize];
    let mut layer: HashMap<State, u64> = HashMap::new();
    // Virtual all-zero column before column 0 keeps the transition uniform.
    for p in 0..pats.count {
        let cost = pats.cost[p];
        if cost > cost_cap {
            continue;
        }
        insert_min(
            &mut layer,
            State {
                prev: 0,
                last: p as u16,
                unheard_prev: 0,
                unheard_last: pats.full & !pats.same[p],
            },
            cost,
        );
    }
    record_answer(&mut answers, 1, &layer);

    for placed in 1..n_max {
        let mut next: HashMap<State, u64> = HashMap::new();
        for (s, &cost) in &layer {
            for c in 0..pats.count {
                let new_cost = cost + pats.cost[c];
                if new_cost > cost_cap {
                    continue;
                }
                // Finalize the column two back: its unheard vertices must be
                // caught by a same-row strength-2 broadcast in column c.
                if s.unheard_prev & !pats.two[c] != 0 {
                    continue;
                }
                let ns = State {
                    prev: s.last,
                    last: c as u16,
                    unheard_prev: s.unheard_last & !pats.adj[c],
                    unheard_last: pats.full
                        & !pats.two[s.prev as usize]
                        & !pats.adj[s.last as usize]
                        & !pats.same[c],
                };
                insert_min(&mut next, ns, new_cost);
            }
        }
        layer = next;
        record_answer(&mut answers, placed + 1, &layer);
    }
    answers
}

fn record_answer(answers: &mut [Option<u64>], n: u64, layer: &HashMap<State, u64>) {
    let best = layer
        .iter()
        .filter(|(s, _)| s.unheard_prev == 0 && s.unheard_last == 0)
        .map(|(_, &c)| c)
        .min();
    if let Some(b) = best {
        answers[n as usize] = Some(b);
    }
}

/// Cyclic DP state: the path state plus the residual unheard sets of the
/// first two columns, which can only be satisfied by wraparound hearing.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
struct CycleState {
    core: State,
    residual0: u8,
    residual1: u8,
}

/// Cylinder value for one `n ≥ 4` by first-two-column stitching.
fn cycle_value(m: usize, n: u64, cost_cap: u64) -> Option<u64> {
    let pats = Patterns::new(m);
    let mut best: Option<u64> = None;
    for s0 in 0..pats.count {
        for s1 in 0..pats.count {
            let base = pats.cost[s0] + pats.cost[s1];
            if base > cost_cap {
                continue;
            }
            let init = CycleState {
                core: State {
                    prev: s0 as u16,
                    last: s1 as u16,
                    unheard_prev: pats.full & !pats.same[s0] & !pats.adj[s1],
                    unheard_last: pats.full & !pats.adj[s0] & !pats.same[s1],
                },
                residual0: 0,
                residual1: 0,
            };
            let mut layer: HashMap<CycleState, u64> = HashMap::new();
            layer.insert(init, base);

            for placed in 2..n {
                let mut next: HashMap<CycleState, u64> = HashMap::new();
                for (s, &cost) in &layer {
                    for c in 0..pats.count {
                        let new_cost = cost + pats.cost[c];
                        if new_cost > cost_cap {
                            continue;
                        }
                        let survivors = s.core.unheard_prev & !pats.two[c];
                        let (residual0, residual1) = match placed {
                            // Columns 0 and 1 are not finalized here; their
                            // survivors wait for wraparound hearing.
                            2 => (survivors, s.residual1),
                            3 => (s.residual0, survivors),
                            _ => {
                                if survivors != 0 {
                                    continue;
                                }
                                (s.residual0, s.residual1)
                            }
                        };
                        let ns = CycleState {
                            core: State {
                                prev: s.core.last,
                                last: c as u16,
                                unheard_prev: s.core.unheard_last & !pats.adj[c],
                                unheard_last: pats.full
                                    & !pats.two[s.core.prev as usize]
                                    & !pats.adj[s.core.last as usize]
                                    & !pats.same[c],
                            },
                            residual0,
                            residual1,
                        };
                        insert_min(&mut next, ns, new_cost);
                    }
                }
                layer = next;
                if layer.is_empty() {
                    break;
                }
            }

            // Close the cycle: wraparound hearing between the last two and
            // the first two columns, in both directions.
            for (s, &cost) in &layer {
                let ok = s.core.unheard_prev & !pats.two[s0] == 0
                    && s.core.unheard_last & !(pats.adj[s0] | pats.two[s1]) == 0
                    && s.residual0
                        & !(pats.adj[s.core.last as usize] | pats.two[s.core.prev as usize])
                        == 0
                    && s.residual1 & !pats.two[s.core.last as usize] == 0;
                if ok && best.is_none_or(|b| cost < b) {
                    best = Some(cost);
                }
            }
        }
    }
    best
}

/// Upper bound used as a sound cost prune inside the DP. Any state costing
/// more than a certified upper bound can never complete into an optimum.
fn prune_cap(family: Family, m: u64, n: u64) -> u64 {
    GridGraph::new(family, m as u32, n as u32)
        .ok()
        .and_then(|g| bounds::upper_bound(&g).ok())
        .map_or(u64::MAX, |b| b.value)
}

/// Exact `γ_{b,2}` for path or cylinder strips with at most five rows, in
/// time linear in the strip length for fixed row count.
pub fn exact_profile_dp(family: Family, m: u64, n: u64) -> Result<u64, ExactError> {
    match family {
        Family::PxP | Family::PxC => {}
        Family::CxC => return Err(ExactError::UnsupportedFamily),
    }
    if !(2..=MAX_ROWS).contains(&m) {
        return Err(ExactError::UnsupportedWidth {
            rows: m,
            max: MAX_ROWS,
        });
    }
    if n < m {
        return Err(ExactError::StripTooShort { rows: m });
    }
    match family {
        Family::PxP => {
            let cap = prune_cap(family, m, n);
            let answers = path_sweep(m as usize, n, cap);
            Ok(answers[n as usize].expect("path DP always reaches column n"))
        }
        Family::PxC => {
            if n == 3 {
                // Two-column windows overlap on a 3-cycle; delegate to the
                // branch-and-bound solver (at most 15 vertices here).
                let g =
                    GridGraph::new(family, m as u32, n as u32).expect("dimensions validated above");
                let out = exact_bnb(&g, &SearchLimits::default())?;
                return Ok(out.value);
            }
            let cap = prune_cap(family, m, n);
            Ok(cycle_value(m as usize, n, cap).expect("cycle DP finds the certified optimum"))
        }
        Family::CxC => unreachable!(),
    }
}

/// Path-strip answers for every `m ≤ n' ≤ n_max` in one pass (paths), or one
/// run per length (cylinders).
pub fn profile_dp_sweep(
    family: Family,
    m: u64,
    n_max: u64,
) -> Result<Vec<Option<u64>>, ExactError> {
    match family {
        Family::PxP => {
            if !(2..=MAX_ROWS).contains(&m) {
                return Err(ExactError::UnsupportedWidth {
                    rows: m,
                    max: MAX_ROWS,
                });
            }
            let cap = (m..=n_max)
                .map(|n| prune_cap(family, m, n))
                .max()
                .unwrap_or(u64::MAX);
            let mut answers = path_sweep(m as usize, n_max, cap);
            for n in 0..m.min(answers.len() as u64) {
                answers[n as usize] = None;
            }
            Ok(answers)
        }
        Family::PxC => {
            let mut answers = vec![None; (n_max + 1) as usize];
            for n in m.max(3)..=n_max {
                answers[n as usize] = Some(exact_profile_dp(family, m, n)?);
            }
            Ok(answers)
        }
        Family::CxC => Err(ExactError::UnsupportedFamily),
    }
}
