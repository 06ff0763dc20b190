//! 2-limited broadcasts: strength assignments `V → {0,1,2}` and the
//! domination predicate.
//!
//! A vertex `u` hears a broadcast from `v` when `d(u,v) ≤ f(v)`; the
//! assignment dominates when every vertex hears someone. Strengths above 2
//! are rejected at construction so the limit holds globally.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::grid::{GridGraph, Vertex};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum BroadcastError {
    #[error("strength {strength} at {vertex} outside {{0,1,2}}")]
    StrengthOutOfRange { vertex: Vertex, strength: u32 },
    #[error("broadcaster {0} outside the graph")]
    VertexOutOfRange(Vertex),
}

/// Outcome of the domination check. `witness` is the row-major-first unheard
/// vertex when not dominating.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DominationCheck {
    pub dominating: bool,
    pub witness: Option<Vertex>,
}

/// A 2-limited broadcast on a grid graph. Only nonzero strengths are stored;
/// every unkeyed vertex broadcasts at strength 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Broadcast {
    graph: GridGraph,
    strength: BTreeMap<Vertex, u8>,
}

impl Broadcast {
    /// Empty (all-zero) broadcast.
    pub fn new(graph: GridGraph) -> Self {
        Broadcast {
            graph,
            strength: BTreeMap::new(),
        }
    }

    /// Builds from `(vertex, strength)` pairs, validating range and strengths.
    pub fn from_entries<I>(graph: GridGraph, entries: I) -> Result<Self, BroadcastError>
    where
        I: IntoIterator<Item = (Vertex, u32)>,
    {
        let mut b = Broadcast::new(graph);
        for (v, s) in entries {
            b.set(v, s)?;
        }
        Ok(b)
    }

    pub fn graph(&self) -> &GridGraph {
        &self.graph
    }

    /// Sets one vertex's strength. Strength 0 removes the entry.
    pub fn set(&mut self, v: Vertex, strength: u32) -> Result<(), BroadcastError> {
        if !self.graph.contains(v) {
            return Err(BroadcastError::VertexOutOfRange(v));
        }
        match strength {
            0 => {
                self.strength.remove(&v);
            }
            1 | 2 => {
                self.strength.insert(v, strength as u8);
            }
            s => {
                return Err(BroadcastError::StrengthOutOfRange {
                    vertex: v,
                    strength: s,
                })
            }
        }
        Ok(())
    }

    pub fn strength(&self, v: Vertex) -> u32 {
        self.strength.get(&v).copied().unwrap_or(0) as u32
    }

    /// Broadcasters with nonzero strength, in row-major order.
    pub fn broadcasters(&self) -> impl Iterator<Item = (Vertex, u32)> + '_ {
        self.strength.iter().map(|(v, s)| (*v, *s as u32))
    }

    pub fn broadcaster_count(&self) -> usize {
        self.strength.len()
    }

    /// Total cost `Σ_v f(v)`.
    pub fn cost(&self) -> u64 {
        self.strength.values().map(|&s| s as u64).sum()
    }

    /// Diagnostic ASCII dump: one line per row, `.` for silent vertices and
    /// the strength digit for broadcasters. Debugging aid only.
    pub fn ascii_grid(&self) -> String {
        let mut out = String::new();
        for row in 0..self.graph.rows() {
            for col in 0..self.graph.cols() {
                match self.strength(Vertex::new(row, col)) {
                    0 => out.push('.'),
                    s => out.push(char::from_digit(s, 10).expect("strength digit")),
                }
            }
            out.push('\n');
        }
        out
    }

    /// Checks that every vertex hears some broadcaster.
    pub fn is_dominating(&self) -> DominationCheck {
        for u in self.graph.vertices() {
            let heard = self
                .strength
                .iter()
                .any(|(&v, &s)| self.graph.distance_unchecked(u, v) <= s as u32);
            if !heard {
                return DominationCheck {
                    dominating: false,
                    witness: Some(u),
                };
            }
        }
        DominationCheck {
            dominating: true,
            witness: None,
        }
    }
}
