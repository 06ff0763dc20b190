//! Bounds, constructions, and certificates for 2-limited broadcast
//! domination on grid-like graphs.
//!
//! A 2-limited broadcast assigns each vertex a strength in `{0,1,2}`; vertex
//! `u` hears `v` when `d(u,v) ≤ f(v)`, and the broadcast dominates when every
//! vertex hears someone. `γ_{b,2}(G)` is the minimum total strength of a
//! dominating broadcast. This crate computes and certifies upper and lower
//! bounds for `γ_{b,2}` on `P_m □ P_n`, `P_m □ C_n`, and `C_m □ C_n`:
//!
//! - [`grid`] — the three graph families with closed-form distances.
//! - [`broadcast`] — strength assignments, cost, the domination predicate.
//! - [`multipack`] — exact-rational multipackings and fractional broadcasts;
//!   weak-duality lower bounds with no floating point anywhere.
//! - [`exact`] — desk-scale exact solvers: enumeration, branch and bound, and
//!   a column-profile dynamic program for narrow strips.
//! - [`constructions`] — certificate-producing constructions: strip tilings
//!   on `P_4 □ P_n`, the mod-13 lattice broadcast for large grids, and the
//!   uniform/row-vector multipackings per family.
//! - [`bounds`] — closed-form bound evaluators backed by embedded data
//!   tables, plus the combined sandwich report.
//! - [`cert`] — JSON certificates and their untrusting verifier.
//! - [`cli`] — the command-line front end (also exercised by the `gridcast`
//!   binary).
//!
//! Every certificate this crate emits re-verifies from scratch: dominating
//! broadcasts by the domination predicate, weightings by exact-rational LP
//! feasibility.

pub mod bounds;
pub mod broadcast;
pub mod cert;
pub mod cli;
pub mod constructions;
pub mod exact;
pub mod grid;
pub mod multipack;

pub use broadcast::Broadcast;
pub use grid::{Family, GridGraph, Vertex};
pub use multipack::FractionalWeighting;
