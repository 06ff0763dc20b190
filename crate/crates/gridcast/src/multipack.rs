//! Exact-rational vertex weightings: fractional 2-limited multipackings and
//! fractional dominating broadcasts.
//!
//! A multipacking assigns nonnegative weights `y_i` with `Σ_{ball(j,ℓ)} y_i ≤ ℓ`
//! for every vertex `j` and `ℓ ∈ {1,2}`. By weak LP duality its total weight
//! lower-bounds the cost of every dominating broadcast, fractional or
//! integral, so `⌈Σ y_i⌉ ≤ γ_{b,2}`. The dual side, a fractional broadcast,
//! needs `Σ_{ball(j,1)} x_{i,1} + Σ_{ball(j,2)} x_{i,2} ≥ 1` everywhere.
//!
//! All arithmetic is arbitrary-precision rational; feasibility verdicts are
//! bit-for-bit reproducible and no tolerance parameter exists anywhere.

use std::collections::BTreeMap;

use num::{BigRational, One, Signed, Zero};
use thiserror::Error;

use crate::broadcast::Broadcast;
use crate::grid::{GridGraph, Vertex};

/// Parses an exact rational from `"p/q"` or a bare integer string.
pub fn parse_rational(s: &str) -> Result<BigRational, MultipackError> {
    let parse_int = |t: &str| {
        t.trim()
            .parse::<num::BigInt>()
            .map_err(|_| MultipackError::BadRational(s.to_string()))
    };
    let r = match s.split_once('/') {
        Some((p, q)) => {
            let den = parse_int(q)?;
            if den.is_zero() {
                return Err(MultipackError::BadRational(s.to_string()));
            }
            BigRational::new(parse_int(p)?, den)
        }
        None => BigRational::from_integer(parse_int(s)?),
    };
    Ok(r)
}

/// Renders a rational as `p/q` with positive reduced denominator, or a bare
/// integer when the denominator is one.
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightingKind {
    Multipacking,
    FractionalBroadcastStrength1,
    FractionalBroadcastStrength2,
    FractionalBroadcastMixed,
}

impl WeightingKind {
    pub fn is_fractional_broadcast(self) -> bool {
        !matches!(self, WeightingKind::Multipacking)
    }
}

#[derive(Clone, Debug, Error, PartialEq)]
pub enum MultipackError {
    #[error("operation expects kind {expected:?}, got {actual:?}")]
    WrongKind {
        expected: &'static str,
        actual: WeightingKind,
    },
    #[error("negative weight at {0}")]
    NegativeWeight(Vertex),
    #[error("weighted vertex {0} outside the graph")]
    VertexOutOfRange(Vertex),
    #[error(
        "multipacking certificate infeasible: ball({witness}, {radius}) sums to {sum} > {radius}"
    )]
    InfeasibleCertificate {
        witness: Vertex,
        radius: u32,
        sum: String,
    },
    #[error("malformed rational `{0}`")]
    BadRational(String),
}

/// Result of a multipacking feasibility check; the witness is the first
/// violated `(vertex, radius)` in row-major order, radius 1 before 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultipackCheck {
    pub feasible: bool,
    pub witness: Option<(Vertex, u32)>,
}

/// Result of a fractional-broadcast feasibility check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FractionalBroadcastCheck {
    pub feasible: bool,
    pub witness: Option<Vertex>,
}

/// A nonnegative exact-rational weighting of the vertices of one graph.
///
/// For the mixed fractional-broadcast kind two maps are carried, one per
/// strength; the other kinds use a single map (interpreted as `y_i`,
/// `x_{i,1}`, or `x_{i,2}` according to the kind). Unkeyed vertices weigh 0.
#[derive(Clone, Debug, PartialEq)]
pub struct FractionalWeighting {
    graph: GridGraph,
    kind: WeightingKind,
    weights: BTreeMap<Vertex, BigRational>,
    /// Strength-2 part, used only by the mixed kind.
    weights_s2: BTreeMap<Vertex, BigRational>,
}

impl FractionalWeighting {
    pub fn new(graph: GridGraph, kind: WeightingKind) -> Self {
        FractionalWeighting {
            graph,
            kind,
            weights: BTreeMap::new(),
            weights_s2: BTreeMap::new(),
        }
    }

    pub fn from_entries<I>(
        graph: GridGraph,
        kind: WeightingKind,
        entries: I,
    ) -> Result<Self, MultipackError>
    where
        I: IntoIterator<Item = (Vertex, BigRational)>,
    {
        let mut w = FractionalWeighting::new(graph, kind);
        for (v, r) in entries {
            w.set(v, r)?;
        }
        Ok(w)
    }

    /// Uniform weighting `v ↦ r` over the whole vertex set.
    pub fn uniform(graph: GridGraph, kind: WeightingKind, r: BigRational) -> Self {
        let mut w = FractionalWeighting::new(graph, kind);
        if !r.is_zero() {
            for v in graph.vertices() {
                w.weights.insert(v, r.clone());
            }
        }
        w
    }

    /// Embeds a dominating (or any) integer broadcast as a mixed fractional
    /// broadcast with 0/1 coordinates; the cost is preserved.
    pub fn from_broadcast(b: &Broadcast) -> Self {
        let mut w = FractionalWeighting::new(*b.graph(), WeightingKind::FractionalBroadcastMixed);
        for (v, s) in b.broadcasters() {
            match s {
                1 => {
                    w.weights.insert(v, BigRational::one());
                }
                2 => {
                    w.weights_s2.insert(v, BigRational::one());
                }
                _ => unreachable!("broadcast strengths are 1 or 2"),
            }
        }
        w
    }

    pub fn graph(&self) -> &GridGraph {
        &self.graph
    }

    pub fn kind(&self) -> WeightingKind {
        self.kind
    }

    pub fn set(&mut self, v: Vertex, r: BigRational) -> Result<(), MultipackError> {
        self.set_part(v, r, false)
    }

    /// Sets a strength-2 coordinate (mixed kind only).
    pub fn set_s2(&mut self, v: Vertex, r: BigRational) -> Result<(), MultipackError> {
        self.set_part(v, r, true)
    }

    fn set_part(&mut self, v: Vertex, r: BigRational, s2: bool) -> Result<(), MultipackError> {
        if !self.graph.contains(v) {
            return Err(MultipackError::VertexOutOfRange(v));
        }
        if r.is_negative() {
            return Err(MultipackError::NegativeWeight(v));
        }
        let map = if s2 {
            &mut self.weights_s2
        } else {
            &mut self.weights
        };
        if r.is_zero() {
            map.remove(&v);
        } else {
            map.insert(v, r);
        }
        Ok(())
    }

    pub fn weight(&self, v: Vertex) -> BigRational {
        self.weights
            .get(&v)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn weight_s2(&self, v: Vertex) -> BigRational {
        self.weights_s2
            .get(&v)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Nonzero entries of the primary map, row-major.
    pub fn entries(&self) -> impl Iterator<Item = (Vertex, &BigRational)> + '_ {
        self.weights.iter().map(|(v, r)| (*v, r))
    }

    /// Nonzero entries of the strength-2 map (mixed kind), row-major.
    pub fn entries_s2(&self) -> impl Iterator<Item = (Vertex, &BigRational)> + '_ {
        self.weights_s2.iter().map(|(v, r)| (*v, r))
    }

    /// Total cost: `Σ y_i` for a multipacking, `Σ x_{i,1} + 2 Σ x_{i,2}` for
    /// fractional broadcasts.
    pub fn mp_cost(&self) -> BigRational {
        let two = BigRational::from_integer(2.into());
        match self.kind {
            WeightingKind::Multipacking | WeightingKind::FractionalBroadcastStrength1 => {
                self.weights.values().sum()
            }
            WeightingKind::FractionalBroadcastStrength2 => {
                self.weights.values().sum::<BigRational>() * two
            }
            WeightingKind::FractionalBroadcastMixed => {
                self.weights.values().sum::<BigRational>()
                    + self.weights_s2.values().sum::<BigRational>() * two
            }
        }
    }

    fn ball_sum(&self, center: Vertex, radius: u32, s2: bool) -> BigRational {
        let map = if s2 { &self.weights_s2 } else { &self.weights };
        let mut sum = BigRational::zero();
        for u in self.graph.ball(center, radius).expect("radius 1 or 2") {
            if let Some(w) = map.get(&u) {
                sum += w;
            }
        }
        sum
    }

    /// LP feasibility of a multipacking: every radius-ℓ ball sums to ≤ ℓ.
    pub fn is_feasible_multipacking(&self) -> Result<MultipackCheck, MultipackError> {
        if self.kind != WeightingKind::Multipacking {
            return Err(MultipackError::WrongKind {
                expected: "Multipacking",
                actual: self.kind,
            });
        }
        for j in self.graph.vertices() {
            for radius in [1u32, 2] {
                let sum = self.ball_sum(j, radius, false);
                if sum > BigRational::from_integer(radius.into()) {
                    return Ok(MultipackCheck {
                        feasible: false,
                        witness: Some((j, radius)),
                    });
                }
            }
        }
        Ok(MultipackCheck {
            feasible: true,
            witness: None,
        })
    }

    /// LP feasibility of a fractional dominating broadcast: every vertex
    /// accumulates at least 1 from strength-1 weights within distance 1 and
    /// strength-2 weights within distance 2.
    pub fn is_feasible_fractional_broadcast(
        &self,
    ) -> Result<FractionalBroadcastCheck, MultipackError> {
        let (s1, s2): (&BTreeMap<_, _>, &BTreeMap<_, _>) = match self.kind {
            WeightingKind::Multipacking => {
                return Err(MultipackError::WrongKind {
                    expected: "a fractional-broadcast kind",
                    actual: self.kind,
                })
            }
            WeightingKind::FractionalBroadcastStrength1 => (&self.weights, &self.weights_s2),
            WeightingKind::FractionalBroadcastStrength2 => (&self.weights_s2, &self.weights),
            WeightingKind::FractionalBroadcastMixed => (&self.weights, &self.weights_s2),
        };
        // For the single-strength kinds one of the two maps is empty, so the
        // swap above routes the populated map to the right radius.
        let one = BigRational::one();
        for j in self.graph.vertices() {
            let mut sum = BigRational::zero();
            for u in self.graph.ball(j, 1).expect("radius 1") {
                if let Some(w) = s1.get(&u) {
                    sum += w;
                }
            }
            for u in self.graph.ball(j, 2).expect("radius 2") {
                if let Some(w) = s2.get(&u) {
                    sum += w;
                }
            }
            if sum < one {
                return Ok(FractionalBroadcastCheck {
                    feasible: false,
                    witness: Some(j),
                });
            }
        }
        Ok(FractionalBroadcastCheck {
            feasible: true,
            witness: None,
        })
    }

    /// Certified integer lower bound `⌈Σ y_i⌉ ≤ γ_{b,2}`.
    ///
    /// Feasibility is always re-verified here: certificates are untrusted
    /// input, never taken at the caller's word.
    pub fn lower_bound_from_multipacking(&self) -> Result<u64, MultipackError> {
        let check = self.is_feasible_multipacking()?;
        if let Some((witness, radius)) = check.witness {
            let sum = self.ball_sum(witness, radius, false);
            return Err(MultipackError::InfeasibleCertificate {
                witness,
                radius,
                sum: format_rational(&sum),
            });
        }
        let cost = self.mp_cost();
        let ceil = cost.ceil().to_integer();
        Ok(u64::try_from(ceil).expect("nonnegative weights give a nonnegative bound"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::Family;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    fn grid(family: Family, m: u32, n: u32) -> GridGraph {
        GridGraph::new(family, m, n).unwrap()
    }

    /// Weight 1/3 on every boundary vertex of a PxP grid, the worked
    /// cost-16/3 example on P_4 x P_6.
    fn boundary_thirds(g: GridGraph) -> FractionalWeighting {
        FractionalWeighting::from_entries(
            g,
            WeightingKind::Multipacking,
            g.vertices()
                .filter(|v| {
                    v.row == 0 || v.row == g.rows() - 1 || v.col == 0 || v.col == g.cols() - 1
                })
                .map(|v| (v, rat(1, 3))),
        )
        .unwrap()
    }

    #[test]
    fn rational_round_trip() {
        for s in ["16/3", "-2/6", "0", "7", "50/13"] {
            let r = parse_rational(s).unwrap();
            let t = parse_rational(&format_rational(&r)).unwrap();
            assert_eq!(r, t);
        }
        assert_eq!(format_rational(&parse_rational("-2/6").unwrap()), "-1/3");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn cost_examples() {
        let w = boundary_thirds(grid(Family::PxP, 4, 6));
        assert_eq!(w.mp_cost(), rat(16, 3));

        let zero = FractionalWeighting::new(grid(Family::PxP, 4, 6), WeightingKind::Multipacking);
        assert!(zero.mp_cost().is_zero());

        let torus = FractionalWeighting::uniform(
            grid(Family::CxC, 5, 5),
            WeightingKind::Multipacking,
            rat(2, 13),
        );
        assert_eq!(torus.mp_cost(), rat(50, 13));
    }

    #[test]
    fn multipacking_feasibility() {
        let w = boundary_thirds(grid(Family::PxP, 4, 6));
        assert!(w.is_feasible_multipacking().unwrap().feasible);

        let zero = FractionalWeighting::new(grid(Family::PxP, 3, 3), WeightingKind::Multipacking);
        assert!(zero.is_feasible_multipacking().unwrap().feasible);

        // Two adjacent unit weights overfill a radius-1 ball.
        let bad = FractionalWeighting::from_entries(
            grid(Family::PxP, 3, 3),
            WeightingKind::Multipacking,
            [
                (Vertex::new(0, 0), rat(1, 1)),
                (Vertex::new(0, 1), rat(1, 1)),
            ],
        )
        .unwrap();
        let check = bad.is_feasible_multipacking().unwrap();
        assert!(!check.feasible);
        assert_eq!(check.witness, Some((Vertex::new(0, 0), 1)));

        assert!(matches!(
            bad.lower_bound_from_multipacking(),
            Err(MultipackError::InfeasibleCertificate { .. })
        ));
    }

    #[test]
    fn fractional_broadcast_feasibility() {
        let s2_uniform = FractionalWeighting::uniform(
            grid(Family::CxC, 5, 5),
            WeightingKind::FractionalBroadcastStrength2,
            rat(1, 13),
        );
        assert!(
            s2_uniform
                .is_feasible_fractional_broadcast()
                .unwrap()
                .feasible
        );

        let s1_uniform = FractionalWeighting::uniform(
            grid(Family::CxC, 4, 3),
            WeightingKind::FractionalBroadcastStrength1,
            rat(1, 5),
        );
        assert!(
            s1_uniform
                .is_feasible_fractional_broadcast()
                .unwrap()
                .feasible
        );

        let zero = FractionalWeighting::new(
            grid(Family::PxP, 3, 3),
            WeightingKind::FractionalBroadcastMixed,
        );
        let check = zero.is_feasible_fractional_broadcast().unwrap();
        assert!(!check.feasible);
        assert_eq!(check.witness, Some(Vertex::new(0, 0)));
    }

    #[test]
    fn kind_mismatches_are_rejected() {
        let mp = FractionalWeighting::new(grid(Family::PxP, 3, 3), WeightingKind::Multipacking);
        assert!(mp.is_feasible_fractional_broadcast().is_err());
        let fb = FractionalWeighting::new(
            grid(Family::PxP, 3, 3),
            WeightingKind::FractionalBroadcastStrength2,
        );
        assert!(fb.is_feasible_multipacking().is_err());
    }

    #[test]
    fn lower_bound_examples() {
        let w = boundary_thirds(grid(Family::PxP, 4, 6));
        assert_eq!(w.lower_bound_from_multipacking().unwrap(), 6);

        let zero = FractionalWeighting::new(grid(Family::PxP, 4, 6), WeightingKind::Multipacking);
        assert_eq!(zero.lower_bound_from_multipacking().unwrap(), 0);

        let torus = FractionalWeighting::uniform(
            grid(Family::CxC, 5, 5),
            WeightingKind::Multipacking,
            rat(2, 13),
        );
        assert_eq!(torus.lower_bound_from_multipacking().unwrap(), 4);
    }

    #[test]
    fn dominating_broadcast_embeds_feasibly() {
        let b = crate::broadcast::tests::p4p6_cost_six();
        let w = FractionalWeighting::from_broadcast(&b);
        assert_eq!(w.mp_cost(), rat(6, 1));
        assert!(w.is_feasible_fractional_broadcast().unwrap().feasible);
    }

    #[test]
    fn negative_weights_rejected() {
        let mut w = FractionalWeighting::new(grid(Family::PxP, 3, 3), WeightingKind::Multipacking);
        assert!(matches!(
            w.set(Vertex::new(0, 0), rat(-1, 2)),
            Err(MultipackError::NegativeWeight(_))
        ));
    }
}
