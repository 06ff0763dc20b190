//! JSON certificates: serialized broadcasts and weightings together with the
//! claim they support.
//!
//! A certificate is untrusted input. Verification rebuilds the object from
//! the payload and recomputes cost and feasibility from scratch; the claim
//! field is only compared against, never believed.

use num::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::broadcast::Broadcast;
use crate::grid::{Family, GridGraph, Vertex};
use crate::multipack::{format_rational, parse_rational, FractionalWeighting, WeightingKind};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRef {
    pub family: Family,
    pub m: u32,
    pub n: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CertKind {
    Broadcast,
    Multipacking,
    FractionalBroadcast,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimDirection {
    Upper,
    Lower,
    LpValue,
}

/// The statement a certificate supports: `γ_{b,2} ≤ bound`, `γ_{b,2} ≥
/// bound`, or `mp_{f,2} = γ_{f,b,2} = bound` (one side per certificate).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub direction: ClaimDirection,
    pub bound: String,
}

/// One payload cell. `value` is an integer strength for broadcasts or a
/// rational weight otherwise; `ell` distinguishes the two strength maps of a
/// fractional broadcast.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub row: u32,
    pub col: u32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub ell: Option<u8>,
    pub value: EntryValue,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum EntryValue {
    Strength(u64),
    Weight(String),
}

impl EntryValue {
    fn as_rational(&self) -> Result<BigRational, CertError> {
        match self {
            EntryValue::Strength(s) => Ok(BigRational::from_integer((*s).into())),
            EntryValue::Weight(w) => {
                parse_rational(w).map_err(|e| CertError::Malformed(e.to_string()))
            }
        }
    }
}

/// Sparse payload; `default` (and `default_s2` for mixed fractional
/// broadcasts) gives every unlisted vertex a uniform weight, which keeps
/// torus certificates at a handful of bytes.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Payload {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub default: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub default_s2: Option<String>,
    #[serde(default)]
    pub entries: Vec<Entry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub schema_version: u32,
    pub graph: GraphRef,
    pub kind: CertKind,
    pub payload: Payload,
    pub claim: Claim,
    pub provenance: String,
}

#[derive(Clone, Debug, Error, PartialEq)]
pub enum CertError {
    #[error("malformed certificate: {0}")]
    Malformed(String),
    #[error("unsupported schema version {0}")]
    SchemaVersion(u32),
    #[error("claim not verified: {0}")]
    Refuted(String),
}

impl Certificate {
    /// Upper-bound certificate from a dominating broadcast; the claimed
    /// bound is the broadcast's own cost.
    pub fn for_broadcast(b: &Broadcast, provenance: String) -> Certificate {
        let g = b.graph();
        Certificate {
            schema_version: SCHEMA_VERSION,
            graph: GraphRef {
                family: g.family(),
                m: g.rows(),
                n: g.cols(),
            },
            kind: CertKind::Broadcast,
            payload: Payload {
                default: None,
                default_s2: None,
                entries: b
                    .broadcasters()
                    .map(|(v, s)| Entry {
                        row: v.row,
                        col: v.col,
                        ell: None,
                        value: EntryValue::Strength(s as u64),
                    })
                    .collect(),
            },
            claim: Claim {
                direction: ClaimDirection::Upper,
                bound: b.cost().to_string(),
            },
            provenance,
        }
    }

    /// Lower-bound certificate from a multipacking; the claimed bound is the
    /// ceiling of its exact value.
    pub fn for_multipacking(w: &FractionalWeighting, provenance: String) -> Certificate {
        let bound = w.mp_cost().ceil().to_integer().to_string();
        Self::for_weighting(w, ClaimDirection::Lower, bound, provenance)
    }

    /// LP-value certificate (one side of a matched primal/dual pair); the
    /// claimed bound is the exact rational cost.
    pub fn for_lp_side(w: &FractionalWeighting, provenance: String) -> Certificate {
        let bound = format_rational(&w.mp_cost());
        Self::for_weighting(w, ClaimDirection::LpValue, bound, provenance)
    }

    fn for_weighting(
        w: &FractionalWeighting,
        direction: ClaimDirection,
        bound: String,
        provenance: String,
    ) -> Certificate {
        let g = w.graph();
        let kind = if w.kind() == WeightingKind::Multipacking {
            CertKind::Multipacking
        } else {
            CertKind::FractionalBroadcast
        };
        // Uniform weightings compress to a bare default.
        let nv = g.vertex_count() as usize;
        let uniform = {
            let mut values: Vec<_> = w.entries().map(|(_, r)| r.clone()).collect();
            values.dedup();
            (w.entries().count() == nv && values.len() == 1).then(|| values.remove(0))
        };
        let payload = match (kind, uniform) {
            (CertKind::Multipacking, Some(u)) => Payload {
                default: Some(format_rational(&u)),
                default_s2: None,
                entries: Vec::new(),
            },
            (CertKind::Multipacking, None) => Payload {
                default: None,
                default_s2: None,
                entries: w
                    .entries()
                    .map(|(v, r)| Entry {
                        row: v.row,
                        col: v.col,
                        ell: None,
                        value: EntryValue::Weight(format_rational(r)),
                    })
                    .collect(),
            },
            (CertKind::FractionalBroadcast, _) => {
                let (s1_uniform, s2_uniform) = fb_uniform(w, nv);
                let mut entries = Vec::new();
                if s1_uniform.is_none() {
                    entries.extend(fb_entries(w, 1));
                }
                if s2_uniform.is_none() {
                    entries.extend(fb_entries(w, 2));
                }
                Payload {
                    default: s1_uniform.map(|r| format_rational(&r)),
                    default_s2: s2_uniform.map(|r| format_rational(&r)),
                    entries,
                }
            }
            (CertKind::Broadcast, _) => unreachable!(),
        };
        Certificate {
            schema_version: SCHEMA_VERSION,
            graph: GraphRef {
                family: g.family(),
                m: g.rows(),
                n: g.cols(),
            },
            kind,
            payload,
            claim: Claim { direction, bound },
            provenance,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates serialize")
    }

    pub fn from_json(s: &str) -> Result<Certificate, CertError> {
        serde_json::from_str(s).map_err(|e| CertError::Malformed(e.to_string()))
    }
}

fn fb_entries(w: &FractionalWeighting, ell: u8) -> Vec<Entry> {
    let it: Box<dyn Iterator<Item = (Vertex, &BigRational)>> = match (w.kind(), ell) {
        (WeightingKind::FractionalBroadcastStrength2, 2) => Box::new(w.entries()),
        (WeightingKind::FractionalBroadcastStrength2, _) => Box::new(std::iter::empty()),
        (_, 1) => Box::new(w.entries()),
        (_, _) => Box::new(w.entries_s2()),
    };
    it.map(|(v, r)| Entry {
        row: v.row,
        col: v.col,
        ell: Some(ell),
        value: EntryValue::Weight(format_rational(r)),
    })
    .collect()
}

fn fb_uniform(w: &FractionalWeighting, nv: usize) -> (Option<BigRational>, Option<BigRational>) {
    let uniform = |entries: Vec<BigRational>| {
        let mut values = entries.clone();
        values.dedup();
        (entries.len() == nv && values.len() == 1).then(|| values[0].clone())
    };
    match w.kind() {
        WeightingKind::FractionalBroadcastStrength1 => {
            (uniform(w.entries().map(|(_, r)| r.clone()).collect()), None)
        }
        WeightingKind::FractionalBroadcastStrength2 => {
            (None, uniform(w.entries().map(|(_, r)| r.clone()).collect()))
        }
        _ => (
            uniform(w.entries().map(|(_, r)| r.clone()).collect()),
            uniform(w.entries_s2().map(|(_, r)| r.clone()).collect()),
        ),
    }
}

/// Rebuilds the certified object and re-verifies the claim from scratch.
/// Returns a human-readable success summary, or the first refutation with
/// its witness vertex.
pub fn verify_certificate(cert: &Certificate) -> Result<String, CertError> {
    if cert.schema_version != SCHEMA_VERSION {
        return Err(CertError::SchemaVersion(cert.schema_version));
    }
    let g = GridGraph::new(cert.graph.family, cert.graph.m, cert.graph.n)
        .map_err(|e| CertError::Malformed(e.to_string()))?;
    let bound =
        parse_rational(&cert.claim.bound).map_err(|e| CertError::Malformed(e.to_string()))?;

    match (cert.kind, cert.claim.direction) {
        (CertKind::Broadcast, ClaimDirection::Upper) => {
            let b = rebuild_broadcast(&g, cert)?;
            let check = b.is_dominating();
            if let Some(w) = check.witness {
                return Err(CertError::Refuted(format!(
                    "broadcast does not dominate; unheard witness {w}"
                )));
            }
            let cost = BigRational::from_integer(b.cost().into());
            if cost > bound {
                return Err(CertError::Refuted(format!(
                    "cost {} exceeds the claimed upper bound {}",
                    b.cost(),
                    cert.claim.bound
                )));
            }
            Ok(format!(
                "dominating broadcast of cost {} on {g}; gamma_b2 <= {}",
                b.cost(),
                cert.claim.bound
            ))
        }
        (CertKind::Multipacking, ClaimDirection::Lower) => {
            let w = rebuild_multipacking(&g, cert)?;
            check_multipacking(&w)?;
            let cost = w.mp_cost();
            let certified = cost.ceil();
            if bound > certified {
                return Err(CertError::Refuted(format!(
                    "packing value {} only certifies {}, claim was {}",
                    format_rational(&cost),
                    certified.to_integer(),
                    cert.claim.bound
                )));
            }
            Ok(format!(
                "feasible multipacking of value {} on {g}; gamma_b2 >= {}",
                format_rational(&cost),
                cert.claim.bound
            ))
        }
        (CertKind::Multipacking, ClaimDirection::LpValue) => {
            let w = rebuild_multipacking(&g, cert)?;
            check_multipacking(&w)?;
            let cost = w.mp_cost();
            if cost != bound {
                return Err(CertError::Refuted(format!(
                    "packing value {} differs from claimed LP value {}",
                    format_rational(&cost),
                    cert.claim.bound
                )));
            }
            Ok(format!(
                "feasible multipacking pins mp_f2({g}) >= {}",
                cert.claim.bound
            ))
        }
        (CertKind::FractionalBroadcast, ClaimDirection::LpValue)
        | (CertKind::FractionalBroadcast, ClaimDirection::Upper) => {
            let w = rebuild_fractional(&g, cert)?;
            let check = w
                .is_feasible_fractional_broadcast()
                .map_err(|e| CertError::Malformed(e.to_string()))?;
            if let Some(v) = check.witness {
                return Err(CertError::Refuted(format!(
                    "fractional broadcast infeasible; uncovered witness {v}"
                )));
            }
            let cost = w.mp_cost();
            let ok = match cert.claim.direction {
                ClaimDirection::LpValue => cost == bound,
                _ => cost <= bound,
            };
            if !ok {
                return Err(CertError::Refuted(format!(
                    "fractional broadcast cost {} does not support the claim {}",
                    format_rational(&cost),
                    cert.claim.bound
                )));
            }
            Ok(format!(
                "feasible fractional broadcast of cost {} on {g}",
                format_rational(&cost)
            ))
        }
        (kind, dir) => Err(CertError::Malformed(format!(
            "claim direction {dir:?} does not apply to kind {kind:?}"
        ))),
    }
}

fn check_multipacking(w: &FractionalWeighting) -> Result<(), CertError> {
    let check = w
        .is_feasible_multipacking()
        .map_err(|e| CertError::Malformed(e.to_string()))?;
    if let Some((v, radius)) = check.witness {
        return Err(CertError::Refuted(format!(
            "multipacking infeasible; overfull ball at witness {v} radius {radius}"
        )));
    }
    Ok(())
}

fn vertex_in(g: &GridGraph, row: u32, col: u32) -> Result<Vertex, CertError> {
    let v = Vertex::new(row, col);
    if g.contains(v) {
        Ok(v)
    } else {
        Err(CertError::Malformed(format!(
            "payload vertex {v} outside {g}"
        )))
    }
}

fn rebuild_broadcast(g: &GridGraph, cert: &Certificate) -> Result<Broadcast, CertError> {
    if cert.payload.default.is_some() || cert.payload.default_s2.is_some() {
        return Err(CertError::Malformed(
            "broadcast payloads take explicit entries only".into(),
        ));
    }
    let mut b = Broadcast::new(*g);
    for e in &cert.payload.entries {
        let v = vertex_in(g, e.row, e.col)?;
        match e.value {
            EntryValue::Strength(s) if s <= 2 => b
                .set(v, s as u32)
                .map_err(|err| CertError::Malformed(err.to_string()))?,
            _ => return Err(CertError::Malformed(format!("invalid strength at {v}"))),
        }
    }
    Ok(b)
}

fn rebuild_multipacking(
    g: &GridGraph,
    cert: &Certificate,
) -> Result<FractionalWeighting, CertError> {
    let mut w = FractionalWeighting::new(*g, WeightingKind::Multipacking);
    if let Some(d) = &cert.payload.default {
        let d = parse_rational(d).map_err(|e| CertError::Malformed(e.to_string()))?;
        for v in g.vertices() {
            w.set(v, d.clone())
                .map_err(|e| CertError::Malformed(e.to_string()))?;
        }
    }
    for e in &cert.payload.entries {
        let v = vertex_in(g, e.row, e.col)?;
        w.set(v, e.value.as_rational()?)
            .map_err(|err| CertError::Malformed(err.to_string()))?;
    }
    Ok(w)
}

fn rebuild_fractional(g: &GridGraph, cert: &Certificate) -> Result<FractionalWeighting, CertError> {
    let mut w = FractionalWeighting::new(*g, WeightingKind::FractionalBroadcastMixed);
    if let Some(d) = &cert.payload.default {
        let d = parse_rational(d).map_err(|e| CertError::Malformed(e.to_string()))?;
        for v in g.vertices() {
            w.set(v, d.clone())
                .map_err(|e| CertError::Malformed(e.to_string()))?;
        }
    }
    if let Some(d) = &cert.payload.default_s2 {
        let d = parse_rational(d).map_err(|e| CertError::Malformed(e.to_string()))?;
        for v in g.vertices() {
            w.set_s2(v, d.clone())
                .map_err(|e| CertError::Malformed(e.to_string()))?;
        }
    }
    for e in &cert.payload.entries {
        let v = vertex_in(g, e.row, e.col)?;
        let r = e.value.as_rational()?;
        match e.ell {
            Some(1) => w
                .set(v, r)
                .map_err(|err| CertError::Malformed(err.to_string()))?,
            Some(2) => w
                .set_s2(v, r)
                .map_err(|err| CertError::Malformed(err.to_string()))?,
            _ => {
                return Err(CertError::Malformed(format!(
                    "fractional entry at {v} needs ell 1 or 2"
                )))
            }
        }
    }
    Ok(w)
}
