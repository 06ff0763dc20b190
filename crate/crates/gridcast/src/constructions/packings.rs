//! Multipacking and fractional-broadcast constructions per family.
//!
//! Torus packings are uniform; cylinder and grid packings assign one weight
//! per row from tabulated column vectors. Each vector's total, times the
//! column count, realizes the tabulated lower-bound rate exactly.

use num::BigRational;

use crate::bounds::tables::tables;
use crate::grid::{Family, GridGraph};
use crate::multipack::{FractionalWeighting, WeightingKind};

use super::ConstructionError;

fn ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}

/// A matched primal/dual pair on a torus with equal exact cost, pinning
/// `mp_{f,2} = γ_{f,b,2}` at that value.
#[derive(Clone, Debug)]
pub struct CxcPackingPair {
    pub multipacking: FractionalWeighting,
    pub fractional_broadcast: FractionalWeighting,
}

/// The uniform torus pair for `C_m □ C_n`. The weights depend only on the
/// radius-1/radius-2 ball sizes, which six dimension classes determine.
pub fn cxc_multipacking_pair(m: u64, n: u64) -> Result<CxcPackingPair, ConstructionError> {
    let g = GridGraph::new(Family::CxC, m as u32, n as u32)?;
    let (a, b) = (m.min(n), m.max(n));
    // (multipacking weight, fractional strength, strength level)
    let (y, x, level) = match (a, b) {
        (3, 3) | (3, 4) => (ratio(1, 5), ratio(1, 5), 1u8),
        (4, 4) => (ratio(2, 11), ratio(1, 11), 2),
        (3, _) => (ratio(2, 11), ratio(1, 11), 2),
        (4, _) => (ratio(1, 6), ratio(1, 12), 2),
        _ => (ratio(2, 13), ratio(1, 13), 2),
    };
    let multipacking = FractionalWeighting::uniform(g, WeightingKind::Multipacking, y);
    let kind = if level == 1 {
        WeightingKind::FractionalBroadcastStrength1
    } else {
        WeightingKind::FractionalBroadcastStrength2
    };
    let fractional_broadcast = FractionalWeighting::uniform(g, kind, x);
    Ok(CxcPackingPair {
        multipacking,
        fractional_broadcast,
    })
}

/// The per-row weight vector for an `m`-row band: tabulated for m ≤ 22,
/// and for m ≥ 23 a fixed 8-entry head and mirrored tail around `m − 16`
/// uniform `2/13` center rows.
pub fn row_vector(m: u64) -> Result<Vec<BigRational>, ConstructionError> {
    if m < 2 {
        return Err(ConstructionError::UnsupportedBand(m));
    }
    if m <= 22 {
        return tables()
            .packing_vector(m as u32)
            .ok_or(ConstructionError::UnsupportedBand(m));
    }
    let head = tables().packing_vector_wide_head();
    let mut v = head.clone();
    v.extend(std::iter::repeat_n(ratio(2, 13), (m - 16) as usize));
    v.extend(head.into_iter().rev());
    debug_assert_eq!(v.len(), m as usize);
    Ok(v)
}

fn rows_weighting(
    g: GridGraph,
    vector: &[BigRational],
) -> Result<FractionalWeighting, ConstructionError> {
    Ok(FractionalWeighting::from_entries(
        g,
        WeightingKind::Multipacking,
        g.vertices().map(|v| (v, vector[v.row as usize].clone())),
    )?)
}

/// Row-uniform multipacking on the cylinder `P_m □ C_n` from the band's
/// vector; cost is `n` times the vector total.
pub fn pxc_vector_multipacking(m: u64, n: u64) -> Result<FractionalWeighting, ConstructionError> {
    let g = GridGraph::new(Family::PxC, m as u32, n as u32)?;
    let v = row_vector(m)?;
    rows_weighting(g, &v)
}

/// The same row vector applied to the grid `P_m □ P_n`, 2 ≤ m ≤ 22.
///
/// Cutting the cycle only shrinks balls, so feasibility is expected to
/// carry over; it is nonetheless re-verified here and any violation is
/// surfaced rather than patched.
pub fn pxp_multipacking_from_vector(
    m: u64,
    n: u64,
) -> Result<FractionalWeighting, ConstructionError> {
    if !(2..=22).contains(&m) {
        return Err(ConstructionError::UnsupportedBand(m));
    }
    let g = GridGraph::new(Family::PxP, m as u32, n as u32)?;
    let v = row_vector(m)?;
    let w = rows_weighting(g, &v)?;
    let check = w.is_feasible_multipacking()?;
    if let Some((witness, radius)) = check.witness {
        return Err(ConstructionError::InfeasibleOnPath {
            witness_row: witness.row,
            witness_col: witness.col,
            radius,
        });
    }
    Ok(w)
}

/// Weight 1/3 on every boundary vertex of a grid. Feasible on 4-row grids
/// with at least five columns (checked, not assumed), where it beats the
/// band's vector packing; on `P_4 □ P_6` its value is exactly 16/3.
pub fn boundary_thirds_multipacking(
    g: &GridGraph,
) -> Result<FractionalWeighting, ConstructionError> {
    if g.family() != Family::PxP {
        return Err(ConstructionError::WrongFamily("path-times-path grids"));
    }
    let third = ratio(1, 3);
    let w = FractionalWeighting::from_entries(
        *g,
        WeightingKind::Multipacking,
        g.vertices()
            .filter(|v| v.row == 0 || v.row == g.rows() - 1 || v.col == 0 || v.col == g.cols() - 1)
            .map(|v| (v, third.clone())),
    )?;
    let check = w.is_feasible_multipacking()?;
    if let Some((witness, radius)) = check.witness {
        return Err(ConstructionError::InfeasiblePacking {
            witness_row: witness.row,
            witness_col: witness.col,
            radius,
        });
    }
    Ok(w)
}
