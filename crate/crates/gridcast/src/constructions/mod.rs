//! Certificate-producing constructions: explicit dominating broadcasts and
//! feasible multipackings whose costs realize the tabulated bounds.

mod lattice;
mod packings;
mod tiles;

use thiserror::Error;

use crate::broadcast::BroadcastError;
use crate::grid::GridError;
use crate::multipack::MultipackError;

pub use lattice::{best_lattice_ell, lattice_broadcast, lattice_phi, LatticeClass};
pub use packings::{
    boundary_thirds_multipacking, cxc_multipacking_pair, pxc_vector_multipacking,
    pxp_multipacking_from_vector, CxcPackingPair,
};
pub use tiles::{p4_sequence, p4_tiling, Tile, TileKind, TilePlacement, TileSequence};

#[derive(Clone, Debug, Error, PartialEq)]
pub enum ConstructionError {
    #[error("dimensions {m}x{n} too small for this construction (needs {min_m}x{min_n})")]
    DimensionsTooSmall {
        m: u64,
        n: u64,
        min_m: u64,
        min_n: u64,
    },
    #[error("no row vector is defined for a {0}-row band")]
    UnsupportedBand(u64),
    #[error("row vector infeasible on the path product: ball({witness_row},{witness_col}) at radius {radius} exceeds its cap")]
    InfeasibleOnPath {
        witness_row: u32,
        witness_col: u32,
        radius: u32,
    },
    #[error("packing infeasible at ({witness_row},{witness_col}) radius {radius}")]
    InfeasiblePacking {
        witness_row: u32,
        witness_col: u32,
        radius: u32,
    },
    #[error("construction only applies to {0}")]
    WrongFamily(&'static str),
    #[error(transparent)]
    Grid(#[from] GridError),
    #[error(transparent)]
    Broadcast(#[from] BroadcastError),
    #[error(transparent)]
    Multipack(#[from] MultipackError),
}
