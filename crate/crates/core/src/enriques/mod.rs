//! Enriques trees of unibranch resolutions and the exceptional lattice they
//! carry: proximities, intersection form, branch divisor, canonical divisor
//! and relevant positions.

mod lattice;
mod proximity;
mod tree;

pub use lattice::{
    branch_divisor, canonical_coeffs, intersection_matrix, relevant_positions, IntersectionMatrix,
    LatticeDivisor,
};
pub(crate) use lattice::{branch_divisor_of, intersection_matrix_of, relevant_positions_of};
pub use proximity::{proximity, ProximityTable};
pub use tree::{build_tpq, connected_sum, from_pairs, EdgeKind, EnriquesTree, TreeSegment};
