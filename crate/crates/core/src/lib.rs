//! Jumping numbers below 1 of a plane curve that is unibranch at a singular
//! point.
//!
//! A singularity can be described by any of three equivalent encodings:
//!
//! * the canonical generators `β̄_0, …, β̄_g` of its semigroup,
//! * its Puiseux characteristic `(m; β_1, …, β_g)`,
//! * the pair list `(p_1,q_1), …, (p_g,q_g)` whose Enriques trees
//!   `T_{p_j,q_j}` form the resolution tree by connected sum.
//!
//! [`invariants`] converts between them, [`enriques`] builds the tree and the
//! exceptional lattice, [`jumping`] evaluates the closed formula segment by
//! segment and [`oracle`] rediscovers the same numbers from the contribution
//! inequality on relevant divisors.
//!
//! Everything is generic over an exact integer scalar ([`Int`]). The crate
//! root exports aliases for [`BigInt`] (unbounded, what the CLI uses) and
//! `i64` (fast; overflow panics in every build profile of this workspace).

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

pub use num_bigint::BigInt;
pub use num_rational::Ratio;

pub mod enriques;
mod error;
pub mod euclid;
pub mod invariants;
pub mod jumping;
pub mod oracle;

pub use enriques::{
    branch_divisor, build_tpq, canonical_coeffs, connected_sum, from_pairs, intersection_matrix,
    proximity, relevant_positions, EdgeKind, EnriquesTree, IntersectionMatrix, LatticeDivisor,
    ProximityTable,
};
pub use error::{Error, Result};
pub use euclid::{euclid_expand, EuclidData};
pub use invariants::{
    blowup_characteristic, canonicalize_generators, characteristic_from_semigroup,
    characteristic_to_pairs, multiplicity_sequence, pairs_to_characteristic,
    semigroup_from_characteristic, Blowup, CurveInvariants, PairList, PuiseuxCharacteristic,
    SemigroupGenerators,
};
pub use jumping::{
    extend_by_periodicity, jumping_numbers_from_semigroup, jumping_numbers_from_tree, lct,
    qbar_sequence, r_m_set, r_set, JumpingNumber, JumpingReport, RSetParams, Segment,
};

/// Exact integer scalar the whole crate is generic over.
///
/// Blanket-implemented; in practice `i64`, `i128` or [`BigInt`].
pub trait Int:
    Integer
    + Signed
    + Clone
    + Debug
    + Display
    + Hash
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
}

impl<T> Int for T where
    T: Integer
        + Signed
        + Clone
        + Debug
        + Display
        + Hash
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}

/// Lifts a small machine integer into the scalar type.
pub(crate) fn lift<T: Int>(n: usize) -> T {
    T::from_usize(n).expect("small constant is representable")
}

/// Exact rational over the scalar type.
pub type Rational<T> = Ratio<T>;

pub type EuclidDataBig = EuclidData<BigInt>;
pub type EuclidDataI64 = EuclidData<i64>;
pub type EnriquesTreeBig = EnriquesTree<BigInt>;
pub type EnriquesTreeI64 = EnriquesTree<i64>;
pub type LatticeDivisorBig = LatticeDivisor<BigInt>;
pub type LatticeDivisorI64 = LatticeDivisor<i64>;
pub type PairListBig = PairList<BigInt>;
pub type PairListI64 = PairList<i64>;
pub type PuiseuxCharacteristicBig = PuiseuxCharacteristic<BigInt>;
pub type PuiseuxCharacteristicI64 = PuiseuxCharacteristic<i64>;
pub type SemigroupGeneratorsBig = SemigroupGenerators<BigInt>;
pub type SemigroupGeneratorsI64 = SemigroupGenerators<i64>;
pub type CurveInvariantsBig = CurveInvariants<BigInt>;
pub type CurveInvariantsI64 = CurveInvariants<i64>;
pub type JumpingReportBig = JumpingReport<BigInt>;
pub type JumpingReportI64 = JumpingReport<i64>;
pub type RationalBig = Ratio<BigInt>;
pub type RationalI64 = Ratio<i64>;
