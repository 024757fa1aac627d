//! Finite-group-equivariant combinatorics of double coverings: G-sets and
//! their Grassmannians, the involution/double-covering dictionary, Clifford
//! sets with discriminants and orientations, the A3=D3 equivalence, D4
//! triality, and an exact-rational split Clifford algebra that
//! cross-validates the combinatorics.
//!
//! Conventions used throughout:
//! - actions are right actions (`x^g`), and `p.then(q)` composes left to
//!   right, so `action(g*h) = action(g).then(action(h))`;
//! - points are `0..n`, subsets are bitmasks ordered by mask value;
//! - sections of a double covering are masks over fibers, bit set when the
//!   non-least point of the fiber is chosen.

pub mod algebra;
pub mod battery;
pub mod covering;
pub mod d4;
pub mod error;
pub mod format;
pub mod group;
pub mod gset;
pub mod linalg;
pub mod perm;
pub mod scalar;

pub use covering::{
    classify_coverings, clifford_product_iso, covering_from_involution,
    involution_from_covering, iso_coverings, iso_oriented, split_covering, CliffordSet, Covering,
    Discriminant, Involution, OrientedCovering,
};
pub use d4::{
    c1_inverse_gr1, gr1, half_clifford, triality_c1_plus, triality_c2_plus, triality_orbit,
    triality_orbit_length, HalfCliffordSet, TrialityConvention,
};
pub use error::{Error, Result};
pub use group::{enumerate_homs_up_to_conjugacy, FiniteGroup, Hom, Target, TargetGroup};
pub use gset::{classify_gsets, is_isomorphic, GMap, GSet};
pub use perm::Perm;
pub use scalar::Scalar;

/// The exact scalar the shipped checks run over.
pub type Rat = num_rational::BigRational;

/// Convenience constructor for small rational constants.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(num_bigint::BigInt::from(n))
}
