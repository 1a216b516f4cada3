//! Exact computation of the twisted conjugation-equivariant K-theory of
//! SU(2) and its identification with the Verlinde fusion ring.
//!
//! The two sides are built independently: [`twisted_k`] assembles the
//! Mayer-Vietoris pushforward from holomorphic [`induction`] over the
//! character rings in [`laurent`] and [`rep_ring`], and presents its
//! cokernel as a quotient ring; [`fusion`] constructs the level-k Verlinde
//! ring from the truncated tensor-product rule with the modular S-matrix as
//! a numerical cross-check. [`theorem`] compares them level by level under
//! the shift `m = k + 2`. [`finite_sector`] covers the untwisted finite
//! abelian analogue.
//!
//! All ring arithmetic is exact over 64-bit integers with overflow
//! detection; floating point appears only in the S-matrix oracle. The crate
//! is `no_std` (with `alloc`).

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod finite_sector;
pub mod fusion;
pub mod induction;
pub mod laurent;
pub mod rep_ring;
pub mod theorem;
pub mod twisted_k;

pub use finite_sector::{kgg_ring, FiniteAbelianGroup, KggRing};
pub use fusion::{fusion_coeff, FusionRing, SMatrix};
pub use induction::{induce, induce_monomial};
pub use laurent::LaurentPoly;
pub use rep_ring::{char_of_irrep, RepRingElem};
pub use theorem::{verify_level, verify_range, TheoremReport};
pub use twisted_k::{MvMap, QuotientPresentation, Twist};
