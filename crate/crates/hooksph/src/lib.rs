//! Exact arithmetic for spherical functions of hook isotypes of the symmetric
//! group relative to Young subgroups, and for the eigenvalue sums of the
//! Heckman-Polychronakos commuting family on polynomial spaces.
//!
//! Everything is computed over arbitrary-precision rationals; there are no
//! floating-point tolerances anywhere. Closed-form evaluations are paired with
//! independent brute-force oracles (subgroup averaging, Gram-matrix traces on
//! explicit invariant bases, Dunkl operator compressions) so each formula can
//! be cross-checked on demand; see the [`verify`] module.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod dunkl;
mod error;
pub mod hookchar;
pub mod invariant;
pub mod linalg;
pub mod perm;
pub mod scalar;
pub mod spectrum;
pub mod spherical;
pub mod symfunc;
pub mod verify;

pub use error::Error;
pub use scalar::{KappaPoly, Rational};
