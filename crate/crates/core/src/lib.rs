//! Hatted and barred permutation patterns, and the bijections that connect
//! restricted 132-avoiding permutations with Dyck and Motzkin paths.
//!
//! The crate is organised bottom-up:
//!
//! * [`perm`] holds the [`Permutation`] carrier, reduction, symmetries and
//!   left-to-right-minimum block structure.
//! * [`pattern`] implements classical, barred and hatted avoidance.
//! * [`paths`] holds Dyck and Motzkin words, their statistics and generators.
//! * [`bijections`] holds the maps `phi`, `theta`, Simion–Schmidt and `psi`.
//! * [`eco`] builds the Motzkin generating tree coded by factor-free
//!   132-avoiders.
//! * [`oracle`] enumerates avoidance classes by brute force and supplies the
//!   Catalan, Motzkin and Fine sequences used to check everything else.
//! * [`verify`] packages the exhaustive checks into named suites.

pub mod bijections;
pub mod eco;
mod error;
pub mod oracle;
pub mod paths;
pub mod pattern;
pub mod perm;
pub mod verify;

pub use error::{Error, Result};
pub use paths::{DyckWord, MotzkinWord, Step};
pub use pattern::{Mark, MarkedPattern};
pub use perm::Permutation;
