//! A decidable kernel for a partially univalent closed universe of finite
//! sets.
//!
//! Codes for types are W-trees over an indexed container and decode to
//! canonical finite sets. Two codes are equal when their equality code, a
//! set of witnesses computed structurally and collapsed wherever a chosen
//! predicate holds of the decoding, is nonempty. The modules build up to
//! that in layers:
//!
//! - [`fincore`]: finite sets, maps, bijections and truncation levels.
//! - [`colimits`]: set-level pushouts and joins, with the checks for
//!   pushouts along monos.
//! - [`container`]: indexed containers, finite container tables,
//!   coproducts and the truncation-retention check.
//! - [`wtrees`]: hash-consed W-trees, the equality engine and a
//!   brute-force saturation oracle.
//! - [`universe`]: the code signature, decoding, equality of codes and the
//!   exhaustive verification suites.
//! - [`suites`], [`report`] and [`frontend`]: suite dispatch, JSON reports,
//!   the s-expression syntax and the `vk` command line.

pub mod colimits;
pub mod container;
pub mod error;
pub mod fincore;
pub mod frontend;
pub mod report;
pub mod suites;
pub mod universe;
pub mod wtrees;

pub use error::{KernelError, Result};
