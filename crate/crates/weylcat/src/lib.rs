//! weylcat: exact computations with weight modules over Weyl algebras and
//! bounded symplectic weight modules.
//!
//! The crate constructs, decomposes, dualizes, and localizes weight modules
//! over A_n through their finite quiver data, realizes the oscillator map
//! from sp(2n) into the even part of A_n, and enumerates the catalog of
//! indecomposable bounded sp(4)-modules. All arithmetic is exact rational.

pub mod acceptance;
pub mod blocks;
pub mod error;
pub mod exactla;
pub mod io;
pub mod localization;
pub mod quiver;
pub mod rat;
pub mod sp4_catalog;
pub mod sp_bridge;
pub mod weyl;

pub use error::{Error, Result};
