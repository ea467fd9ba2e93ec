//! Exact computations for the Capelli operators of `gosp(1|2n)` acting on
//! superpolynomials over `C^{1|2n}`.
//!
//! Everything is computed over the rationals, so every identity checked by
//! this crate is checked exactly.

pub mod capelli_matrices;
pub mod eigenformulas;
pub mod error;
pub mod exact_linalg;
pub mod fischer;
pub mod rep;
pub mod superspace;

pub use error::{Error, Result};
