//! Exact computation of cluster variables of types A, B and C from the
//! polygon model: snake-graph expansion formulas with principal coefficients,
//! a brute-force mutation oracle, and the symmetric-quiver categorification
//! (orthogonal/symplectic string modules and the Caldero-Chapoton map).
//!
//! Everything is exact integer arithmetic; there are no floating point
//! numbers anywhere in this crate.

pub mod error;
pub mod laurent;
pub mod polygon;
pub mod seeds;
pub mod snake;
pub mod symrep;
pub mod typebc;

pub use error::{Error, Result};
pub use laurent::{parse_poly, ExpVector, LaurentPoly};
