//! Exact verification of congruences for sums of Gaussian q-binomial
//! coefficients modulo powers of cyclotomic polynomials.
//!
//! Everything is exact: polynomials over ℤ and ℚ, the cyclotomic fields
//! ℚ(ζ_m), and integer residues for the classical prime congruences.

pub mod congruence;
pub mod cyclofield;
pub mod exactpoly;
pub mod qcomb;
pub mod selftest;

pub use congruence::{Status, Theorem, VerificationRecord};
pub use exactpoly::{IntPoly, RatPoly};
