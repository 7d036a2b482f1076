//! Exact-arithmetic toolkit for knot-invariant computations: Hecke algebra
//! Markov traces and HOMFLY-PT invariants, equivariant cohomology series of
//! small flag Hilbert schemes, fixed-point localization sums, K-theory
//! pushforwards along the projective tower, and bigraded Koszul homology.
//!
//! All coefficients are exact rationals; all identities checked by the test
//! suites are exact (no floating point anywhere).

pub mod braid;
pub mod calib;
pub mod error;
pub mod exact;
pub mod hecke;
pub mod koszul;
pub mod ktheory;
pub mod localization;
pub mod sheafcoh;
pub mod tableaux;
pub mod verify;

pub use error::Error;
