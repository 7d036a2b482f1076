//! Exact multivariate Laurent arithmetic in the grading variables q^{1/2},
//! t^{1/2}, a, plus optional auxiliary symbols (line-bundle classes, Chern
//! roots) used by the K-theory engine.
//!
//! The three layers are:
//! - [`Mono`]: a Laurent monomial with doubled integer exponents for q and t
//!   (so q^{1/2} is representable) and an integer exponent for a.
//! - [`LaurentPoly`]: finite sums of monomials with `BigRational` coefficients.
//! - [`Rat`]: rational functions kept in factored form `c * m * prod(1 - u_i)
//!   / prod(1 - v_j) * (P/Q)`, with symbolic cancellation and cone-restricted
//!   power-series expansion into [`Series`].

mod json;
mod mono;
mod poly;
mod rat;
mod series;

pub use json::{poly_from_json, poly_to_json};
pub use mono::{Mono, Subst, Weight};
pub use poly::LaurentPoly;
pub use rat::Rat;
pub use series::Series;

pub use num::BigRational;
use num::{BigInt, One, Zero};

pub fn q0() -> BigRational {
    BigRational::zero()
}
pub fn q1() -> BigRational {
    BigRational::one()
}
pub fn qi(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}
pub fn qr(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
