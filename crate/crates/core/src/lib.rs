//! Exact computer algebra for Witten genera and elliptic genera of circle
//! actions: truncated q-series over exact rings, lambda-ring operations on
//! circle characters, Jacobi theta functions and level-2 modular forms,
//! Lefschetz fixed-point sums on weighted projective spaces, the Dirac
//! induction trace, and Chern-root checks of the cancellation formula.
//!
//! The algebra layer is generic over the coefficient ring (see
//! [`algebra::Ring`]); the aliases below fix the concrete instances used by
//! the geometric modules.

pub mod algebra;
pub mod cancellation;
pub mod error;
pub mod induction;
pub mod lambda_ring;
pub mod lefschetz;
pub mod modforms;
pub mod theta;

pub use error::{Error, Result};

/// Arbitrary-precision rational numbers.
pub type Rational = num_rational::BigRational;
/// Arbitrary-precision integers.
pub type Integer = num_bigint::BigInt;
/// Laurent polynomial with rational coefficients, in `λ` or `μ = λ^{1/2}`.
pub type Laurent = algebra::LaurentPoly<Rational>;
/// Rational q-series.
pub type RationalSeries = algebra::QSeries<Rational>;
/// q-series whose coefficients are circle characters.
pub type CharSeries = algebra::QSeries<Laurent>;
/// Rational function in one variable over the rationals.
pub type RatFunc = algebra::RationalFunc<Rational>;
