//! Exact arithmetic: rationals, infinitesimal-augmented rationals, the sign
//! function `σ(r) = (−1)^⌊r⌋`, and two-variable Laurent polynomials.

mod eps;
mod laurent;
mod rational;
mod sign;

pub use eps::EpsRational;
pub use laurent::LaurentPoly2;
pub use rational::{ParseRationalError, Rational};
pub use sign::{sigma, sigma_exact, sigma_frac, Sign};
