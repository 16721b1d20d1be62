//! Exact rational layer: Bernoulli numbers and functions, Apostol's sums,
//! the Laurent polynomial `g_w` and the exact reciprocity verifier.

mod apostol;
mod bernoulli;
mod laurent;
mod rational;

pub use apostol::{
    apostol_sum, dim_data, g_poly, monomial_support, verify_apostol_reciprocity, CoprimePair,
};
pub use bernoulli::{
    bernoulli_f64, bernoulli_function, bernoulli_number, bernoulli_polynomial, binomial,
};
pub use laurent::{Coefficient, LaurentPoly};
pub use rational::Rational;
