//! Classical and elliptic Apostol–Dedekind sums.
//!
//! The crate is split into four layers:
//!
//! * [`exact`]: exact rational arithmetic, Bernoulli numbers, Apostol's
//!   generalized Dedekind sums, the Laurent polynomial `g_w` and sparse
//!   Laurent polynomials in two variables.
//! * [`qseries`]: binary64 evaluation of Eisenstein series, Weierstrass
//!   functions and elliptic Bernoulli functions by nome expansions, each
//!   value paired with a truncation/rounding error estimate, plus direct
//!   lattice sums used as brute-force oracles.
//! * [`symbols`]: the elliptic Apostol–Dedekind sums `D⁻₂ₙ(p,q;τ)`, their
//!   reciprocity functions `R⁻₂ₙ`, generating functions and Machide's
//!   elliptic Dedekind–Rademacher sums.
//! * [`identities`]: Eisenstein-series identities derived from the
//!   three-term relation, period data of Eisenstein series and the
//!   numerical basis-rank test.
//!
//! [`verify`] drives all reciprocity and identity checks and produces
//! machine-readable records.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod exact;
pub mod identities;
pub mod qseries;
pub mod symbols;
pub mod taylor;
pub mod verify;

pub use error::{Error, Result};
