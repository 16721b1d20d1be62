//! Binary64 evaluation of Eisenstein series, Weierstrass functions and
//! elliptic Bernoulli functions by nome expansions, plus direct lattice sums.
//!
//! Every evaluator returns a [`ComplexVal`] whose `err` field bounds the
//! discarded tail (geometric bound) plus accumulated rounding.

mod eisenstein;
mod elliptic_bernoulli;
mod lattice;
mod tau;
pub mod util;
pub(crate) mod value;
mod weierstrass;
mod zeta_odd;

pub use eisenstein::{
    divisor_sigma, eisenstein, eisenstein_normalized, eisenstein_normalizer,
    eisenstein_tau_derivative, two_zeta_even,
};
pub use elliptic_bernoulli::{elliptic_bernoulli, reduce_unit, SNAP};
pub use lattice::{kronecker_direct, LatticeCutoff};
pub use tau::{e, parse_complex, SeriesPolicy, TauPoint, WARN_IM_TAU};
pub use value::{Accumulator, ComplexVal};
pub use weierstrass::{
    is_lattice_point, lattice_coordinates, log_sigma_tau_derivative, weierstrass_p_deriv,
    weierstrass_zeta, zeta_deriv,
};
pub use zeta_odd::{zeta_odd, zeta_real, zeta_real_with_terms};
