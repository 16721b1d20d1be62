//! Eisenstein-series identities from the three-term relation, period data
//! of Eisenstein series and the numerical basis-rank test.

mod coefficients;
mod periods;
mod rank;

pub use coefficients::{
    c_coefficients, t_function, verify_eq73, verify_three_term, CoefficientVector, Residual,
};
pub use periods::{
    eisenstein_period_data, odd_period_polynomial, reciprocity_polynomial, verify_eq64_onedim,
    PeriodData, ZETA_TOL,
};
pub use rank::{basis_rank, reciprocity_singular_values, sample_taus, RANK_THRESHOLD};
