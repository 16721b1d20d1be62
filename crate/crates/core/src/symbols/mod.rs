//! Elliptic Apostol–Dedekind sums, their reciprocity functions and
//! generating functions, and Machide's elliptic Dedekind–Rademacher sums.

mod elliptic_sum;
mod generating;
mod machide;

pub use elliptic_sum::{
    apostol_limit, elliptic_apostol_sum, reciprocity_rhs, EllipticSumResult, Route,
};
pub use generating::{
    generating_constant, generating_d, generating_r, generating_residual, small_x_bound,
};
pub use machide::{
    lemma32_spec, machide_coefficient_identities, machide_sum, proposition31_closed_form,
    proposition31_residual, MachideSpec, NONDEGENERACY_GAP,
};
