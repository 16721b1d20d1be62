use ellded::exact::{dim_data, CoprimePair};
use ellded::qseries::TauPoint;
use ellded::verify::{
    self, default_suite, CheckRecord, EllipticCase, Family, VerifyOptions, DEFAULT_HEIGHTS,
    DEFAULT_SS, DEFAULT_XS,
};
use ellded::Result;

use crate::args::VerifyArgs;

fn has_target(a: &VerifyArgs) -> bool {
    a.n.is_some() || a.p.is_some() || a.q.is_some() || a.w.is_some() || a.k.is_some() || a.tau.is_some()
}

fn tau_or_i(a: &VerifyArgs) -> Result<TauPoint> {
    match &a.tau {
        Some(s) => s.parse(),
        None => TauPoint::from_parts(0.0, 1.0),
    }
}

fn pair_u(a: &VerifyArgs) -> Result<CoprimePair> {
    CoprimePair::in_u(a.p.unwrap_or(3), a.q.unwrap_or(2))
}

fn single_case(a: &VerifyArgs) -> Result<EllipticCase> {
    Ok(EllipticCase {
        n: a.n.unwrap_or(1),
        p: a.p.unwrap_or(3),
        q: a.q.unwrap_or(2),
        tau: tau_or_i(a)?,
    })
}

/// Runs the requested family: the default acceptance sample when no
/// parameters are given, otherwise the single targeted case.
pub fn run(a: &VerifyArgs, opts: &VerifyOptions) -> Result<Vec<CheckRecord>> {
    let family: Family = a.check.parse()?;
    match family {
        Family::ApostolReciprocity => {
            if a.w.is_none() && a.w_max.is_none() && a.pq_max.is_none() {
                return default_suite(family, opts);
            }
            let weights: Vec<u32> = match a.w {
                Some(w) => vec![w],
                None => (2..=a.w_max.unwrap_or(10)).step_by(2).collect(),
            };
            verify::apostol_reciprocity(&weights, a.pq_max.unwrap_or(30))
        }
        Family::BasisRank => {
            if a.w.is_none() && a.num_tau.is_none() {
                return default_suite(family, opts);
            }
            let w = a.w.unwrap_or(2);
            let num = match a.num_tau {
                Some(m) => m,
                None => dim_data(w)?.0 as usize + 3,
            };
            verify::basis_rank(&[w], num, opts)
        }
        _ if !has_target(a) => default_suite(family, opts),
        Family::Thm11 => verify::thm11(&[single_case(a)?], opts),
        Family::ThreeTerm => verify::three_term(&[single_case(a)?], opts),
        Family::Thm13 => verify::thm13(pair_u(a)?, &[tau_or_i(a)?], &DEFAULT_XS, opts),
        Family::Prop31 => verify::prop31(pair_u(a)?, &tau_or_i(a)?, &DEFAULT_SS, opts),
        Family::Lemma32 => verify::lemma32(&[pair_u(a)?], 0.013, 0.007, &tau_or_i(a)?, opts),
        Family::Eq73 => verify::eq73(&[a.n.unwrap_or(1)], &[tau_or_i(a)?], opts),
        Family::Eq64 => verify::eq64(&[a.w.unwrap_or(2)], &[tau_or_i(a)?], opts),
        Family::Limit => {
            let c = single_case(a)?;
            verify::limit(&[(c.n, c.p, c.q)], &DEFAULT_HEIGHTS, opts)
        }
        Family::Kronecker => {
            let ks: Vec<u32> = match a.k {
                Some(k) => vec![k],
                None => vec![3, 4],
            };
            verify::kronecker(&ks, 0.25, 0.4, &tau_or_i(a)?, 400, opts)
        }
    }
}
