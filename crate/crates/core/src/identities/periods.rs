use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{bernoulli_f64, bernoulli_number, dim_data, LaurentPoly, Rational};
use crate::qseries::util::{factorial_f64, two_pi_i_pow, TWO_PI_I};
use crate::qseries::{
    eisenstein, eisenstein_normalized, eisenstein_tau_derivative, zeta_odd, ComplexVal,
    SeriesPolicy, TauPoint,
};

/// Tolerance used for `ζ(2n+1)` in period data.
pub const ZETA_TOL: f64 = 1e-12;

/// Period data of the normalized Eisenstein series `G_{2n+2}`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PeriodData {
    pub n: u32,
    /// `r_{2n}(G_{2n+2}) = (2n)! ζ(2n+1) / (2(2πi)^{2n+1})`.
    pub r2n: ComplexVal,
    /// `(G_{2n+2}, G_{2n+2}) = (2n)!/(4π)^{2n+1} · B_{2n+2}/(2(2n+2)) · ζ(2n+1)`.
    pub petersson: f64,
    /// Odd period polynomial `r⁻(G_{2n+2})(p,q)`.
    pub odd_period: LaurentPoly<Rational>,
}

fn factorial(n: u32) -> Rational {
    (1..=i64::from(n)).map(Rational::from).fold(Rational::one(), |a, b| a * b)
}

/// `r⁻(G_{2n+2})(p,q) = -(1/pq){Σ_{j=0}^{n+1} (2n)! B_{2j}B_{2n+2-2j}/(2(2j)!(2n+2-2j)!)
///     p^{2j}q^{2n+2-2j} + B_{2n+2}/(4(n+1))}`.
pub fn odd_period_polynomial(n: u32) -> Result<LaurentPoly<Rational>> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be >= 1".into()));
    }
    let f2n = factorial(2 * n);
    let mut poly = LaurentPoly::zero();
    for j in 0..=n + 1 {
        let (a, b) = (2 * j, 2 * n + 2 - 2 * j);
        let c = &f2n * &bernoulli_number(a) * bernoulli_number(b)
            / (Rational::from(2) * factorial(a) * factorial(b));
        poly.add_term(a as i32 - 1, b as i32 - 1, -c);
    }
    let constant = bernoulli_number(2 * n + 2) / Rational::from(4 * (i64::from(n) + 1));
    poly.add_term(-1, -1, -constant);
    Ok(poly)
}

pub fn eisenstein_period_data(n: u32, _policy: &SeriesPolicy) -> Result<PeriodData> {
    let odd_period = odd_period_polynomial(n)?;
    let zeta = zeta_odd(n, ZETA_TOL);
    let f2n = factorial_f64(2 * n);
    let unit = f2n / (2.0 * two_pi_i_pow(2 * n as i32 + 1));
    let r2n = ComplexVal::new(unit * zeta, unit.norm() * ZETA_TOL);
    let petersson = f2n / (4.0 * PI).powi(2 * n as i32 + 1) * bernoulli_f64(2 * n + 2)
        / (2.0 * f64::from(2 * n + 2))
        * zeta;
    Ok(PeriodData {
        n,
        r2n,
        petersson,
        odd_period,
    })
}

/// `R⁻_{2n}(p,q;τ)` as a Laurent polynomial in `(p,q)` with complex
/// coefficients:
///
/// `-(2πi)^{-2}[Σ_j E_{2j}E_{2n+2-2j} p^{2j-1}q^{2n+1-2j} - E_{2n+2}(p^{2n+1}q^{-1} + p^{-1}q^{2n+1})
///   - (2n+1)E_{2n+2} p^{-1}q^{-1}] - (4πin)^{-1} ∂E_{2n}/∂τ (p^{2n-1}q + pq^{2n-1})`.
pub fn reciprocity_polynomial(
    w: u32,
    tau: &TauPoint,
    policy: &SeriesPolicy,
) -> Result<LaurentPoly<Complex64>> {
    if w < 2 || !w.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!("w must be even and >= 2, got {w}")));
    }
    let n = w / 2;
    let eis: Vec<Complex64> = (1..=n + 1)
        .map(|j| eisenstein(j, tau, policy).map(|v| v.value()))
        .collect::<Result<_>>()?;
    let e = |k: u32| eis[k as usize - 1];
    let pref = -1.0 / two_pi_i_pow(2);
    let top = 2 * n as i32 + 1;
    let mut poly = LaurentPoly::zero();
    for j in 1..=n {
        poly.add_term(2 * j as i32 - 1, top - 2 * j as i32, pref * e(j) * e(n + 1 - j));
    }
    poly.add_term(top, -1, -pref * e(n + 1));
    poly.add_term(-1, top, -pref * e(n + 1));
    poly.add_term(-1, -1, -pref * f64::from(2 * n + 1) * e(n + 1));
    let de = eisenstein_tau_derivative(n, tau, policy)?.value();
    let dcoef = -de / (2.0 * TWO_PI_I * f64::from(n));
    poly.add_term(top - 2, 1, dcoef);
    poly.add_term(1, top - 2, dcoef);
    Ok(poly)
}

/// Residual polynomial of the one-term spectral expansion of `R⁻_w` when
/// `M_{w+2}` is spanned by the Eisenstein series:
///
/// `R⁻_w(p,q;τ) + (2iπ^w/w!) · r_w(G)/(G,G) · r⁻(G)(p,q) · G_{w+2}(τ)`.
///
/// Returns the residual polynomial and a coefficient scale: the larger of
/// the biggest coefficient of `R⁻_w` and the biggest right-side coefficient
/// with `G_{w+2}` replaced by `|constant term| + |q-part|`. The second keeps
/// the scale meaningful where `G_{w+2}(τ)` vanishes, as at `τ = i` for
/// `w ≡ 0 (mod 4)`.
pub fn verify_eq64_onedim(
    w: u32,
    tau: &TauPoint,
    policy: &SeriesPolicy,
) -> Result<(LaurentPoly<Complex64>, f64)> {
    let (d, _) = dim_data(w)?;
    if d != 0 {
        return Err(Error::InvalidArgument(format!(
            "weight {} carries {d} cusp forms; the one-term expansion needs none",
            w + 2
        )));
    }
    let n = w / 2;
    let lhs = reciprocity_polynomial(w, tau, policy)?;
    let data = eisenstein_period_data(n, policy)?;
    let g = eisenstein_normalized(n + 1, tau, policy)?.value();
    let constant = -bernoulli_f64(w + 2) / (2.0 * f64::from(w + 2));
    let g_size = constant.abs() + (g - constant).norm();
    let unit = Complex64::new(0.0, 2.0 * PI.powi(w as i32) / factorial_f64(w)) * data.r2n.value()
        / data.petersson;
    let period = data.odd_period.to_complex();
    let rhs = period.scale(&(-unit * g));
    let scale = lhs.max_abs().max(period.max_abs() * unit.norm() * g_size);
    Ok((lhs.sub(&rhs), scale))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::g_poly;

    fn tau(re: f64, im: f64) -> TauPoint {
        TauPoint::from_parts(re, im).unwrap()
    }

    #[test]
    fn odd_period_is_g() {
        for n in 1..=8 {
            assert_eq!(odd_period_polynomial(n).unwrap(), g_poly(2 * n).unwrap());
            let p = odd_period_polynomial(n).unwrap();
            assert_eq!(p.swap(), p);
        }
    }

    #[test]
    fn period_scalars() {
        let pol = SeriesPolicy::default();
        for n in 1..=6 {
            let d = eisenstein_period_data(n, &pol).unwrap();
            assert_eq!(d.r2n.re, 0.0);
            // sign of B_{2n+2} alternates: (-1)^n
            assert_eq!(d.petersson > 0.0, n % 2 == 0, "n={n}");
        }
    }

    #[test]
    fn polynomial_matches_closed_form() {
        let pol = SeriesPolicy::default();
        let t = tau(0.2, 1.1);
        for w in [2u32, 4, 6] {
            let poly = reciprocity_polynomial(w, &t, &pol).unwrap();
            for (p, q) in [(3i64, 2i64), (5, 7)] {
                let direct = crate::symbols::reciprocity_rhs(
                    w / 2,
                    crate::exact::CoprimePair::in_u(p, q).unwrap(),
                    &t,
                    &pol,
                )
                .unwrap();
                let v = poly.eval(&Complex64::new(p as f64, 0.0), &Complex64::new(q as f64, 0.0));
                assert!((v - direct.value()).norm() < 1e-9 * direct.abs().max(1.0));
            }
        }
    }

    #[test]
    fn one_dimensional_expansion() {
        let pol = SeriesPolicy::default();
        for (w, t) in [(2, tau(0.0, 1.0)), (12, tau(0.1, 1.1)), (8, tau(-0.3, 0.9))] {
            let (res, scale) = verify_eq64_onedim(w, &t, &pol).unwrap();
            assert!(res.max_abs() / scale < 1e-8, "w={w}: {}", res.max_abs() / scale);
        }
        assert!(verify_eq64_onedim(10, &tau(0.0, 1.0), &pol).is_err());
    }
}
