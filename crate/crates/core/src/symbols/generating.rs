use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::exact::CoprimePair;
use crate::qseries::util::{two_pi_i_pow, TWO_PI_I};
use crate::qseries::{
    eisenstein, eisenstein_tau_derivative, log_sigma_tau_derivative, weierstrass_p_deriv,
    weierstrass_zeta, Accumulator, ComplexVal, SeriesPolicy, TauPoint, SNAP,
};

fn near_integer(x: f64) -> bool {
    (x - x.round()).abs() < SNAP
}

/// Generating function of `D⁻₂ₙ`:
///
/// `D⁻(p,q;τ;x) = 1/((2πi)² p) Σ'_{λ,μ mod p}
///     [ζ(z-x) - E_2(z-x) + 2πi μ/p] · [ζ(qz) - E_2 qz + 2πi qμ/p]`,
/// `z = (λ+μτ)/p`.
///
/// Its even part in `x` is `D⁻(p,q;τ;0) + Σ_{n≥1} D⁻₂ₙ(p,q;τ) x^{2n}`.
pub fn generating_d(
    pair: CoprimePair,
    tau: &TauPoint,
    x: f64,
    policy: &SeriesPolicy,
) -> Result<ComplexVal> {
    let CoprimePair { p, q } = CoprimePair::in_v(pair.p, pair.q)?;
    if p == 1 {
        return Ok(ComplexVal::zero());
    }
    let pf = p as f64;
    let e2 = eisenstein(1, tau, policy)?;
    let mut acc = Accumulator::new();
    for lambda in 0..p {
        for mu in 0..p {
            if lambda == 0 && mu == 0 {
                continue;
            }
            if mu == 0 && near_integer(lambda as f64 / pf - x) {
                return Err(Error::Singular { re: x, im: 0.0 });
            }
            let z = (lambda as f64 + mu as f64 * tau.tau()) / pf;
            let w1 = z - x;
            let first = weierstrass_zeta(w1, tau, policy)? - e2.scale(w1)
                + TWO_PI_I * (mu as f64 / pf);
            let w2 = q as f64 * z;
            let second = weierstrass_zeta(w2, tau, policy)? - e2.scale(w2)
                + TWO_PI_I * ((q * mu) as f64 / pf);
            acc.add_val(first * second);
        }
    }
    Ok(acc.finish(0.0).scale(1.0 / (two_pi_i_pow(2) * pf)))
}

/// `2 ∂log σ(w;τ)/∂τ - ∂E_2/∂τ w² - E_2/(πi)`, which is `2πi B_2(w,0;τ)`.
fn sigma_block(
    w: f64,
    tau: &TauPoint,
    e2: ComplexVal,
    de2: ComplexVal,
    policy: &SeriesPolicy,
) -> Result<ComplexVal> {
    let ls = log_sigma_tau_derivative(Complex64::new(w, 0.0), tau, policy)?;
    Ok(ls.scale(Complex64::new(2.0, 0.0))
        - de2.scale(Complex64::new(w * w, 0.0))
        - e2.scale(2.0 / TWO_PI_I))
}

/// Generating function of `R⁻₂ₙ`:
///
/// `R⁻(p,q;τ;x) = -(2πi)^{-2}[ζ(px) - E_2 px][ζ(qx) - E_2 qx]
///     + q/(4πi p)[2∂_τ log σ(px) - ∂_τE_2 (px)² - E_2/(πi)]
///     + p/(4πi q)[2∂_τ log σ(qx) - ∂_τE_2 (qx)² - E_2/(πi)]
///     + ((2πi)² pq)^{-1}[℘(x) + E_2]`.
///
/// The `x^{-2}` poles of the first and last blocks cancel, so the function
/// is even and analytic at `0`; it is only evaluated for `x ≠ 0`.
pub fn generating_r(
    pair: CoprimePair,
    tau: &TauPoint,
    x: f64,
    policy: &SeriesPolicy,
) -> Result<ComplexVal> {
    let CoprimePair { p, q } = CoprimePair::in_u(pair.p, pair.q)?;
    let (pf, qf) = (p as f64, q as f64);
    for v in [x, pf * x, qf * x] {
        if near_integer(v) {
            return Err(Error::Singular { re: v, im: 0.0 });
        }
    }
    let e2 = eisenstein(1, tau, policy)?;
    let de2 = eisenstein_tau_derivative(1, tau, policy)?;
    let bracket = |w: f64| -> Result<ComplexVal> {
        let wc = Complex64::new(w, 0.0);
        Ok(weierstrass_zeta(wc, tau, policy)? - e2.scale(wc))
    };
    let first = (bracket(pf * x)? * bracket(qf * x)?).scale(-1.0 / two_pi_i_pow(2));
    let second = sigma_block(pf * x, tau, e2, de2, policy)?.scale(qf / (2.0 * TWO_PI_I * pf));
    let third = sigma_block(qf * x, tau, e2, de2, policy)?.scale(pf / (2.0 * TWO_PI_I * qf));
    let wp = weierstrass_p_deriv(0, Complex64::new(x, 0.0), tau, policy)?;
    let fourth = (wp + e2).scale(1.0 / (two_pi_i_pow(2) * pf * qf));
    Ok(first + second + third + fourth)
}

/// Value of the constant in the reciprocity law of the generating functions:
/// `-E_2(τ)/((2πi)² pq)`.
pub fn generating_constant(
    pair: CoprimePair,
    tau: &TauPoint,
    policy: &SeriesPolicy,
) -> Result<ComplexVal> {
    let e2 = eisenstein(1, tau, policy)?;
    Ok(e2.scale(-1.0 / (two_pi_i_pow(2) * (pair.p * pair.q) as f64)))
}

/// Largest `|x|` accepted by [`generating_residual`]: `1/(2·max(p,q))`.
pub fn small_x_bound(pair: CoprimePair) -> f64 {
    0.5 / pair.p.max(pair.q) as f64
}

/// `D⁻(p,q;τ;x) + D⁻(q,p;τ;x) - R⁻(p,q;τ;x)`, which does not depend on
/// `x` for `0 < |x| < 1/(2·max(p,q))`.
pub fn generating_residual(
    pair: CoprimePair,
    tau: &TauPoint,
    x: f64,
    policy: &SeriesPolicy,
) -> Result<ComplexVal> {
    let pair = CoprimePair::in_u(pair.p, pair.q)?;
    if x == 0.0 || x.abs() >= small_x_bound(pair) {
        return Err(Error::InvalidArgument(format!(
            "x must satisfy 0 < |x| < {}, got {x}",
            small_x_bound(pair)
        )));
    }
    let a = generating_d(pair, tau, x, policy)?;
    let b = generating_d(pair.swapped()?, tau, x, policy)?;
    let r = generating_r(pair, tau, x, policy)?;
    Ok(a + b - r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbols::{elliptic_apostol_sum, reciprocity_rhs, Route};
    use crate::taylor::even_taylor_coefficients;

    fn tau(re: f64, im: f64) -> TauPoint {
        TauPoint::from_parts(re, im).unwrap()
    }

    fn pair(p: i64, q: i64) -> CoprimePair {
        CoprimePair::in_v(p, q).unwrap()
    }

    #[test]
    fn trivial_and_odd() {
        let pol = SeriesPolicy::default();
        let t = tau(0.1, 1.0);
        assert_eq!(generating_d(pair(1, 4), &t, 0.01, &pol).unwrap().abs(), 0.0);
        let a = generating_d(pair(5, 2), &t, 0.013, &pol).unwrap();
        let b = generating_d(pair(5, -2), &t, 0.013, &pol).unwrap();
        assert!((a.value() + b.value()).norm() <= 2.0 * (a.err + b.err));
        let c = generating_d(pair(5, 7), &t, 0.013, &pol).unwrap();
        assert!((a.value() - c.value()).norm() <= 2.0 * (a.err + c.err));
    }

    #[test]
    fn even_part_reconstructs_from_sums() {
        let pol = SeriesPolicy::default();
        let t = tau(0.0, 1.0);
        let pr = pair(3, 2);
        let x = 0.01;
        let plus = generating_d(pr, &t, x, &pol).unwrap().value();
        let minus = generating_d(pr, &t, -x, &pol).unwrap().value();
        let zero = generating_d(pr, &t, 0.0, &pol).unwrap().value();
        let even = (plus + minus) / 2.0 - zero;
        let mut series = Complex64::new(0.0, 0.0);
        for n in 1..=3 {
            let dn = elliptic_apostol_sum(n, pr, &t, Route::ZetaDerivative, &pol).unwrap();
            series += dn.value.value() * x.powi(2 * n as i32);
        }
        assert!((even - series).norm() < 1e-8, "{even} vs {series}");
    }

    #[test]
    fn r_is_symmetric() {
        let pol = SeriesPolicy::default();
        let t = tau(0.25, 1.2);
        let a = generating_r(pair(3, 2), &t, 0.011, &pol).unwrap();
        let b = generating_r(pair(2, 3), &t, 0.011, &pol).unwrap();
        assert!((a.value() - b.value()).norm() <= 2.0 * (a.err + b.err));
    }

    #[test]
    fn r_taylor_coefficient_is_reciprocity_function() {
        let pol = SeriesPolicy::default();
        let t = tau(0.0, 1.0);
        let pr = pair(2, 1);
        let coeffs = even_taylor_coefficients(
            |x| generating_r(pr, &t, x, &pol).map(|v| v.value()),
            1e-2,
            6,
        )
        .unwrap();
        let r1 = reciprocity_rhs(1, pr, &t, &pol).unwrap();
        assert!((coeffs[1] - r1.value()).norm() < 1e-6, "{} vs {:?}", coeffs[1], r1);
    }

    #[test]
    fn residual_is_the_constant() {
        let pol = SeriesPolicy::default();
        for t in [tau(0.0, 1.0), tau(0.2, 1.2)] {
            let pr = pair(3, 2);
            let c = generating_constant(pr, &t, &pol).unwrap().value();
            for x in [0.003, 0.007, 0.011] {
                let r = generating_residual(pr, &t, x, &pol).unwrap();
                assert!((r.value() - c).norm() < 1e-8, "x={x}: {r:?} vs {c}");
            }
        }
        assert!(generating_residual(pair(3, 2), &tau(0.0, 1.0), 0.2, &pol).is_err());
    }
}
