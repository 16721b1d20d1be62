use num_complex::Complex64;

use super::util::{factorial_f64, geometric_tail, two_pi_i_pow, TWO_PI_I};
use super::{Accumulator, ComplexVal, SeriesPolicy, TauPoint};
use crate::error::{Error, Result};
use crate::exact::bernoulli_f64;

/// `Σ_{k≥1} k^m q^k/(1-q^k)` (or its τ-derivative
/// `Σ k^m · 2πik q^k/(1-q^k)²`), summed until the tail bound drops below
/// `tol` relative to `scale + Σ|terms|`.
///
/// Returns the accumulator and the tail bound.
fn lambert(
    m: u32,
    tau: &TauPoint,
    policy: &SeriesPolicy,
    derivative: bool,
    scale: f64,
) -> Result<(Accumulator, f64)> {
    let cap = policy.term_cap(tau)?;
    let q = tau.nome();
    let r = tau.nome_abs();
    let power = if derivative { m + 1 } else { m } as i32;
    let extra = if derivative { TWO_PI_I.norm() } else { 1.0 };
    let mut acc = Accumulator::new();
    let mut qk = Complex64::new(1.0, 0.0);
    for k in 1..=cap {
        qk *= q;
        let kf = k as f64;
        let one_minus = Complex64::new(1.0, 0.0) - qk;
        let term = if derivative {
            kf.powi(m as i32) * TWO_PI_I * kf * qk / (one_minus * one_minus)
        } else {
            kf.powi(m as i32) * qk / one_minus
        };
        acc.add(term);

        let next = kf + 1.0;
        let rn = r.powf(next);
        let denom = if derivative { (1.0 - rn).powi(2) } else { 1.0 - rn };
        let first = extra * next.powi(power) * rn / denom;
        let ratio = ((next + 1.0) / next).powi(power) * r;
        if let Some(tail) = geometric_tail(first, ratio) {
            if tail <= policy.tol * (scale + acc.magnitude()) {
                return Ok((acc, tail));
            }
        }
    }
    Err(Error::NonConvergence {
        terms: cap,
        partial: acc.finish(f64::INFINITY),
    })
}

fn check_weight(n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("Eisenstein series need n >= 1".into()));
    }
    Ok(())
}

/// `2ζ(2n) = -(2πi)^{2n} B_{2n}/(2n)!`.
pub fn two_zeta_even(n: u32) -> f64 {
    (-two_pi_i_pow(2 * n as i32) * bernoulli_f64(2 * n) / factorial_f64(2 * n)).re
}

/// `2(2πi)^{2n}/(2n-1)!`, the ratio `E_{2n}/G_{2n}`.
pub fn eisenstein_normalizer(n: u32) -> Complex64 {
    2.0 * two_pi_i_pow(2 * n as i32) / factorial_f64(2 * n - 1)
}

fn finish_scaled(acc: &Accumulator, tail: f64, pref: Complex64, constant: f64) -> ComplexVal {
    let series = acc.finish(tail).scale(pref);
    ComplexVal::new(
        series.value() + constant,
        series.err + super::value::ROUNDING_FACTOR * constant.abs(),
    )
}

/// `E_{2n}(τ) = Σ'_{γ} γ^{-2n}` over `Zτ+Z` (Eisenstein summation for
/// `n = 1`), evaluated from its divisor-sum q-expansion.
pub fn eisenstein(n: u32, tau: &TauPoint, policy: &SeriesPolicy) -> Result<ComplexVal> {
    check_weight(n)?;
    let pref = eisenstein_normalizer(n);
    let constant = two_zeta_even(n);
    let (acc, tail) = lambert(2 * n - 1, tau, policy, false, constant.abs() / pref.norm())?;
    Ok(finish_scaled(&acc, tail, pref, constant))
}

/// `G_{2n}(τ) = -B_{2n}/(4n) + Σ σ_{2n-1}(k) q^k`.
pub fn eisenstein_normalized(n: u32, tau: &TauPoint, policy: &SeriesPolicy) -> Result<ComplexVal> {
    check_weight(n)?;
    let constant = -bernoulli_f64(2 * n) / (4.0 * f64::from(n));
    let (acc, tail) = lambert(2 * n - 1, tau, policy, false, constant.abs())?;
    Ok(finish_scaled(&acc, tail, Complex64::new(1.0, 0.0), constant))
}

/// `∂E_{2n}/∂τ`, the q-series differentiated term by term.
pub fn eisenstein_tau_derivative(
    n: u32,
    tau: &TauPoint,
    policy: &SeriesPolicy,
) -> Result<ComplexVal> {
    check_weight(n)?;
    let pref = eisenstein_normalizer(n);
    let (acc, tail) = lambert(2 * n - 1, tau, policy, true, 0.0)?;
    Ok(finish_scaled(&acc, tail, pref, 0.0))
}

/// Divisor function `σ_l(k) = Σ_{d | k} d^l`.
pub fn divisor_sigma(l: u32, k: u64) -> f64 {
    let mut s = 0.0;
    let mut d = 1u64;
    while d * d <= k {
        if k.is_multiple_of(d) {
            s += (d as f64).powi(l as i32);
            let other = k / d;
            if other != d {
                s += (other as f64).powi(l as i32);
            }
        }
        d += 1;
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn tau(re: f64, im: f64) -> TauPoint {
        TauPoint::from_parts(re, im).unwrap()
    }

    /// Divisor-sum route `2ζ(2n) + pref·Σ σ_{2n-1}(k) q^k`, independent of
    /// the Lambert arrangement used above.
    fn eisenstein_by_divisors(n: u32, t: &TauPoint, terms: u64) -> Complex64 {
        let q = t.nome();
        let mut s = Complex64::new(0.0, 0.0);
        let mut qk = Complex64::new(1.0, 0.0);
        for k in 1..=terms {
            qk *= q;
            s += divisor_sigma(2 * n - 1, k) * qk;
        }
        two_zeta_even(n) + eisenstein_normalizer(n) * s
    }

    #[test]
    fn constant_term_dominates_far_up() {
        let p = SeriesPolicy::default();
        let v = eisenstein(2, &tau(0.0, 40.0), &p).unwrap();
        let expected = PI.powi(4) / 45.0;
        assert!((v.re - expected).abs() < 1e-12 * expected);
        assert!(v.im.abs() < 1e-12);
        let g = eisenstein_normalized(2, &tau(0.0, 40.0), &p).unwrap();
        assert!((g.re - 1.0 / 240.0).abs() < 1e-12);
        let d = eisenstein_tau_derivative(3, &tau(0.0, 40.0), &p).unwrap();
        assert!(d.abs() < 1e-10);
    }

    #[test]
    fn e6_vanishes_at_i() {
        let v = eisenstein(3, &tau(0.0, 1.0), &SeriesPolicy::default()).unwrap();
        assert!(v.abs() < 1e-10, "{v:?}");
    }

    #[test]
    fn matches_divisor_sum_route() {
        let t = tau(0.17, 0.9);
        for n in 1..=6 {
            let v = eisenstein(n, &t, &SeriesPolicy::default()).unwrap();
            let d = eisenstein_by_divisors(n, &t, 200);
            assert!((v.value() - d).norm() <= 1e-11 * d.norm().max(1.0), "n={n}");
        }
    }

    #[test]
    fn normalized_ratio() {
        let t = tau(-0.31, 1.07);
        for n in 1..=7 {
            let e = eisenstein(n, &t, &SeriesPolicy::default()).unwrap();
            let g = eisenstein_normalized(n, &t, &SeriesPolicy::default()).unwrap();
            let ratio = e.value() / g.value();
            let expected = eisenstein_normalizer(n);
            assert!((ratio - expected).norm() < 1e-11 * expected.norm(), "n={n}");
        }
    }

    #[test]
    fn periodic_in_tau() {
        let p = SeriesPolicy::default();
        let t = tau(0.23, 0.95);
        for n in 1..=5 {
            let a = eisenstein(n, &t, &p).unwrap();
            let b = eisenstein(n, &t.translate(1.0), &p).unwrap();
            assert!((a.value() - b.value()).norm() <= 2.0 * (a.err + b.err), "n={n}");
            let a = eisenstein_tau_derivative(n, &t, &p).unwrap();
            let b = eisenstein_tau_derivative(n, &t.translate(1.0), &p).unwrap();
            assert!((a.value() - b.value()).norm() <= 2.0 * (a.err + b.err), "n={n}");
        }
    }

    #[test]
    fn derivative_matches_central_difference() {
        let p = SeriesPolicy::default();
        for (re, im) in [(0.1, 1.1), (0.3, 1.0), (-0.2, 1.4)] {
            let t = tau(re, im);
            let h = 1e-5 * t.tau().norm().max(1.0);
            for n in 1..=6 {
                let d = eisenstein_tau_derivative(n, &t, &p).unwrap().value();
                let plus = eisenstein(n, &TauPoint::new(t.tau() + h).unwrap(), &p).unwrap();
                let minus = eisenstein(n, &TauPoint::new(t.tau() - h).unwrap(), &p).unwrap();
                let fd = (plus.value() - minus.value()) / (2.0 * h);
                assert!((d - fd).norm() <= 1e-6 * d.norm(), "n={n} tau={re}+{im}i");
            }
        }
    }

    #[test]
    fn van_der_pol_weight_two() {
        let p = SeriesPolicy::default();
        let t = tau(0.3, 1.0);
        let e2 = eisenstein(1, &t, &p).unwrap().value();
        let e4 = eisenstein(2, &t, &p).unwrap().value();
        let d = eisenstein_tau_derivative(1, &t, &p).unwrap().value();
        let lhs = TWO_PI_I * d;
        let rhs = -e2 * e2 + 5.0 * e4;
        assert!((lhs - rhs).norm() < 1e-9 * rhs.norm());
    }

    #[test]
    fn tighter_tolerance_stays_within_error() {
        let t = tau(0.05, 0.6);
        for n in 1..=4 {
            let coarse = eisenstein(n, &t, &SeriesPolicy::with_tol(1e-8).unwrap()).unwrap();
            let fine = eisenstein(n, &t, &SeriesPolicy::with_tol(1e-9).unwrap()).unwrap();
            assert!((coarse.value() - fine.value()).norm() < coarse.err);
        }
    }

    #[test]
    fn term_cap_reports_partial_value() {
        let p = SeriesPolicy {
            max_terms: 3,
            ..SeriesPolicy::default()
        };
        match eisenstein(2, &tau(0.0, 0.3), &p) {
            Err(Error::NonConvergence { terms, .. }) => assert_eq!(terms, 3),
            other => panic!("expected non-convergence, got {other:?}"),
        }
        assert!(eisenstein(0, &tau(0.0, 1.0), &SeriesPolicy::default()).is_err());
    }

    #[test]
    fn sigma_values() {
        assert_eq!(divisor_sigma(1, 12), 28.0);
        assert_eq!(divisor_sigma(3, 1), 1.0);
        assert_eq!(divisor_sigma(0, 36), 9.0);
    }
}
