use num_complex::Complex64;

use super::eisenstein::{eisenstein, eisenstein_tau_derivative};
use super::elliptic_bernoulli::{elliptic_bernoulli, SNAP};
use super::util::{eulerian_row, geometric_tail, polylog_neg, two_pi_i_pow, TWO_PI_I};
use super::{e, Accumulator, ComplexVal, SeriesPolicy, TauPoint};
use crate::error::{Error, Result};

/// Real coordinates `(x, y)` with `z = x - yτ`.
pub fn lattice_coordinates(z: Complex64, tau: &TauPoint) -> (f64, f64) {
    let t = tau.tau();
    let y = -z.im / t.im;
    (z.re + y * t.re, y)
}

fn near_integer(x: f64) -> bool {
    (x - x.round()).abs() < SNAP
}

pub fn is_lattice_point(z: Complex64, tau: &TauPoint) -> bool {
    let (x, y) = lattice_coordinates(z, tau);
    near_integer(x) && near_integer(y)
}

fn pole(z: Complex64) -> Error {
    Error::Singular { re: z.re, im: z.im }
}

/// Weierstrass `ζ(z;τ)`, through `ζ(z) = -2πi(B_1(x,y;τ) - y) + E_2(τ)z`
/// for `z = x - yτ`. The identity holds on the whole plane because both
/// sides have the same quasi-periods.
pub fn weierstrass_zeta(z: Complex64, tau: &TauPoint, policy: &SeriesPolicy) -> Result<ComplexVal> {
    if is_lattice_point(z, tau) {
        return Err(pole(z));
    }
    let (x, y) = lattice_coordinates(z, tau);
    let b1 = elliptic_bernoulli(1, x, y, tau, policy)?;
    let e2 = eisenstein(1, tau, policy)?;
    let lhs = (b1 - Complex64::new(y, 0.0)).scale(-TWO_PI_I);
    Ok(lhs + e2.scale(z))
}

/// `℘^{(k)}(z;τ)` from the Fourier expansion in `u = e(z)`:
///
/// `(2πi)^{k+2}[Σ_{n≥0} Li_{-(k+1)}(u qⁿ) + (-1)^k Σ_{n≥1} Li_{-(k+1)}(u⁻¹qⁿ)] - δ_{k0}E_2`
///
/// after moving `z` into the strip `0 ≤ Im z ≤ Im τ/2`.
pub fn weierstrass_p_deriv(
    k: u32,
    z: Complex64,
    tau: &TauPoint,
    policy: &SeriesPolicy,
) -> Result<ComplexVal> {
    if is_lattice_point(z, tau) {
        return Err(pole(z));
    }
    let cap = policy.term_cap(tau)?;
    let t = tau.tau();

    // z → z - ⌊Im z/Im τ⌋τ, then z → τ - z if above the midline.
    let shift = (z.im / t.im).floor();
    let mut w = z - shift * t;
    let mut sign = 1.0;
    if w.im > t.im / 2.0 {
        w = t - w;
        if k % 2 == 1 {
            sign = -1.0;
        }
    }
    w -= w.re.round();

    let s = k + 1;
    let eulerian = eulerian_row(s);
    let u = e(w);
    let uinv = Complex64::new(1.0, 0.0) / u;
    let q = tau.nome();
    let r = tau.nome_abs();
    let reflect = if k.is_multiple_of(2) { 1.0 } else { -1.0 };

    let mut acc = Accumulator::new();
    let mut tail = f64::INFINITY;
    let mut qn = Complex64::new(1.0, 0.0);
    for n in 0..cap {
        let (v, _) = polylog_neg(&eulerian, u * qn);
        acc.add(v);
        if n >= 1 {
            let (v, _) = polylog_neg(&eulerian, uinv * qn);
            acc.add(reflect * v);
        }
        qn *= q;
        // both remaining sums are dominated by Σ_{m>n} Li_{-s}(|q|^{m-1/2})
        let rho = r.powf(n as f64 + 0.5);
        let (bound, _) = polylog_neg(&eulerian, Complex64::new(rho, 0.0));
        if let Some(b) = geometric_tail(2.0 * bound.re, r) {
            if b <= policy.tol * acc.magnitude() {
                tail = b;
                break;
            }
        }
        if n + 1 == cap {
            return Err(Error::NonConvergence {
                terms: cap,
                partial: acc.finish(f64::INFINITY).scale(two_pi_i_pow(s as i32 + 1)),
            });
        }
    }
    let mut out = acc.finish(tail).scale(two_pi_i_pow(s as i32 + 1) * sign);
    if k == 0 {
        out = out - eisenstein(1, tau, policy)?;
    }
    Ok(out)
}

/// `ζ^{(j)}(z;τ) = -℘^{(j-1)}(z;τ)` for `j ≥ 1`; `j = 0` gives `ζ` itself.
pub fn zeta_deriv(j: u32, z: Complex64, tau: &TauPoint, policy: &SeriesPolicy) -> Result<ComplexVal> {
    if j == 0 {
        weierstrass_zeta(z, tau, policy)
    } else {
        Ok(-weierstrass_p_deriv(j - 1, z, tau, policy)?)
    }
}

/// `∂ log σ(z;τ)/∂τ` at fixed `z`, from the product
/// `σ = (2πi)⁻¹ e^{E_2 z²/2}(u^{1/2} - u^{-1/2}) Π_n (1-qⁿu)(1-qⁿ/u)/(1-qⁿ)²`
/// differentiated term by term. Needs `|Im z| < Im τ`.
pub fn log_sigma_tau_derivative(
    z: Complex64,
    tau: &TauPoint,
    policy: &SeriesPolicy,
) -> Result<ComplexVal> {
    let t = tau.tau();
    if z.im.abs() >= t.im {
        return Err(Error::InvalidArgument(format!(
            "log sigma tau-derivative needs |Im z| < Im tau, got z = {z}"
        )));
    }
    let cap = policy.term_cap(tau)?;
    let u = e(z);
    let uinv = Complex64::new(1.0, 0.0) / u;
    let q = tau.nome();
    let r = tau.nome_abs();
    let a = u.norm().max(uinv.norm());
    let one = Complex64::new(1.0, 0.0);

    let mut acc = Accumulator::new();
    let mut qn = one;
    let mut tail = f64::INFINITY;
    for n in 1..=cap {
        qn *= q;
        let nf = n as f64;
        let x1 = qn * u;
        let x2 = qn * uinv;
        acc.add(-nf * x1 / (one - x1));
        acc.add(-nf * x2 / (one - x2));
        acc.add(2.0 * nf * qn / (one - qn));

        let next = nf + 1.0;
        let rho = r.powf(next) * a;
        let first = 4.0 * next * rho / (1.0 - rho);
        let ratio = (next + 1.0) / next * r / (1.0 - rho);
        if let Some(b) = geometric_tail(first, ratio) {
            if b <= policy.tol * acc.magnitude() {
                tail = b;
                break;
            }
        }
        if n == cap {
            return Err(Error::NonConvergence {
                terms: cap,
                partial: acc.finish(f64::INFINITY).scale(TWO_PI_I),
            });
        }
    }
    let series = acc.finish(tail).scale(TWO_PI_I);
    let de2 = eisenstein_tau_derivative(1, tau, policy)?;
    Ok(series + de2.scale(z * z / 2.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tau(re: f64, im: f64) -> TauPoint {
        TauPoint::from_parts(re, im).unwrap()
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn zeta_is_odd() {
        let p = SeriesPolicy::default();
        let t = tau(0.0, 1.1);
        let z = c(0.3, 0.2);
        let a = weierstrass_zeta(z, &t, &p).unwrap();
        let b = weierstrass_zeta(-z, &t, &p).unwrap();
        assert!((a.value() + b.value()).norm() <= a.err + b.err + 1e-14);
    }

    #[test]
    fn zeta_quasi_periods() {
        let p = SeriesPolicy::default();
        for (t, z) in [(tau(0.0, 1.1), c(0.3, 0.2)), (tau(0.35, 0.9), c(-0.7, 0.55))] {
            let e2 = eisenstein(1, &t, &p).unwrap().value();
            let a = weierstrass_zeta(z, &t, &p).unwrap().value();
            let b = weierstrass_zeta(z + 1.0, &t, &p).unwrap().value();
            let d = weierstrass_zeta(z + t.tau(), &t, &p).unwrap().value();
            assert!((b - a - e2).norm() < 1e-10);
            assert!((d - a - (e2 * t.tau() - TWO_PI_I)).norm() < 1e-10);
        }
    }

    #[test]
    fn zeta_and_p_near_origin() {
        let p = SeriesPolicy::default();
        let t = tau(0.0, 1.0);
        let z = c(0.05, 0.0);
        let mut zeta_series = 1.0 / z;
        let mut p_series = 1.0 / (z * z);
        for n in 2..=8u32 {
            let e2n = eisenstein(n, &t, &p).unwrap().value();
            zeta_series -= e2n * z.powu(2 * n - 1);
            p_series += f64::from(2 * n - 1) * e2n * z.powu(2 * n - 2);
        }
        let zeta = weierstrass_zeta(z, &t, &p).unwrap().value();
        let wp = weierstrass_p_deriv(0, z, &t, &p).unwrap().value();
        assert!((zeta - zeta_series).norm() < 1e-10, "{zeta} vs {zeta_series}");
        assert!((wp - p_series).norm() < 1e-9, "{wp} vs {p_series}");
    }

    #[test]
    fn p_is_even_and_derivatives_alternate() {
        let p = SeriesPolicy::default();
        let t = tau(0.1, 1.2);
        let z = c(0.37, 0.21);
        for k in 0..5 {
            let a = weierstrass_p_deriv(k, z, &t, &p).unwrap();
            let b = weierstrass_p_deriv(k, -z, &t, &p).unwrap();
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            let diff = (a.value() - sign * b.value()).norm();
            assert!(diff <= 1e-10 * a.abs().max(1.0), "k={k}: {diff}");
        }
    }

    #[test]
    fn p_derivative_chain() {
        let p = SeriesPolicy::default();
        let t = tau(-0.2, 1.05);
        let z = c(0.21, 0.63);
        let h = 1e-5;
        for k in 0..4 {
            let d = weierstrass_p_deriv(k + 1, z, &t, &p).unwrap().value();
            let plus = weierstrass_p_deriv(k, z + h, &t, &p).unwrap().value();
            let minus = weierstrass_p_deriv(k, z - h, &t, &p).unwrap().value();
            let fd = (plus - minus) / (2.0 * h);
            assert!((d - fd).norm() < 1e-6 * d.norm(), "k={k}");
        }
        let dz = zeta_deriv(1, z, &t, &p).unwrap().value();
        let plus = weierstrass_zeta(z + h, &t, &p).unwrap().value();
        let minus = weierstrass_zeta(z - h, &t, &p).unwrap().value();
        assert!((dz - (plus - minus) / (2.0 * h)).norm() < 1e-6 * dz.norm());
    }

    #[test]
    fn p_is_periodic() {
        let p = SeriesPolicy::default();
        let t = tau(0.3, 1.1);
        let z = c(0.1, 0.4);
        for k in 0..3 {
            let a = weierstrass_p_deriv(k, z, &t, &p).unwrap().value();
            for shift in [c(1.0, 0.0), t.tau(), -2.0 * t.tau() + 3.0] {
                let b = weierstrass_p_deriv(k, z + shift, &t, &p).unwrap().value();
                assert!((a - b).norm() < 1e-10 * a.norm().max(1.0), "k={k} shift={shift}");
            }
        }
    }

    #[test]
    fn log_sigma_derivative_matches_finite_difference() {
        // τ-difference of log σ from the truncated product
        fn log_sigma(z: Complex64, t: &TauPoint) -> Complex64 {
            let p = SeriesPolicy::default();
            let e2 = eisenstein(1, t, &p).unwrap().value();
            let u = e(z);
            let q = t.nome();
            let mut s = e2 * z * z / 2.0 + (u.sqrt() - 1.0 / u.sqrt()).ln() - TWO_PI_I.ln();
            let mut qn = Complex64::new(1.0, 0.0);
            for _ in 1..200 {
                qn *= q;
                s += (1.0 - qn * u).ln() + (1.0 - qn / u).ln() - 2.0 * (1.0 - qn).ln();
            }
            s
        }
        let p = SeriesPolicy::default();
        let t = tau(0.15, 1.2);
        let z = c(0.3, 0.1);
        let h = 1e-5;
        let d = log_sigma_tau_derivative(z, &t, &p).unwrap().value();
        let tp = TauPoint::new(t.tau() + h).unwrap();
        let tm = TauPoint::new(t.tau() - h).unwrap();
        let fd = (log_sigma(z, &tp) - log_sigma(z, &tm)) / (2.0 * h);
        assert!((d - fd).norm() < 1e-6 * d.norm().max(1.0), "{d} vs {fd}");
    }

    #[test]
    fn poles_are_reported() {
        let p = SeriesPolicy::default();
        let t = tau(0.3, 1.1);
        let z = t.tau() * 2.0 - 1.0;
        assert!(matches!(weierstrass_zeta(z, &t, &p), Err(Error::Singular { .. })));
        assert!(matches!(weierstrass_p_deriv(3, z, &t, &p), Err(Error::Singular { .. })));
    }
}
