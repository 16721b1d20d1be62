use std::f64::consts::PI;

use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::exact::{bernoulli_f64, binomial};

/// `(2πi)^k` with the phase applied exactly.
pub fn two_pi_i_pow(k: i32) -> Complex64 {
    let mag = (2.0 * PI).powi(k);
    match k.rem_euclid(4) {
        0 => Complex64::new(mag, 0.0),
        1 => Complex64::new(0.0, mag),
        2 => Complex64::new(-mag, 0.0),
        _ => Complex64::new(0.0, -mag),
    }
}

pub const TWO_PI_I: Complex64 = Complex64::new(0.0, 2.0 * PI);

pub fn factorial_f64(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}

/// Bound on `Σ_{j≥0} t_j` when `t_0 ≤ first` and `t_{j+1}/t_j ≤ ratio`.
pub fn geometric_tail(first: f64, ratio: f64) -> Option<f64> {
    (ratio < 1.0).then(|| first / (1.0 - ratio))
}

/// `B_m(y)` in binary64.
pub fn bernoulli_poly_f64(m: u32, y: f64) -> f64 {
    (0..=m).fold(0.0, |acc, j| {
        acc * y + binomial(m, j).to_f64().unwrap() * bernoulli_f64(j)
    })
}

/// Eulerian numbers `A(s, i)`, `i = 0..s-1`.
pub fn eulerian_row(s: u32) -> Vec<f64> {
    let mut row = vec![1.0];
    for n in 2..=s.max(1) {
        let prev = row.clone();
        row = (0..n as usize)
            .map(|i| {
                let a = if i < prev.len() { (i as f64 + 1.0) * prev[i] } else { 0.0 };
                let b = if i >= 1 { (n as f64 - i as f64) * prev[i - 1] } else { 0.0 };
                a + b
            })
            .collect();
    }
    row
}

/// `Li_{-s}(v) = Σ_{m≥1} m^s v^m = v·A_s(v)/(1-v)^{s+1}` as a rational
/// function, together with the magnitude `Σ A(s,i)|v|^{i+1}/|1-v|^{s+1}`
/// that bounds rounding.
pub fn polylog_neg(eulerian: &[f64], v: Complex64) -> (Complex64, f64) {
    let s = eulerian.len() as i32;
    let mut poly = Complex64::new(0.0, 0.0);
    let mut mag = 0.0;
    let av = v.norm();
    for &a in eulerian.iter().rev() {
        poly = poly * v + a;
        mag = mag * av + a;
    }
    let denom = (Complex64::new(1.0, 0.0) - v).powi(s + 1);
    let dn = denom.norm();
    (v * poly / denom, av * mag / dn)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn powers_of_two_pi_i() {
        for k in -3..8 {
            let direct = TWO_PI_I.powi(k);
            assert!((two_pi_i_pow(k) - direct).norm() <= 1e-13 * direct.norm());
        }
    }

    #[test]
    fn eulerian_rows() {
        assert_eq!(eulerian_row(1), vec![1.0]);
        assert_eq!(eulerian_row(3), vec![1.0, 4.0, 1.0]);
        assert_eq!(eulerian_row(4), vec![1.0, 11.0, 11.0, 1.0]);
        let total: f64 = eulerian_row(7).iter().sum();
        assert_eq!(total, 5040.0);
    }

    #[test]
    fn polylog_matches_series() {
        let v = Complex64::new(0.3, -0.4);
        for s in 1..6u32 {
            let (closed, _) = polylog_neg(&eulerian_row(s), v);
            let mut series = Complex64::new(0.0, 0.0);
            let mut vp = v;
            for m in 1..400 {
                series += (m as f64).powi(s as i32) * vp;
                vp *= v;
            }
            assert!((closed - series).norm() < 1e-12 * series.norm().max(1.0), "s={s}");
        }
    }

    #[test]
    fn bernoulli_poly_values() {
        assert!((bernoulli_poly_f64(2, 0.5) + 1.0 / 12.0).abs() < 1e-16);
        assert!((bernoulli_poly_f64(3, 1.0 / 3.0) - 1.0 / 27.0).abs() < 1e-16);
        assert_eq!(bernoulli_poly_f64(0, 0.7), 1.0);
    }
}
