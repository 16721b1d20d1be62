//! Taylor coefficients of even functions from samples.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};

/// First `count` Taylor coefficients `c_0, c_1, …` of an even function
/// `f(x) = Σ c_j x^{2j}`, from the samples `f(kh)`, `k = 1..=count`.
///
/// Interpolating by an even polynomial of degree `2(count-1)` is the same
/// as repeated Richardson extrapolation of central differences; the point
/// `x = 0` is never evaluated, so removable singularities there are fine.
pub fn even_taylor_coefficients<F>(f: F, h: f64, count: usize) -> Result<Vec<Complex64>>
where
    F: Fn(f64) -> Result<Complex64>,
{
    if count == 0 || !(h > 0.0) {
        return Err(Error::InvalidArgument(
            "need count >= 1 and a positive step".into(),
        ));
    }
    let samples: Vec<Complex64> = (1..=count).map(|k| f(k as f64 * h)).collect::<Result<_>>()?;
    // columns in the scaled variable (x/h)² keep the system well balanced
    let matrix = DMatrix::from_fn(count, count, |row, col| {
        ((row + 1) as f64).powi(2 * col as i32)
    });
    let lu = matrix.lu();
    let solve = |rhs: DVector<f64>| {
        lu.solve(&rhs)
            .ok_or_else(|| Error::InvalidArgument("singular interpolation system".into()))
    };
    let re = solve(DVector::from_iterator(count, samples.iter().map(|z| z.re)))?;
    let im = solve(DVector::from_iterator(count, samples.iter().map(|z| z.im)))?;
    Ok((0..count)
        .map(|j| Complex64::new(re[j], im[j]) / h.powi(2 * j as i32))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_cosine() {
        let c = even_taylor_coefficients(|x| Ok(Complex64::new(x.cos(), 2.0 * x.cos())), 1e-2, 6)
            .unwrap();
        assert!((c[0].re - 1.0).abs() < 1e-12);
        assert!((c[1].re + 0.5).abs() < 1e-9);
        assert!((c[1].im + 1.0).abs() < 1e-9);
        assert!((c[2].re - 1.0 / 24.0).abs() < 1e-5);
    }

    #[test]
    fn removable_singularity() {
        let c = even_taylor_coefficients(|x| Ok(Complex64::new((x.sin() / x).powi(2), 0.0)), 1e-2, 6)
            .unwrap();
        assert!((c[0].re - 1.0).abs() < 1e-12);
        assert!((c[1].re + 1.0 / 3.0).abs() < 1e-8);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(even_taylor_coefficients(|_| Ok(Complex64::new(0.0, 0.0)), 0.0, 3).is_err());
        assert!(even_taylor_coefficients(|_| Ok(Complex64::new(0.0, 0.0)), 0.1, 0).is_err());
    }
}
