use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{binomial, CoprimePair};
use crate::qseries::util::two_pi_i_pow;
use crate::qseries::{
    eisenstein, eisenstein_tau_derivative, Accumulator, ComplexVal, SeriesPolicy, TauPoint,
};
use crate::symbols::reciprocity_rhs;

/// A residual together with the size of the terms that produced it, so
/// that callers can judge it in absolute or relative terms.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Residual {
    pub residual: ComplexVal,
    pub scale: f64,
}

impl Residual {
    pub fn relative(&self) -> f64 {
        if self.scale > 0.0 {
            self.residual.abs() / self.scale
        } else {
            self.residual.abs()
        }
    }
}

/// Coefficients `c_0..c_{n+1}` of `T⁻₂ₙ(p,q;τ) = Σ_j c_j p^{2j} q^{2n+2-2j}`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CoefficientVector {
    pub n: u32,
    pub c: Vec<ComplexVal>,
    /// Size of the products entering each `c_j` before cancellation.
    pub magnitude: Vec<f64>,
}

impl CoefficientVector {
    /// `Σ_j c_j p^{2j} q^{2n+2-2j}`.
    pub fn eval(&self, p: f64, q: f64) -> ComplexVal {
        let mut acc = Accumulator::new();
        for (j, c) in self.c.iter().enumerate() {
            let mono = p.powi(2 * j as i32) * q.powi(2 * (self.n as i32 + 1 - j as i32));
            acc.add_val(c.scale(Complex64::new(mono, 0.0)));
        }
        acc.finish(0.0)
    }
}

/// `c_0 = c_{n+1} = E_{2n+2}`; `c_1 = c_n = -E_2E_{2n} - (πi/n)∂E_{2n}/∂τ`;
/// otherwise `c_j = -E_{2j}E_{2n+2-2j}`.
///
/// For `n = 1` the monomials `p^{2n}q²` and `p²q^{2n}` coincide, so both
/// derivative contributions land on `c_1 = -E_2² - 2πi ∂E_2/∂τ`.
pub fn c_coefficients(n: u32, tau: &TauPoint, policy: &SeriesPolicy) -> Result<CoefficientVector> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be >= 1".into()));
    }
    let eis: Vec<ComplexVal> = (1..=n + 1)
        .map(|j| eisenstein(j, tau, policy))
        .collect::<Result<_>>()?;
    let e = |k: u32| eis[k as usize - 1];
    let deriv = eisenstein_tau_derivative(n, tau, policy)?;
    let minus_pi_i_over_n = Complex64::new(0.0, -std::f64::consts::PI / f64::from(n));
    let mut c = Vec::with_capacity(n as usize + 2);
    let mut magnitude = Vec::with_capacity(n as usize + 2);
    for j in 0..=n + 1 {
        if j == 0 || j == n + 1 {
            c.push(e(n + 1));
            magnitude.push(e(n + 1).abs());
            continue;
        }
        let mut v = -(e(j) * e(n + 1 - j));
        let mut size = e(j).abs() * e(n + 1 - j).abs();
        for hit in [j == 1, j == n] {
            if hit {
                let d = deriv.scale(minus_pi_i_over_n);
                size += d.abs();
                v = v + d;
            }
        }
        c.push(v);
        magnitude.push(size);
    }
    Ok(CoefficientVector { n, c, magnitude })
}

/// `Σ_{2i≥k-1} C(2i,k-1) c_i + Σ_{2i≤k} C(2n+2-2i, 2n+2-k) c_i - c_{⌊k/2⌋}`,
/// which vanishes for `1 ≤ k ≤ 2n+2`.
pub fn verify_eq73(n: u32, k: u32, tau: &TauPoint, policy: &SeriesPolicy) -> Result<Residual> {
    if n == 0 || k == 0 || k > 2 * n + 2 {
        return Err(Error::InvalidArgument(format!(
            "need n >= 1 and 1 <= k <= 2n+2, got n = {n}, k = {k}"
        )));
    }
    let cv = c_coefficients(n, tau, policy)?;
    Ok(eq73_from_coefficients(&cv, k))
}

pub(crate) fn eq73_from_coefficients(cv: &CoefficientVector, k: u32) -> Residual {
    let n = cv.n;
    let real = |b: num_bigint::BigInt| Complex64::new(num_traits::ToPrimitive::to_f64(&b).unwrap(), 0.0);
    let mut acc = Accumulator::new();
    let mut scale = 0.0;
    for i in 0..=n + 1 {
        let size = cv.magnitude[i as usize];
        if 2 * i + 1 >= k {
            let b = real(binomial(2 * i, k - 1));
            scale += b.re * size;
            acc.add_val(cv.c[i as usize].scale(b));
        }
        if 2 * i <= k {
            let b = real(binomial(2 * n + 2 - 2 * i, 2 * n + 2 - k));
            scale += b.re * size;
            acc.add_val(cv.c[i as usize].scale(b));
        }
    }
    let rhs = cv.c[(k / 2) as usize];
    scale += cv.magnitude[(k / 2) as usize];
    acc.add_val(-rhs);
    Residual {
        residual: acc.finish(0.0),
        scale,
    }
}

/// `T⁻₂ₙ(p,q;τ) = (2πi)² pq R⁻₂ₙ(p,q;τ) - (2n+1)E_{2n+2}(τ)`.
pub fn t_function(n: u32, pair: CoprimePair, tau: &TauPoint, policy: &SeriesPolicy) -> Result<ComplexVal> {
    let r = reciprocity_rhs(n, pair, tau, policy)?;
    let top = eisenstein(n + 1, tau, policy)?;
    Ok(r.scale(two_pi_i_pow(2) * (pair.p * pair.q) as f64)
        - top.scale(Complex64::new(f64::from(2 * n + 1), 0.0)))
}

/// `p T⁻₂ₙ(p+q,q) + q T⁻₂ₙ(p,p+q) - (p+q) T⁻₂ₙ(p,q)`.
pub fn verify_three_term(
    n: u32,
    pair: CoprimePair,
    tau: &TauPoint,
    policy: &SeriesPolicy,
) -> Result<Residual> {
    let CoprimePair { p, q } = CoprimePair::in_u(pair.p, pair.q)?;
    let t1 = t_function(n, CoprimePair::in_u(p + q, q)?, tau, policy)?.scale((p as f64).into());
    let t2 = t_function(n, CoprimePair::in_u(p, p + q)?, tau, policy)?.scale((q as f64).into());
    let t3 = t_function(n, CoprimePair::in_u(p, q)?, tau, policy)?.scale(((p + q) as f64).into());
    Ok(Residual {
        scale: t1.abs() + t2.abs() + t3.abs(),
        residual: t1 + t2 - t3,
    })
}
