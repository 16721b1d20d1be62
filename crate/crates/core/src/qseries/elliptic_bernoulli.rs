use num_complex::Complex64;

use super::util::{bernoulli_poly_f64, geometric_tail};
use super::{e, Accumulator, ComplexVal, SeriesPolicy, TauPoint};
use crate::error::{Error, Result};

/// Distance below which a coordinate is treated as an integer.
pub const SNAP: f64 = 1e-13;

fn is_near_integer(x: f64) -> bool {
    (x - x.round()).abs() < SNAP
}

/// Reduces `y` into `[0,1)`, snapping values within [`SNAP`] of an integer
/// to `0`.
pub fn reduce_unit(y: f64) -> f64 {
    let r = y - y.floor();
    if !(SNAP..=1.0 - SNAP).contains(&r) {
        0.0
    } else {
        r
    }
}

/// Elliptic Bernoulli function `B_m(x,y;τ)` from its nome expansion
///
/// `B_m = m[Σ_j (y-j)^{m-1} e(-yτ)q^j/(e(-x) - e(-yτ)q^j)
///        - Σ_j (y+j)^{m-1} e(yτ)q^j/(e(x) - e(yτ)q^j)
///        + y^{m-1} e(-x+yτ)/(e(-x+yτ) - 1)] + B_m(y)`
///
/// with `y` reduced into `[0,1)` first, so every term decays like
/// `|q|^{j-y}`. `B_0 = 1`.
///
/// At lattice points (`x`, `y` both integral) the closing term is singular
/// only for `m = 1`; for `m ≥ 2` it carries the factor `y^{m-1} = 0` and is
/// dropped, which gives the continuous limit along `y = 0`.
pub fn elliptic_bernoulli(
    m: u32,
    x: f64,
    y: f64,
    tau: &TauPoint,
    policy: &SeriesPolicy,
) -> Result<ComplexVal> {
    if m == 0 {
        return Ok(ComplexVal::real(1.0));
    }
    if !x.is_finite() || !y.is_finite() {
        return Err(Error::InvalidArgument(format!("non-finite argument ({x}, {y})")));
    }
    let cap = policy.term_cap(tau)?;
    let y = reduce_unit(y);
    let t = tau.tau();
    let r = tau.nome_abs();
    let mf = f64::from(m);
    let pow = (m - 1) as i32;
    let one = Complex64::new(1.0, 0.0);

    let mut acc = Accumulator::new();
    let closing = bernoulli_poly_f64(m, y);
    acc.add(Complex64::new(closing, 0.0));

    if y == 0.0 && is_near_integer(x) {
        if m == 1 {
            return Err(Error::Singular { re: x, im: y });
        }
    } else if m == 1 || y != 0.0 {
        let w = e(Complex64::new(-x, 0.0) + y * t);
        acc.add(mf * y.powi(pow) * w / (w - one));
    }

    let ex = e(Complex64::new(x, 0.0));
    let emx = one / ex;
    for j in 1..=cap {
        let jf = j as f64;
        let a = e((jf - y) * t);
        let b = e((jf + y) * t);
        acc.add(mf * (y - jf).powi(pow) * a / (emx - a));
        acc.add(-mf * (y + jf).powi(pow) * b / (ex - b));

        // next pair is bounded by 2m(j+2)^{m-1} ρ/(1-ρ) with ρ = |q|^{j+1-y}
        let next = jf + 1.0;
        let rho = r.powf(next - y);
        let first = 2.0 * mf * (next + 1.0).powi(pow) * rho / (1.0 - rho);
        let ratio = ((next + 2.0) / (next + 1.0)).powi(pow) * r / (1.0 - rho);
        if let Some(tail) = geometric_tail(first, ratio) {
            if tail <= policy.tol * acc.magnitude() {
                return Ok(acc.finish(tail));
            }
        }
    }
    Err(Error::NonConvergence {
        terms: cap,
        partial: acc.finish(f64::INFINITY),
    })
}
