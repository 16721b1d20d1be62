use num_complex::Complex64;

use super::value::ROUNDING_FACTOR;
use super::weierstrass::lattice_coordinates;
use super::{e, Accumulator, ComplexVal, TauPoint};
use crate::error::{Error, Result};

/// Truncation `max(|m|,|n|) ≤ R` of a direct lattice sum over `mτ+n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LatticeCutoff {
    radius: u32,
}

impl LatticeCutoff {
    pub fn new(radius: u32) -> Result<Self> {
        if radius < 1 {
            return Err(Error::InvalidArgument("lattice radius must be >= 1".into()));
        }
        Ok(LatticeCutoff { radius })
    }

    pub fn radius(&self) -> u32 {
        self.radius
    }
}

/// Kronecker's double series
/// `C_k(z) = Σ'_{w = mτ+n} χ(w z̄)/w^k`, `χ(t) = e^{2πi Im t/Im τ}`,
/// summed over the box `max(|m|,|n|) ≤ R`.
///
/// With `z = -x + yτ` the character is `e(-(mx+ny))`. The error estimate is
/// the change between the half box and the full box plus rounding. At
/// lattice points the character is trivial and the sum is `E_k(τ)`.
pub fn kronecker_direct(
    k: u32,
    z: Complex64,
    tau: &TauPoint,
    cutoff: LatticeCutoff,
) -> Result<ComplexVal> {
    if k < 3 {
        return Err(Error::InvalidArgument(format!(
            "direct lattice sums need k >= 3 for absolute convergence, got {k}"
        )));
    }
    let (xm, ym) = lattice_coordinates(z, tau);
    let (x, y) = (-xm, -ym);
    let t = tau.tau();
    let big = cutoff.radius() as i64;
    let half = big / 2;
    let mut inner = Accumulator::new();
    let mut outer = Accumulator::new();
    for m in -big..=big {
        let row = e(Complex64::new(-(m as f64) * x, 0.0));
        for n in -big..=big {
            if m == 0 && n == 0 {
                continue;
            }
            let w = m as f64 * t + n as f64;
            let term = row * e(Complex64::new(-(n as f64) * y, 0.0)) / w.powu(k);
            if m.abs().max(n.abs()) <= half {
                inner.add(term);
            } else {
                outer.add(term);
            }
        }
    }
    let shell = outer.sum();
    let total = inner.sum() + shell;
    let magnitude = inner.magnitude() + outer.magnitude();
    Ok(ComplexVal::new(total, shell.norm() + ROUNDING_FACTOR * magnitude))
}
