use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Multiplier on `ε·Σ|terms|` used as the rounding part of error estimates.
pub(crate) const ROUNDING_FACTOR: f64 = 8.0 * f64::EPSILON;

/// A complex value with an a-posteriori error estimate.
///
/// `err` bounds the discarded series tails plus an estimate of the
/// accumulated rounding, and is propagated through the arithmetic below to
/// first order.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComplexVal {
    pub re: f64,
    pub im: f64,
    pub err: f64,
}

impl ComplexVal {
    pub fn new(value: Complex64, err: f64) -> Self {
        debug_assert!(err >= 0.0 || err.is_nan());
        ComplexVal {
            re: value.re,
            im: value.im,
            err,
        }
    }

    pub fn exact(value: Complex64) -> Self {
        Self::new(value, 0.0)
    }

    pub fn real(x: f64) -> Self {
        Self::new(Complex64::new(x, 0.0), 0.0)
    }

    pub fn zero() -> Self {
        Self::exact(Complex64::new(0.0, 0.0))
    }

    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }

    pub fn abs(&self) -> f64 {
        self.value().norm()
    }

    /// Multiplies by an exact constant.
    pub fn scale(self, c: Complex64) -> Self {
        Self::new(self.value() * c, self.err * c.norm())
    }

    /// Adds the rounding contribution of one more floating operation.
    pub fn with_rounding(self) -> Self {
        let v = self.value();
        Self::new(v, self.err + ROUNDING_FACTOR * v.norm())
    }

    /// `|self − other| ≤ err_self + err_other`.
    pub fn agrees_with(&self, other: &ComplexVal) -> bool {
        (self.value() - other.value()).norm() <= self.err + other.err
    }
}

impl Add for ComplexVal {
    type Output = ComplexVal;
    fn add(self, rhs: ComplexVal) -> ComplexVal {
        ComplexVal::new(self.value() + rhs.value(), self.err + rhs.err).with_rounding()
    }
}

impl Sub for ComplexVal {
    type Output = ComplexVal;
    fn sub(self, rhs: ComplexVal) -> ComplexVal {
        ComplexVal::new(self.value() - rhs.value(), self.err + rhs.err).with_rounding()
    }
}

impl Neg for ComplexVal {
    type Output = ComplexVal;
    fn neg(self) -> ComplexVal {
        ComplexVal::new(-self.value(), self.err)
    }
}

impl Mul for ComplexVal {
    type Output = ComplexVal;
    fn mul(self, rhs: ComplexVal) -> ComplexVal {
        let err = self.abs() * rhs.err + rhs.abs() * self.err + self.err * rhs.err;
        ComplexVal::new(self.value() * rhs.value(), err).with_rounding()
    }
}

impl Add<Complex64> for ComplexVal {
    type Output = ComplexVal;
    fn add(self, rhs: Complex64) -> ComplexVal {
        ComplexVal::new(self.value() + rhs, self.err).with_rounding()
    }
}

impl Sub<Complex64> for ComplexVal {
    type Output = ComplexVal;
    fn sub(self, rhs: Complex64) -> ComplexVal {
        ComplexVal::new(self.value() - rhs, self.err).with_rounding()
    }
}

/// Neumaier-compensated complex accumulator that also tracks `Σ|term|` and
/// the sum of incoming error estimates.
///
/// Terms are added in caller order; results are bit-reproducible for a
/// fixed order.
#[derive(Clone, Copy, Debug, Default)]
pub struct Accumulator {
    sum_re: f64,
    comp_re: f64,
    sum_im: f64,
    comp_im: f64,
    magnitude: f64,
    err: f64,
}

fn neumaier(sum: &mut f64, comp: &mut f64, x: f64) {
    let t = *sum + x;
    if sum.abs() >= x.abs() {
        *comp += (*sum - t) + x;
    } else {
        *comp += (x - t) + *sum;
    }
    *sum = t;
}

impl Accumulator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, z: Complex64) {
        neumaier(&mut self.sum_re, &mut self.comp_re, z.re);
        neumaier(&mut self.sum_im, &mut self.comp_im, z.im);
        self.magnitude += z.norm();
    }

    pub fn add_val(&mut self, v: ComplexVal) {
        self.add(v.value());
        self.err += v.err;
    }

    pub fn sum(&self) -> Complex64 {
        Complex64::new(self.sum_re + self.comp_re, self.sum_im + self.comp_im)
    }

    /// `Σ|term|` so far.
    pub fn magnitude(&self) -> f64 {
        self.magnitude
    }

    /// Finishes with the given truncation bound added to the propagated
    /// error and the rounding estimate.
    pub fn finish(&self, tail: f64) -> ComplexVal {
        ComplexVal::new(
            self.sum(),
            tail + self.err + ROUNDING_FACTOR * self.magnitude,
        )
    }
}
