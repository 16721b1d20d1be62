use std::collections::BTreeMap;
use std::fmt::Debug;

use num_complex::Complex64;
use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};

use super::bernoulli::binomial;
use super::Rational;
use crate::error::{Error, Result};

/// Coefficient ring of a [`LaurentPoly`].
pub trait Coefficient: Clone + Debug + PartialEq {
    fn zero() -> Self;
    fn from_i64(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `self^e`; negative exponents require `self` to be nonzero.
    fn powi(&self, e: i32) -> Self;
    fn to_json(&self) -> serde_json::Value;
}

impl Coefficient for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn from_i64(n: i64) -> Self {
        Rational::from(n)
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn powi(&self, e: i32) -> Self {
        self.pow(e)
    }
    fn to_json(&self) -> serde_json::Value {
        serde_json::Value::String(self.to_string())
    }
}

impl Coefficient for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn from_i64(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn powi(&self, e: i32) -> Self {
        Complex64::powi(self, e)
    }
    fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "re": self.re, "im": self.im })
    }
}

/// Sparse Laurent polynomial in two variables `p`, `q`.
///
/// Keys are exponent pairs `(i, j)` for the monomial `p^i q^j`; negative
/// exponents are allowed. Zero coefficients are never stored, so equality
/// is structural.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentPoly<C: Coefficient> {
    terms: BTreeMap<(i32, i32), C>,
}

impl<C: Coefficient> Default for LaurentPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> LaurentPoly<C> {
    pub fn zero() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(i: i32, j: i32, c: C) -> Self {
        let mut poly = Self::zero();
        poly.add_term(i, j, c);
        poly
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((i32, i32), C)>) -> Self {
        let mut poly = Self::zero();
        for ((i, j), c) in terms {
            poly.add_term(i, j, c);
        }
        poly
    }

    /// Adds `c·p^i q^j`, merging with an existing term.
    pub fn add_term(&mut self, i: i32, j: i32, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&(i, j)) {
            Some(existing) => {
                let sum = existing.add(&c);
                if sum.is_zero() {
                    self.terms.remove(&(i, j));
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert((i, j), c);
            }
        }
    }

    pub fn coeff(&self, i: i32, j: i32) -> C {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in lexicographic `(i, j)` order.
    pub fn terms(&self) -> impl Iterator<Item = ((i32, i32), &C)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    pub fn support(&self) -> Vec<(i32, i32)> {
        self.terms.keys().copied().collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((i, j), c) in other.terms() {
            out.add_term(i, j, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, c.neg())).collect(),
        }
    }

    pub fn scale(&self, s: &C) -> Self {
        Self::from_terms(self.terms().map(|(k, c)| (k, c.mul(s))))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for ((i1, j1), c1) in self.terms() {
            for ((i2, j2), c2) in other.terms() {
                out.add_term(i1 + i2, j1 + j2, c1.mul(c2));
            }
        }
        out
    }

    /// Multiplies by `p^di q^dj`.
    pub fn shift(&self, di: i32, dj: i32) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|((i, j), c)| ((i + di, j + dj), c.clone()))
                .collect(),
        }
    }

    /// `P(q, p)`.
    pub fn swap(&self) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|((i, j), c)| ((*j, *i), c.clone()))
                .collect(),
        }
    }

    pub fn eval(&self, p: &C, q: &C) -> C {
        self.terms()
            .fold(C::zero(), |acc, ((i, j), c)| acc.add(&c.mul(&p.powi(i)).mul(&q.powi(j))))
    }

    /// Smallest exponent of `p` and of `q` over the support.
    pub fn min_exponents(&self) -> Option<(i32, i32)> {
        let i = self.terms.keys().map(|k| k.0).min()?;
        let j = self.terms.keys().map(|k| k.1).min()?;
        Some((i, j))
    }

    /// `P(p+q, q)`. The exponent of `p` must be nonnegative everywhere.
    pub fn substitute_p_plus_q_for_p(&self) -> Result<Self> {
        self.expand_shift(false)
    }

    /// `P(p, p+q)`. The exponent of `q` must be nonnegative everywhere.
    pub fn substitute_p_plus_q_for_q(&self) -> Result<Self> {
        self.expand_shift(true)
    }

    fn expand_shift(&self, second: bool) -> Result<Self> {
        let mut out = Self::zero();
        for ((i, j), c) in self.terms() {
            let (e, other) = if second { (j, i) } else { (i, j) };
            if e < 0 {
                return Err(Error::InvalidArgument(format!(
                    "cannot expand (p+q)^{e} as a Laurent polynomial"
                )));
            }
            for k in 0..=e {
                let b = C::from_i64(
                    i64::try_from(binomial(e as u32, k as u32)).expect("binomial overflows i64"),
                );
                let coeff = c.mul(&b);
                // (p+q)^e = Σ C(e,k) p^k q^{e-k}
                let (pi, qj) = if second {
                    (other + k, e - k)
                } else {
                    (k, other + e - k)
                };
                out.add_term(pi, qj, coeff);
            }
        }
        Ok(out)
    }

    /// Residual of the three-term relation `P(p+q,q) + P(p,p+q) = P(p,q)`
    /// after multiplying through by `pq(p+q)`:
    ///
    /// `p·H(p+q,q) + q·H(p,p+q) − (p+q)·H(p,q)` with `H = pq·P`.
    ///
    /// Exponents below `-1` are rejected because `H` would not be a
    /// polynomial.
    pub fn three_term_residual(&self) -> Result<Self> {
        if let Some((i, j)) = self.min_exponents() {
            if i < -1 || j < -1 {
                return Err(Error::InvalidArgument(
                    "three-term check needs exponents >= -1".into(),
                ));
            }
        }
        let h = self.shift(1, 1);
        let first = h.substitute_p_plus_q_for_p()?.shift(1, 0);
        let second = h.substitute_p_plus_q_for_q()?.shift(0, 1);
        let third = h.shift(1, 0).add(&h.shift(0, 1));
        Ok(first.add(&second).sub(&third))
    }
}

impl LaurentPoly<Rational> {
    pub fn to_complex(&self) -> LaurentPoly<Complex64> {
        LaurentPoly::from_terms(
            self.terms()
                .map(|(k, c)| (k, Complex64::new(c.to_f64(), 0.0))),
        )
    }
}

impl LaurentPoly<Complex64> {
    /// Largest coefficient modulus; zero for the zero polynomial.
    pub fn max_abs(&self) -> f64 {
        self.terms().map(|(_, c)| c.norm()).fold(0.0, f64::max)
    }
}

struct Term<'a, C: Coefficient> {
    i: i32,
    j: i32,
    coeff: &'a C,
}

impl<C: Coefficient> Serialize for Term<'_, C> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Term", 3)?;
        st.serialize_field("i", &self.i)?;
        st.serialize_field("j", &self.j)?;
        st.serialize_field("coeff", &self.coeff.to_json())?;
        st.end()
    }
}

impl<C: Coefficient> Serialize for LaurentPoly<C> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for ((i, j), coeff) in self.terms() {
            seq.serialize_element(&Term { i, j, coeff })?;
        }
        seq.end()
    }
}
