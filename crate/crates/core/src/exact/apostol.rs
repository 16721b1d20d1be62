use num_integer::Integer;
use serde::Serialize;

use super::bernoulli::{bernoulli_function, bernoulli_number};
use super::{LaurentPoly, Rational};
use crate::error::{Error, Result};

/// A coprime pair `(p, q)` with `p ≥ 1`.
///
/// Pairs built with [`CoprimePair::in_u`] additionally have `q ≥ 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CoprimePair {
    pub p: i64,
    pub q: i64,
}

impl CoprimePair {
    /// Member of `V = {(p,q) ∈ Z⁺×Z : gcd(p,q) = 1}`.
    pub fn in_v(p: i64, q: i64) -> Result<Self> {
        if p < 1 {
            return Err(Error::PairDomain {
                p,
                q,
                reason: "p must be positive",
            });
        }
        let gcd = p.gcd(&q);
        if gcd != 1 {
            return Err(Error::NotCoprime { p, q, gcd });
        }
        Ok(CoprimePair { p, q })
    }

    /// Member of `U = {(p,q) ∈ Z⁺×Z⁺ : gcd(p,q) = 1}`.
    pub fn in_u(p: i64, q: i64) -> Result<Self> {
        let pair = Self::in_v(p, q)?;
        if q < 1 {
            return Err(Error::PairDomain {
                p,
                q,
                reason: "q must be positive",
            });
        }
        Ok(pair)
    }

    pub fn swapped(self) -> Result<Self> {
        Self::in_v(self.q, self.p)
    }

    pub fn in_u_domain(&self) -> bool {
        self.q >= 1
    }
}

/// Apostol's sum `s_k(q,p) = Σ_{μ=1}^{p-1} (μ/p) B̄_k(μq/p)`, by direct
/// summation.
///
/// The weight is taken as the sawtooth `B̄_1(μ/p) = μ/p - 1/2`. For odd `k`
/// this changes nothing, because `Σ_μ B̄_k(μq/p) = 0`; for even `k` it makes
/// the sum vanish identically, as the symmetry `μ → p-μ` then pairs an odd
/// weight with an even Bernoulli function.
pub fn apostol_sum(k: u32, q: i64, p: i64) -> Result<Rational> {
    CoprimePair::in_v(p, q)?;
    if k == 0 {
        return Err(Error::InvalidArgument("apostol_sum needs k >= 1".into()));
    }
    Ok((1..p)
        .map(|mu| {
            let weight = Rational::new(2 * mu - p, 2 * p);
            weight * bernoulli_function(k, &Rational::new(mu * q, p))
        })
        .sum())
}

fn factorial(n: u32) -> Rational {
    Rational::from((1..=n).fold(num_bigint::BigInt::from(1), |acc, k| acc * k))
}

/// Coefficient table shared by `g_w` and the odd period polynomial of the
/// weight `w+2` Eisenstein series:
///
/// `g_w = -(1/pq) { Σ_{j=0}^{w/2+1} w! B_{2j} B_{w+2-2j} / (2 (2j)! (w+2-2j)!) p^{2j} q^{w+2-2j} + B_{w+2}/(2(w+2)) }`.
pub fn g_poly(w: u32) -> Result<LaurentPoly<Rational>> {
    if w < 2 || !w.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "g_w needs an even weight w >= 2, got {w}"
        )));
    }
    let wf = factorial(w);
    let mut poly = LaurentPoly::zero();
    for j in 0..=(w / 2 + 1) {
        let a = 2 * j;
        let b = w + 2 - 2 * j;
        let c = &wf * &bernoulli_number(a) * bernoulli_number(b)
            / (Rational::from(2) * factorial(a) * factorial(b));
        poly.add_term(a as i32 - 1, b as i32 - 1, -c);
    }
    let constant = bernoulli_number(w + 2) / Rational::from(2 * (i64::from(w) + 2));
    poly.add_term(-1, -1, -constant);
    Ok(poly)
}

/// Exact residual of Apostol's reciprocity law
/// `p^w s_{w+1}(q,p) + q^w s_{w+1}(p,q) + 2(w+1) g_w(p,q)`, which must vanish.
pub fn verify_apostol_reciprocity(w: u32, pair: CoprimePair) -> Result<Rational> {
    if !pair.in_u_domain() {
        return Err(Error::PairDomain {
            p: pair.p,
            q: pair.q,
            reason: "reciprocity needs q >= 1",
        });
    }
    let g = g_poly(w)?;
    let (p, q) = (pair.p, pair.q);
    let pr = Rational::from(p);
    let qr = Rational::from(q);
    let lhs = pr.pow(w as i32) * apostol_sum(w + 1, q, p)?
        + qr.pow(w as i32) * apostol_sum(w + 1, p, q)?;
    Ok(lhs + Rational::from(2 * (i64::from(w) + 1)) * g.eval(&pr, &qr))
}

/// `(d_w, dim M_{w+2})` where `d_w = dim S_{w+2}`.
pub fn dim_data(w: u32) -> Result<(u32, u32)> {
    if w < 2 || !w.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "dimension formula needs an even weight w >= 2, got {w}"
        )));
    }
    let base = (w + 2) / 12;
    let d = if w.is_multiple_of(12) { base - 1 } else { base };
    Ok((d, d + 1))
}

/// Number of monomials in `g_w` (and in any reciprocity polynomial of
/// weight `w`): the `w/2 + 2` terms `p^{2j-1} q^{w+1-2j}` plus `1/pq`.
pub fn monomial_support(w: u32) -> Vec<(i32, i32)> {
    let mut s: Vec<(i32, i32)> = (0..=(w as i32 / 2 + 1))
        .map(|j| (2 * j - 1, w as i32 + 1 - 2 * j))
        .collect();
    s.push((-1, -1));
    s.sort();
    s
}


#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn apostol_examples() {
        assert_eq!(apostol_sum(3, 7, 1).unwrap(), Rational::zero());
        assert_eq!(apostol_sum(2, 1, 3).unwrap(), Rational::zero());
        assert_eq!(apostol_sum(3, 1, 3).unwrap(), r(-1, 81));
        assert!(matches!(apostol_sum(3, 2, 4), Err(Error::NotCoprime { gcd: 2, .. })));
    }

    #[test]
    fn classical_dedekind_sum() {
        // s(1,p) relation: s_1(1,p) = Σ (μ/p)((μ/p)) = (p-1)(p-2)/(12p)
        for p in 2..20 {
            assert_eq!(apostol_sum(1, 1, p).unwrap(), r((p - 1) * (p - 2), 12 * p));
        }
    }

    #[test]
    fn g_poly_values() {
        let g = g_poly(2).unwrap();
        assert_eq!(g.eval(&r(3, 1), &r(1, 1)), r(1, 54));
        assert_eq!(g, g.swap());
        for w in (2..=14).step_by(2) {
            let g = g_poly(w).unwrap();
            let c = bernoulli_number(w + 2) / Rational::from(2 * (i64::from(w) + 2));
            assert_eq!(g.coeff(-1, -1), -c);
            assert_eq!(g.support(), monomial_support(w));
        }
        assert!(g_poly(3).is_err());
    }

    #[test]
    fn g_poly_three_term_relation() {
        for w in (2..=20).step_by(2) {
            let g = g_poly(w).unwrap();
            assert!(g.three_term_residual().unwrap().is_zero(), "w={w}");
        }
    }

    #[test]
    fn reciprocity_examples() {
        let pair = CoprimePair::in_u(3, 1).unwrap();
        assert!(verify_apostol_reciprocity(2, pair).unwrap().is_zero());
        let lhs = r(9, 1) * apostol_sum(3, 1, 3).unwrap() + apostol_sum(3, 3, 1).unwrap();
        assert_eq!(lhs, r(-1, 9));
        assert!(verify_apostol_reciprocity(2, CoprimePair::in_u(1, 1).unwrap())
            .unwrap()
            .is_zero());
    }

    #[test]
    fn reciprocity_sweep() {
        for w in (4..=10).step_by(2) {
            for p in 1..=30 {
                for q in 1..=30 {
                    if let Ok(pair) = CoprimePair::in_u(p, q) {
                        assert!(verify_apostol_reciprocity(w, pair).unwrap().is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn dimensions() {
        assert_eq!(dim_data(10).unwrap(), (1, 2));
        assert_eq!(dim_data(12).unwrap(), (0, 1));
        assert_eq!(dim_data(2).unwrap(), (0, 1));
        assert_eq!(dim_data(22).unwrap(), (2, 3));
        assert!(dim_data(5).is_err());
    }

    #[test]
    fn pair_domains() {
        assert!(CoprimePair::in_v(3, -2).is_ok());
        assert!(CoprimePair::in_u(3, -2).is_err());
        assert!(CoprimePair::in_v(0, 1).is_err());
        assert!(CoprimePair::in_v(4, 6).is_err());
    }

    proptest! {
        #[test]
        fn periodic_in_x(k in 1u32..8, n in -40i64..40, d in 1i64..30) {
            let x = Rational::new(n, d);
            prop_assert_eq!(
                bernoulli_function(k, &(&x + &Rational::one())),
                bernoulli_function(k, &x)
            );
        }

        #[test]
        fn even_index_sums_vanish(k in 1u32..6, p in 1i64..40, q in -40i64..40) {
            prop_assume!(p.gcd(&q) == 1);
            prop_assert!(apostol_sum(2 * k, q, p).unwrap().is_zero());
        }

        #[test]
        fn sawtooth_weight_agrees_with_plain_weight_for_odd_k(
            k in 0u32..5, p in 1i64..40, q in -40i64..40
        ) {
            prop_assume!(p.gcd(&q) == 1);
            let k = 2 * k + 1;
            let plain: Rational = (1..p)
                .map(|mu| Rational::new(mu, p) * bernoulli_function(k, &Rational::new(mu * q, p)))
                .sum();
            prop_assert_eq!(apostol_sum(k, q, p).unwrap(), plain);
        }

        #[test]
        fn periodic_in_q(k in 1u32..8, p in 1i64..30, q in -30i64..30) {
            prop_assume!(p.gcd(&q) == 1);
            prop_assert_eq!(apostol_sum(k, q + p, p).unwrap(), apostol_sum(k, q, p).unwrap());
        }
    }
}
