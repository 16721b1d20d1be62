use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::One;

use super::Rational;

static BERNOULLI: OnceLock<RwLock<Vec<Rational>>> = OnceLock::new();

/// Binomial coefficient `C(n, k)` as an exact integer; zero when `k > n`.
pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// The `k`-th Bernoulli number with `B₁ = -1/2`.
///
/// Computed from `Σ_{j≤k} C(k+1, j) B_j = 0` and memoized process-wide.
pub fn bernoulli_number(k: u32) -> Rational {
    let table = BERNOULLI.get_or_init(|| RwLock::new(vec![Rational::one()]));
    {
        let read = table.read().expect("bernoulli table poisoned");
        if let Some(b) = read.get(k as usize) {
            return b.clone();
        }
    }
    let mut write = table.write().expect("bernoulli table poisoned");
    while write.len() <= k as usize {
        let m = write.len() as u32;
        let b = if m > 1 && m % 2 == 1 {
            Rational::zero()
        } else {
            let s: Rational = (0..m)
                .map(|j| Rational::from(binomial(m + 1, j)) * &write[j as usize])
                .sum();
            -(s / Rational::from(i64::from(m) + 1))
        };
        write.push(b);
    }
    write[k as usize].clone()
}

/// Bernoulli polynomial `B_k(x) = Σ_j C(k,j) B_j x^{k-j}`, by Horner's rule.
pub fn bernoulli_polynomial(k: u32, x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for j in 0..=k {
        acc = acc * x + Rational::from(binomial(k, j)) * bernoulli_number(j);
    }
    acc
}

/// Periodic Bernoulli function `B̄_k(x) = B_k({x})`.
///
/// At integers `B̄₁` takes the value `0` of its Fourier series rather than
/// `B₁ = -1/2`. Requires `k ≥ 1`.
pub fn bernoulli_function(k: u32, x: &Rational) -> Rational {
    assert!(k >= 1, "the periodic Bernoulli function needs k >= 1");
    let frac = x.fract();
    if k == 1 && frac.is_zero() {
        return Rational::zero();
    }
    bernoulli_polynomial(k, &frac)
}

/// Binary64 image of `B_k`.
pub fn bernoulli_f64(k: u32) -> f64 {
    bernoulli_number(k).to_f64()
}
