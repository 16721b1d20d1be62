use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::periods::reciprocity_polynomial;
use crate::error::{Error, Result};
use crate::exact::monomial_support;
use crate::qseries::{SeriesPolicy, TauPoint};

/// Singular values below this fraction of the largest count as zero.
pub const RANK_THRESHOLD: f64 = 1e-8;

/// `count` points with `Re τ ∈ [-0.4, 0.4]`, `Im τ ∈ [0.8, 1.5]` from a
/// ChaCha stream seeded with `seed`.
pub fn sample_taus(seed: u64, count: usize) -> Vec<TauPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let re = rng.random_range(-0.4..=0.4);
            let im = rng.random_range(0.8..=1.5);
            TauPoint::from_parts(re, im).expect("sampled in the upper half-plane")
        })
        .collect()
}

/// Singular values of the matrix whose rows are the coefficient vectors of
/// `R⁻_w(·,·;τ_i)` over the monomial support, each row scaled to unit norm.
pub fn reciprocity_singular_values(
    w: u32,
    taus: &[TauPoint],
    policy: &SeriesPolicy,
) -> Result<Vec<f64>> {
    if taus.is_empty() {
        return Err(Error::InvalidArgument("need at least one tau".into()));
    }
    let support = monomial_support(w);
    let mut rows = Vec::with_capacity(taus.len());
    for tau in taus {
        let poly = reciprocity_polynomial(w, tau, policy)?;
        let row: Vec<Complex64> = support.iter().map(|&(i, j)| poly.coeff(i, j)).collect();
        let norm = row.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        rows.push(row.into_iter().map(|z| z / norm).collect::<Vec<_>>());
    }
    let matrix = DMatrix::from_fn(rows.len(), support.len(), |r, c| rows[r][c]);
    let mut sv: Vec<f64> = matrix.svd(false, false).singular_values.iter().copied().collect();
    sv.sort_by(|a, b| b.total_cmp(a));
    Ok(sv)
}

/// Numerical rank of `{R⁻_w(·,·;τ_i)}` as Laurent polynomials.
pub fn basis_rank(w: u32, taus: &[TauPoint], policy: &SeriesPolicy) -> Result<usize> {
    let sv = reciprocity_singular_values(w, taus, policy)?;
    let largest = sv.first().copied().unwrap_or(0.0);
    Ok(sv.iter().filter(|&&s| s > RANK_THRESHOLD * largest).count())
}
