use super::Accumulator;

/// `ζ(s)` for real `s > 1` by direct summation of `N` terms plus the
/// midpoint of the integral bracket `[∫_{N+1}^∞, ∫_N^∞] t^{-s} dt` for the
/// tail, with `N` chosen so that half the bracket is below `tol`.
///
/// Returns the value and the half-width of the bracket.
pub fn zeta_real(s: f64, tol: f64) -> (f64, f64) {
    assert!(s > 1.0 && tol > 0.0);
    let n = ((0.5 / tol).powf(1.0 / s).ceil() as u64).max(1);
    zeta_real_with_terms(s, n)
}

/// As [`zeta_real`] with an explicit number of summed terms.
pub fn zeta_real_with_terms(s: f64, n: u64) -> (f64, f64) {
    let mut acc = Accumulator::new();
    for k in (1..=n).rev() {
        acc.add((k as f64).powf(-s).into());
    }
    let nf = n as f64;
    let upper = nf.powf(1.0 - s) / (s - 1.0);
    let lower = (nf + 1.0).powf(1.0 - s) / (s - 1.0);
    (acc.sum().re + (upper + lower) / 2.0, (upper - lower) / 2.0)
}

/// `ζ(2n+1)` to within `tol`.
pub fn zeta_odd(n: u32, tol: f64) -> f64 {
    assert!(n >= 1, "zeta_odd needs n >= 1");
    zeta_real(f64::from(2 * n + 1), tol).0
}
