use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{apostol_sum, CoprimePair};
use crate::qseries::util::{factorial_f64, two_pi_i_pow, TWO_PI_I};
use crate::qseries::{
    e, eisenstein, eisenstein_tau_derivative, elliptic_bernoulli, weierstrass_zeta, zeta_deriv,
    Accumulator, ComplexVal, SeriesPolicy, TauPoint,
};

/// Evaluation strategy for `D⁻₂ₙ(p,q;τ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    /// The defining double sum with `ζ^{(2n)} = -℘^{(2n-1)}` and the
    /// bracket `ζ(qz) - E_2 qz + 2πi qμ/p`.
    ZetaDerivative,
    /// `Σ E_{2n+1}(z)·E_1(qz)` with both factors written through elliptic
    /// Bernoulli functions: `E_1(qz) = -2πi B_1(qλ/p, -qμ/p)`, and
    /// `E_{2n+1}` at `p`-division points as a finite Fourier transform of
    /// `B_{2n+1}(-a/p, -b/p)`.
    BernoulliProduct,
}

impl Route {
    pub const ALL: [Route; 2] = [Route::ZetaDerivative, Route::BernoulliProduct];

    pub fn name(self) -> &'static str {
        match self {
            Route::ZetaDerivative => "zeta_derivative",
            Route::BernoulliProduct => "bernoulli_product",
        }
    }
}

impl std::str::FromStr for Route {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().replace('-', "_").as_str() {
            "zeta_derivative" | "zeta" => Ok(Route::ZetaDerivative),
            "bernoulli_product" | "bernoulli" => Ok(Route::BernoulliProduct),
            other => Err(Error::Parse(format!("unknown route {other:?}"))),
        }
    }
}

/// `D⁻₂ₙ(p,q;τ)` together with the inputs that produced it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EllipticSumResult {
    pub value: ComplexVal,
    pub route: Route,
    pub p: i64,
    pub q: i64,
    pub n: u32,
    pub tau: TauPoint,
}

fn check_n(n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be >= 1".into()));
    }
    Ok(())
}

/// `E_1(w) = ζ(w) - E_2 w + 2πi y` at `w = qz`, `z = (λ+μτ)/p`, where
/// `y = qμ/p` is the `τ`-coordinate of `w`.
fn e1_at_multiple(
    q: i64,
    p: i64,
    lambda: i64,
    mu: i64,
    tau: &TauPoint,
    e2: ComplexVal,
    policy: &SeriesPolicy,
) -> Result<ComplexVal> {
    let w = (q as f64) * (lambda as f64 + mu as f64 * tau.tau()) / p as f64;
    let zeta = weierstrass_zeta(w, tau, policy)?;
    Ok(zeta - e2.scale(w) + TWO_PI_I * (q * mu) as f64 / p as f64)
}

/// The elliptic Apostol–Dedekind sum
///
/// `D⁻₂ₙ(p,q;τ) = 1/((2πi)² p (2n)!) Σ'_{λ,μ mod p} ζ^{(2n)}((λ+μτ)/p)
///     · [ζ(q(λ+μτ)/p) - E_2 q(λ+μτ)/p + 2πi qμ/p]`.
pub fn elliptic_apostol_sum(
    n: u32,
    pair: CoprimePair,
    tau: &TauPoint,
    route: Route,
    policy: &SeriesPolicy,
) -> Result<EllipticSumResult> {
    check_n(n)?;
    let CoprimePair { p, q } = CoprimePair::in_v(pair.p, pair.q)?;
    let value = match route {
        Route::ZetaDerivative => zeta_route(n, p, q, tau, policy)?,
        Route::BernoulliProduct => bernoulli_route(n, p, q, tau, policy)?,
    };
    Ok(EllipticSumResult {
        value,
        route,
        p,
        q,
        n,
        tau: *tau,
    })
}

fn zeta_route(n: u32, p: i64, q: i64, tau: &TauPoint, policy: &SeriesPolicy) -> Result<ComplexVal> {
    if p == 1 {
        return Ok(ComplexVal::zero());
    }
    let e2 = eisenstein(1, tau, policy)?;
    let mut acc = Accumulator::new();
    for lambda in 0..p {
        for mu in 0..p {
            if lambda == 0 && mu == 0 {
                continue;
            }
            let z = (lambda as f64 + mu as f64 * tau.tau()) / p as f64;
            let dz = zeta_deriv(2 * n, z, tau, policy)?;
            let bracket = e1_at_multiple(q, p, lambda, mu, tau, e2, policy)?;
            acc.add_val(dz * bracket);
        }
    }
    let pref = 1.0 / (two_pi_i_pow(2) * p as f64 * factorial_f64(2 * n));
    Ok(acc.finish(0.0).scale(pref))
}

/// `E_{2n+1}((λ+μτ)/p)` for all `λ, μ mod p`, indexed `[λ][μ]`.
///
/// Splitting `Σ_γ (γ+z)^{-k}` by residue classes mod `pL` gives
/// `E_k(z) = p^{k-2} Σ_{(a,b) mod p} e(-(aμ+bλ)/p) Σ'_{γ=mτ+n} e((am+bn)/p) γ^{-k}`.
/// The inner sum is Kronecker's double series with that character, equal to
/// `(2πi)^k/k! · B_k(-a/p,-b/p;τ)` for odd `k`; for `(a,b) = (0,0)` it is
/// the odd Eisenstein series and vanishes.
fn odd_division_values(
    k: u32,
    p: i64,
    tau: &TauPoint,
    policy: &SeriesPolicy,
) -> Result<Vec<Vec<ComplexVal>>> {
    debug_assert!(k % 2 == 1 && k >= 3);
    let pf = p as f64;
    let scale = pf.powi(k as i32 - 2) * two_pi_i_pow(k as i32) / factorial_f64(k);
    let mut coeffs = vec![vec![ComplexVal::zero(); p as usize]; p as usize];
    for a in 0..p {
        for b in 0..p {
            if a == 0 && b == 0 {
                continue;
            }
            let v = elliptic_bernoulli(k, -(a as f64) / pf, -(b as f64) / pf, tau, policy)?;
            coeffs[a as usize][b as usize] = v.scale(scale);
        }
    }
    let mut out = vec![vec![ComplexVal::zero(); p as usize]; p as usize];
    for lambda in 0..p {
        for mu in 0..p {
            let mut acc = Accumulator::new();
            for a in 0..p {
                for b in 0..p {
                    if a == 0 && b == 0 {
                        continue;
                    }
                    let phase = ((a * mu + b * lambda) % p) as f64 / pf;
                    let c = e(Complex64::new(-phase, 0.0));
                    acc.add_val(coeffs[a as usize][b as usize].scale(c));
                }
            }
            out[lambda as usize][mu as usize] = acc.finish(0.0);
        }
    }
    Ok(out)
}

fn bernoulli_route(
    n: u32,
    p: i64,
    q: i64,
    tau: &TauPoint,
    policy: &SeriesPolicy,
) -> Result<ComplexVal> {
    if p == 1 {
        return Ok(ComplexVal::zero());
    }
    let pf = p as f64;
    let odd = odd_division_values(2 * n + 1, p, tau, policy)?;
    let mut acc = Accumulator::new();
    for lambda in 0..p {
        for mu in 0..p {
            if lambda == 0 && mu == 0 {
                continue;
            }
            let x = ((q * lambda).rem_euclid(p)) as f64 / pf;
            let y = -((q * mu).rem_euclid(p) as f64) / pf;
            let b1 = elliptic_bernoulli(1, x, y, tau, policy)?.scale(-TWO_PI_I);
            acc.add_val(odd[lambda as usize][mu as usize] * b1);
        }
    }
    Ok(acc.finish(0.0).scale(1.0 / (two_pi_i_pow(2) * pf)))
}

/// `R⁻₂ₙ(p,q;τ) = -1/((2πi)² pq) [Σ_{j=1}^{n} E_{2j}E_{2n+2-2j} p^{2j} q^{2n+2-2j}
///     - E_{2n+2}(p^{2n+2} + q^{2n+2}) - (2n+1)E_{2n+2}]
///     - (1/(4πi n)) ∂E_{2n}/∂τ (p^{2n-1}q + pq^{2n-1})`.
pub fn reciprocity_rhs(
    n: u32,
    pair: CoprimePair,
    tau: &TauPoint,
    policy: &SeriesPolicy,
) -> Result<ComplexVal> {
    check_n(n)?;
    let CoprimePair { p, q } = CoprimePair::in_u(pair.p, pair.q)?;
    let (pf, qf) = (p as f64, q as f64);
    // The monomials amplify truncation error of the Eisenstein values.
    let gain = (pf.powi(2 * n as i32 + 2) + qf.powi(2 * n as i32 + 2)) / (pf * qf);
    let policy = &SeriesPolicy {
        tol: policy.tol / gain.max(1.0),
        ..*policy
    };
    let eis: Vec<ComplexVal> = (1..=n + 1)
        .map(|j| eisenstein(j, tau, policy))
        .collect::<Result<_>>()?;
    let top = eis[n as usize];
    let mut acc = Accumulator::new();
    for j in 1..=n {
        let term = eis[j as usize - 1] * eis[(n - j) as usize];
        let mono = pf.powi(2 * j as i32) * qf.powi((2 * n + 2 - 2 * j) as i32);
        acc.add_val(term.scale(Complex64::new(mono, 0.0)));
    }
    let last = pf.powi(2 * n as i32 + 2) + qf.powi(2 * n as i32 + 2) + f64::from(2 * n + 1);
    acc.add_val(top.scale(Complex64::new(-last, 0.0)));
    let bracket = acc.finish(0.0).scale(-1.0 / (two_pi_i_pow(2) * pf * qf));

    let de = eisenstein_tau_derivative(n, tau, policy)?;
    let mono = pf.powi(2 * n as i32 - 1) * qf + pf * qf.powi(2 * n as i32 - 1);
    let deriv = de.scale(-mono / (2.0 * TWO_PI_I * f64::from(n)));
    Ok(bracket + deriv)
}

/// The `τ → i∞` limit `-(2πi)^{2n}/(2n+1)! · p^{2n} s_{2n+1}(q,p)`.
pub fn apostol_limit(n: u32, pair: CoprimePair) -> Result<Complex64> {
    check_n(n)?;
    let s = apostol_sum(2 * n + 1, pair.q, pair.p)?;
    let pn = (pair.p as f64).powi(2 * n as i32);
    let s = s.to_f64();
    Ok(-two_pi_i_pow(2 * n as i32) / factorial_f64(2 * n + 1) * pn * s)
}
