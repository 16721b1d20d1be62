use num_complex::Complex64;
use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::CoprimePair;
use crate::qseries::util::TWO_PI_I;
use crate::qseries::{
    eisenstein, elliptic_bernoulli, weierstrass_p_deriv, Accumulator, ComplexVal, SeriesPolicy,
    TauPoint,
};

/// Minimal distance from the excluded integer multiples in the
/// non-degeneracy conditions.
pub const NONDEGENERACY_GAP: f64 = 1e-9;

/// Parameters of Machide's elliptic Dedekind–Rademacher sum `S^τ_{m,n}`.
///
/// Each pair is `(primed, unprimed)`, e.g. `a = (a', a)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct MachideSpec {
    pub a: (i64, i64),
    pub b: (i64, i64),
    pub c: (i64, i64),
    pub x: (f64, f64),
    pub y: (f64, f64),
    pub z: (f64, f64),
    pub m: u32,
    pub n: u32,
}

fn off_multiples(v: f64, g: i64) -> bool {
    let r = v / g as f64;
    (r - r.round()).abs() * g as f64 > NONDEGENERACY_GAP
}

impl MachideSpec {
    /// Checks positivity and `a'z' - c'x' ∉ gcd(a',c')Z`,
    /// `b'z' - c'y' ∉ gcd(b',c')Z`.
    pub fn validate(&self) -> Result<()> {
        for (name, (u, v)) in [("a", self.a), ("b", self.b), ("c", self.c)] {
            if u < 1 || v < 1 {
                return Err(Error::InvalidArgument(format!(
                    "Machide vector {name} must be positive, got ({u}, {v})"
                )));
            }
        }
        let (a1, b1, c1) = (self.a.0, self.b.0, self.c.0);
        let first = a1 as f64 * self.z.0 - c1 as f64 * self.x.0;
        let second = b1 as f64 * self.z.0 - c1 as f64 * self.y.0;
        if !off_multiples(first, a1.gcd(&c1)) || !off_multiples(second, b1.gcd(&c1)) {
            return Err(Error::InvalidArgument(
                "Machide spec violates the non-degeneracy conditions".into(),
            ));
        }
        Ok(())
    }

    pub fn with_degrees(mut self, m: u32, n: u32) -> Self {
        self.m = m;
        self.n = n;
        self
    }

    /// The cyclic relabelling `(a b c; x y z) → (b c a; y z x)`.
    pub fn rotated(&self) -> Self {
        MachideSpec {
            a: self.b,
            b: self.c,
            c: self.a,
            x: self.y,
            y: self.z,
            z: self.x,
            ..*self
        }
    }
}

/// `S^τ_{m,n} = (1/c') Σ_{j mod c, j' mod c'}
///     B_m(a'(j'+z')/c' - x', a(j+z)/c - x; (a'/a)τ)
///   · B_n(b'(j'+z')/c' - y', b(j+z)/c - y; (b'/b)τ)`.
pub fn machide_sum(spec: &MachideSpec, tau: &TauPoint, policy: &SeriesPolicy) -> Result<ComplexVal> {
    spec.validate()?;
    let (a1, a0) = spec.a;
    let (b1, b0) = spec.b;
    let (c1, c0) = spec.c;
    let tau_a = tau.scale(a1 as f64 / a0 as f64)?;
    let tau_b = tau.scale(b1 as f64 / b0 as f64)?;
    let mut acc = Accumulator::new();
    for j in 0..c0 {
        let frac = (j as f64 + spec.z.1) / c0 as f64;
        for jp in 0..c1 {
            let fracp = (jp as f64 + spec.z.0) / c1 as f64;
            let first = elliptic_bernoulli(
                spec.m,
                a1 as f64 * fracp - spec.x.0,
                a0 as f64 * frac - spec.x.1,
                &tau_a,
                policy,
            )?;
            let second = elliptic_bernoulli(
                spec.n,
                b1 as f64 * fracp - spec.y.0,
                b0 as f64 * frac - spec.y.1,
                &tau_b,
                policy,
            )?;
            acc.add_val(first * second);
        }
    }
    Ok(acc.finish(0.0).scale(Complex64::new(1.0 / c1 as f64, 0.0)))
}

/// The specialization `a = (1,1)`, `b = (p,p)`, `c = (q,q)`, `x = (s,0)`,
/// `y = (pt,0)`, `z = (-qt,0)` used to derive the reciprocity law of the
/// generating functions.
pub fn lemma32_spec(pair: CoprimePair, s: f64, t: f64) -> MachideSpec {
    let (p, q) = (pair.p, pair.q);
    MachideSpec {
        a: (1, 1),
        b: (p, p),
        c: (q, q),
        x: (s, 0.0),
        y: (p as f64 * t, 0.0),
        z: (-(q as f64) * t, 0.0),
        m: 0,
        n: 0,
    }
}

/// The three coefficient identities obtained from Machide's reciprocity
/// law (coefficients of `Y²Z⁻¹`, `Z²Y⁻¹` and `Y`), in that order:
///
/// * `-(c/2b) S_{2,0}(bca) + (c/2a) S_{0,2}(cab)`
/// * `(b/2a) S_{2,0}(abc) - (b/2c) S_{0,2}(bca)`
/// * `(a/2b) S_{0,2}(abc) - S_{1,1}(abc) + (b/2a) S_{2,0}(abc) - S_{1,1}(bca)
///    - (c/2b) S_{2,0}(bca) + (c/a) S_{0,2}(cab) - S_{1,1}(cab)`
///
/// where `a, b, c` are the unprimed entries. Each must vanish.
pub fn machide_coefficient_identities(
    base: &MachideSpec,
    tau: &TauPoint,
    policy: &SeriesPolicy,
) -> Result<[ComplexVal; 3]> {
    let abc = *base;
    let bca = abc.rotated();
    let cab = bca.rotated();
    let (a, b, c) = (abc.a.1 as f64, abc.b.1 as f64, abc.c.1 as f64);
    let s = |spec: &MachideSpec, m: u32, n: u32| machide_sum(&spec.with_degrees(m, n), tau, policy);
    let k = |v: f64| Complex64::new(v, 0.0);

    let s20_abc = s(&abc, 2, 0)?;
    let s02_abc = s(&abc, 0, 2)?;
    let s11_abc = s(&abc, 1, 1)?;
    let s20_bca = s(&bca, 2, 0)?;
    let s02_bca = s(&bca, 0, 2)?;
    let s11_bca = s(&bca, 1, 1)?;
    let s02_cab = s(&cab, 0, 2)?;
    let s11_cab = s(&cab, 1, 1)?;

    let first = s20_bca.scale(k(-c / (2.0 * b))) + s02_cab.scale(k(c / (2.0 * a)));
    let second = s20_abc.scale(k(b / (2.0 * a))) - s02_bca.scale(k(b / (2.0 * c)));
    let third = s02_abc.scale(k(a / (2.0 * b))) - s11_abc + s20_abc.scale(k(b / (2.0 * a)))
        - s11_bca
        - s20_bca.scale(k(c / (2.0 * b)))
        + s02_cab.scale(k(c / a))
        - s11_cab;
    Ok([first, second, third])
}

fn check_small(pair: CoprimePair, s: f64) -> Result<()> {
    let bound = 0.5 / pair.p.max(pair.q) as f64;
    if s == 0.0 || s.abs() >= bound {
        return Err(Error::InvalidArgument(format!(
            "s must satisfy 0 < |s| < {bound}, got {s}"
        )));
    }
    Ok(())
}

/// `(1/r) Σ'_{λ,μ mod r} B_1(λ/r - s, μ/r) B_1(kλ/r, kμ/r)`.
fn b1_pair_sum(r: i64, k: i64, s: f64, tau: &TauPoint, policy: &SeriesPolicy) -> Result<ComplexVal> {
    let rf = r as f64;
    let mut acc = Accumulator::new();
    for lambda in 0..r {
        for mu in 0..r {
            if lambda == 0 && mu == 0 {
                continue;
            }
            let first = elliptic_bernoulli(1, lambda as f64 / rf - s, mu as f64 / rf, tau, policy)?;
            let second = elliptic_bernoulli(
                1,
                (k * lambda).rem_euclid(r) as f64 / rf,
                (k * mu).rem_euclid(r) as f64 / rf,
                tau,
                policy,
            )?;
            acc.add_val(first * second);
        }
    }
    Ok(acc.finish(0.0).scale(Complex64::new(1.0 / rf, 0.0)))
}

/// Left side of the `B_1` double-sum reciprocity law minus its four
/// `s`-dependent terms on the right:
///
/// `(1/p)Σ' B_1(λ/p - s, μ/p)B_1(qλ/p, qμ/p) + (1/q)Σ' B_1(λ/q - s, μ/q)B_1(pλ/q, pμ/q)
///   + B_1(ps,0)B_1(qs,0) - (q/2p)B_2(ps,0) - (p/2q)B_2(qs,0)
///   - (2πi pq)⁻¹ ∂_s B_1(s,0)`,
///
/// with `∂_s B_1(s,0;τ) = (℘(s) + E_2)/(2πi)`. The result is independent of
/// `s` and equals `-E_2(τ)/((2πi)² pq)`.
pub fn proposition31_residual(
    pair: CoprimePair,
    s: f64,
    tau: &TauPoint,
    policy: &SeriesPolicy,
) -> Result<ComplexVal> {
    let pair = CoprimePair::in_u(pair.p, pair.q)?;
    check_small(pair, s)?;
    let (p, q) = (pair.p, pair.q);
    let (pf, qf) = (p as f64, q as f64);
    let k = |v: f64| Complex64::new(v, 0.0);
    let lhs = b1_pair_sum(p, q, s, tau, policy)? + b1_pair_sum(q, p, s, tau, policy)?;
    let b1p = elliptic_bernoulli(1, pf * s, 0.0, tau, policy)?;
    let b1q = elliptic_bernoulli(1, qf * s, 0.0, tau, policy)?;
    let b2p = elliptic_bernoulli(2, pf * s, 0.0, tau, policy)?;
    let b2q = elliptic_bernoulli(2, qf * s, 0.0, tau, policy)?;
    let wp = weierstrass_p_deriv(0, Complex64::new(s, 0.0), tau, policy)?;
    let e2 = eisenstein(1, tau, policy)?;
    let deriv = (wp + e2).scale(1.0 / TWO_PI_I);
    let rhs = -(b1p * b1q) + b2p.scale(k(qf / (2.0 * pf))) + b2q.scale(k(pf / (2.0 * qf)))
        + deriv.scale(1.0 / (TWO_PI_I * pf * qf));
    Ok(lhs - rhs)
}

/// `(1/2pq) Σ_{λ,μ mod q} B_2(pλ/q, pμ/q; τ)`, including `λ = μ = 0`
/// where `B_2(0,0;τ)` is its limit along `y = 0`.
pub fn proposition31_closed_form(
    pair: CoprimePair,
    tau: &TauPoint,
    policy: &SeriesPolicy,
) -> Result<ComplexVal> {
    let CoprimePair { p, q } = CoprimePair::in_u(pair.p, pair.q)?;
    let qf = q as f64;
    let mut acc = Accumulator::new();
    for lambda in 0..q {
        for mu in 0..q {
            let x = (p * lambda).rem_euclid(q) as f64 / qf;
            let y = (p * mu).rem_euclid(q) as f64 / qf;
            acc.add_val(elliptic_bernoulli(2, x, y, tau, policy)?);
        }
    }
    Ok(acc
        .finish(0.0)
        .scale(Complex64::new(1.0 / (2.0 * (p * q) as f64), 0.0)))
}
