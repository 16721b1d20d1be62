//! Verification drivers for every reciprocity law and identity.
//!
//! Each driver returns one [`CheckRecord`] per elementary check, in a fixed
//! parameter order, so that serialized output is byte-for-byte reproducible.

use num_complex::Complex64;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::exact::{dim_data, g_poly, verify_apostol_reciprocity, CoprimePair, Rational};
use crate::identities::{
    basis_rank as rank_of, c_coefficients, reciprocity_singular_values, sample_taus,
    verify_eq64_onedim, verify_eq73, verify_three_term,
};
use crate::qseries::util::{factorial_f64, two_pi_i_pow, TWO_PI_I};
use crate::qseries::{
    eisenstein, eisenstein_tau_derivative, elliptic_bernoulli, kronecker_direct, ComplexVal,
    LatticeCutoff, SeriesPolicy, TauPoint,
};
use crate::symbols::{
    apostol_limit, elliptic_apostol_sum, generating_constant, generating_residual,
    lemma32_spec, machide_coefficient_identities, proposition31_closed_form,
    proposition31_residual, reciprocity_rhs, Route,
};

/// The verification families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    ApostolReciprocity,
    Thm11,
    Thm13,
    Prop31,
    Lemma32,
    Eq73,
    ThreeTerm,
    Eq64,
    BasisRank,
    Limit,
    Kronecker,
}

impl Family {
    pub const ALL: [Family; 11] = [
        Family::ApostolReciprocity,
        Family::Thm11,
        Family::Thm13,
        Family::Prop31,
        Family::Lemma32,
        Family::Eq73,
        Family::ThreeTerm,
        Family::Eq64,
        Family::BasisRank,
        Family::Limit,
        Family::Kronecker,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::ApostolReciprocity => "apostol-reciprocity",
            Family::Thm11 => "thm11",
            Family::Thm13 => "thm13",
            Family::Prop31 => "prop31",
            Family::Lemma32 => "lemma32",
            Family::Eq73 => "eq73",
            Family::ThreeTerm => "three-term",
            Family::Eq64 => "eq64",
            Family::BasisRank => "basis-rank",
            Family::Limit => "limit",
            Family::Kronecker => "kronecker",
        }
    }

    /// Default tolerance of the family; `0` marks exact checks.
    pub fn default_tol(self) -> f64 {
        match self {
            Family::ApostolReciprocity | Family::BasisRank => 0.0,
            Family::Thm11 => 1e-8,
            Family::Thm13 | Family::Prop31 => 1e-8,
            Family::Lemma32 => 1e-7,
            Family::Eq73 | Family::ThreeTerm => 1e-8,
            Family::Eq64 => 1e-7,
            Family::Limit => 1e-6,
            Family::Kronecker => 0.0,
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown check {s:?}")))
    }
}

/// Tolerance used for symbol-axiom checks (periodicity and oddness).
pub const AXIOM_TOL: f64 = 1e-9;
/// Tolerance for the van der Pol case of the Eisenstein identities.
pub const VAN_DER_POL_TOL: f64 = 1e-9;
/// Tolerance for the cusp limit of the reciprocity function.
pub const RECIPROCITY_LIMIT_TOL: f64 = 1e-8;

/// Outcome of one elementary check.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckRecord {
    pub check: String,
    pub params: Map<String, Value>,
    pub residual: Value,
    pub tol: Value,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<Value>,
}

impl CheckRecord {
    fn numeric(check: &str, params: Value, residual: f64, tol: f64, pass: bool) -> Self {
        CheckRecord {
            check: check.to_string(),
            params: to_map(params),
            residual: json!(residual),
            tol: json!(tol),
            pass,
            value: None,
        }
    }

    /// Passes when `residual < tol`.
    fn below(check: &str, params: Value, residual: f64, tol: f64) -> Self {
        Self::numeric(check, params, residual, tol, residual < tol)
    }

    fn with_value(mut self, value: Value) -> Self {
        self.value = Some(value);
        self
    }
}

fn to_map(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        other => {
            let mut m = Map::new();
            m.insert("value".into(), other);
            m
        }
    }
}

fn cval(v: &ComplexVal) -> Value {
    json!({"re": v.re, "im": v.im, "err": v.err})
}

/// Shared numeric settings of a verification run.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VerifyOptions {
    pub policy: SeriesPolicy,
    /// Overrides every family's default tolerance when set.
    pub tol: Option<f64>,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            policy: SeriesPolicy::default(),
            tol: None,
            seed: 7,
        }
    }
}

impl VerifyOptions {
    pub fn tol_for(&self, family: Family) -> f64 {
        self.tol.unwrap_or(family.default_tol())
    }

    fn tol_or(&self, default: f64) -> f64 {
        self.tol.unwrap_or(default)
    }
}

/// One `(n, p, q, τ)` sample for the elliptic sums.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EllipticCase {
    pub n: u32,
    pub p: i64,
    pub q: i64,
    pub tau: TauPoint,
}

fn tau_of(re: f64, im: f64) -> TauPoint {
    TauPoint::from_parts(re, im).expect("fixed sample lies in the upper half-plane")
}

/// The fixed 20-case sample for the elliptic reciprocity law: `n ≤ 3`,
/// `p, q ≤ 7`, `τ` cycling through `i`, `0.3+1.1i`, `1.4i`.
pub fn default_elliptic_cases() -> Vec<EllipticCase> {
    let taus = [tau_of(0.0, 1.0), tau_of(0.3, 1.1), tau_of(0.0, 1.4)];
    let triples: [(u32, i64, i64); 20] = [
        (1, 3, 2),
        (1, 5, 3),
        (1, 7, 2),
        (1, 4, 3),
        (1, 7, 5),
        (1, 2, 1),
        (1, 6, 7),
        (2, 3, 2),
        (2, 5, 3),
        (2, 7, 4),
        (2, 5, 1),
        (2, 6, 5),
        (2, 7, 6),
        (2, 4, 7),
        (3, 3, 2),
        (3, 5, 2),
        (3, 7, 3),
        (3, 4, 1),
        (3, 7, 6),
        (3, 5, 4),
    ];
    triples
        .iter()
        .enumerate()
        .map(|(i, &(n, p, q))| EllipticCase {
            n,
            p,
            q,
            tau: taus[i % taus.len()],
        })
        .collect()
}

fn case_params(c: &EllipticCase) -> Value {
    json!({"n": c.n, "p": c.p, "q": c.q, "tau": c.tau.to_string()})
}

/// Exact Apostol reciprocity for every coprime `1 ≤ p, q ≤ pq_max` and each
/// `w` in `weights`.
pub fn apostol_reciprocity(weights: &[u32], pq_max: i64) -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();
    for &w in weights {
        for p in 1..=pq_max {
            for q in 1..=pq_max {
                let Ok(pair) = CoprimePair::in_u(p, q) else {
                    continue;
                };
                let residual = verify_apostol_reciprocity(w, pair)?;
                out.push(CheckRecord {
                    check: Family::ApostolReciprocity.name().into(),
                    params: to_map(json!({"w": w, "p": p, "q": q})),
                    residual: json!(residual.to_string()),
                    tol: json!(Rational::zero().to_string()),
                    pass: residual.is_zero(),
                    value: None,
                });
            }
        }
    }
    Ok(out)
}

fn d_value(c: &EllipticCase, q: i64, route: Route, policy: &SeriesPolicy) -> Result<ComplexVal> {
    Ok(elliptic_apostol_sum(c.n, CoprimePair::in_v(c.p, q)?, &c.tau, route, policy)?.value)
}

/// Reciprocity, Dedekind-symbol axioms and route agreement for `D⁻₂ₙ`.
///
/// Records per case: `thm11.periodicity`, `thm11.oddness` (tolerance
/// [`AXIOM_TOL`] unless overridden), `thm11.routes` (within the combined
/// error estimate) and, for `q ≥ 1`, `thm11.reciprocity`.
pub fn thm11(cases: &[EllipticCase], opts: &VerifyOptions) -> Result<Vec<CheckRecord>> {
    let policy = &opts.policy;
    let tol = opts.tol_for(Family::Thm11);
    let axiom_tol = opts.tol_or(AXIOM_TOL);
    let mut out = Vec::new();
    for c in cases {
        let params = case_params(c);
        let base = d_value(c, c.q, Route::ZetaDerivative, policy)?;
        let shifted = d_value(c, c.q + c.p, Route::ZetaDerivative, policy)?;
        let negated = d_value(c, -c.q, Route::ZetaDerivative, policy)?;
        let other = d_value(c, c.q, Route::BernoulliProduct, policy)?;

        let per = (base - shifted).abs();
        out.push(CheckRecord::below("thm11.periodicity", params.clone(), per, axiom_tol));
        let odd = (base + negated).abs();
        out.push(CheckRecord::below("thm11.oddness", params.clone(), odd, axiom_tol));
        let diff = (base - other).abs();
        let bound = base.err + other.err;
        out.push(CheckRecord::numeric(
            "thm11.routes",
            params.clone(),
            diff,
            bound,
            diff <= bound,
        ));
        if c.q >= 1 {
            let swapped = elliptic_apostol_sum(
                c.n,
                CoprimePair::in_v(c.q, c.p)?,
                &c.tau,
                Route::ZetaDerivative,
                policy,
            )?
            .value;
            let rhs = reciprocity_rhs(c.n, CoprimePair::in_u(c.p, c.q)?, &c.tau, policy)?;
            let res = (base + swapped - rhs).abs();
            out.push(
                CheckRecord::below("thm11.reciprocity", params, res, tol)
                    .with_value(cval(&(base + swapped))),
            );
        }
    }
    Ok(out)
}

/// Sample points of `x` for the generating-function checks.
pub const DEFAULT_XS: [f64; 3] = [0.003, 0.007, 0.011];

/// `D⁻(p,q;x) + D⁻(q,p;x) - R⁻(p,q;x)` at each `x`: the spread over `x`
/// (`thm13.constancy`) and the distance of each value from
/// `-E_2/((2πi)² pq)` (`thm13.constant`).
pub fn thm13(
    pair: CoprimePair,
    taus: &[TauPoint],
    xs: &[f64],
    opts: &VerifyOptions,
) -> Result<Vec<CheckRecord>> {
    let tol = opts.tol_for(Family::Thm13);
    let mut out = Vec::new();
    for tau in taus {
        let values: Vec<ComplexVal> = xs
            .iter()
            .map(|&x| generating_residual(pair, tau, x, &opts.policy))
            .collect::<Result<_>>()?;
        let params = json!({"p": pair.p, "q": pair.q, "tau": tau.to_string(), "x": xs});
        out.push(CheckRecord::below("thm13.constancy", params, max_spread(&values), tol));
        let constant = generating_constant(pair, tau, &opts.policy)?;
        for (x, v) in xs.iter().zip(&values) {
            let params = json!({"p": pair.p, "q": pair.q, "tau": tau.to_string(), "x": x});
            out.push(
                CheckRecord::below("thm13.constant", params, (*v - constant).abs(), tol)
                    .with_value(cval(v)),
            );
        }
    }
    Ok(out)
}

fn max_spread(values: &[ComplexVal]) -> f64 {
    let mut spread: f64 = 0.0;
    for (i, a) in values.iter().enumerate() {
        for b in &values[i + 1..] {
            spread = spread.max((a.value() - b.value()).norm());
        }
    }
    spread
}

/// Sample points of `s` for the `B_1` double-sum law.
pub const DEFAULT_SS: [f64; 3] = [0.004, 0.009, 0.013];

/// Constancy in `s`, the constant value and the agreement with the `B_2`
/// double-sum closed form for the `B_1` double-sum reciprocity law.
pub fn prop31(
    pair: CoprimePair,
    tau: &TauPoint,
    ss: &[f64],
    opts: &VerifyOptions,
) -> Result<Vec<CheckRecord>> {
    let tol = opts.tol_for(Family::Prop31);
    let values: Vec<ComplexVal> = ss
        .iter()
        .map(|&s| proposition31_residual(pair, s, tau, &opts.policy))
        .collect::<Result<_>>()?;
    let base = json!({"p": pair.p, "q": pair.q, "tau": tau.to_string()});
    let mut out = Vec::new();
    let mut params = base.clone();
    params["s"] = json!(ss);
    out.push(CheckRecord::below("prop31.constancy", params, max_spread(&values), tol));
    let constant = generating_constant(pair, tau, &opts.policy)?;
    let closed = proposition31_closed_form(pair, tau, &opts.policy)?;
    for (s, v) in ss.iter().zip(&values) {
        let mut params = base.clone();
        params["s"] = json!(s);
        out.push(
            CheckRecord::below("prop31.constant", params.clone(), (*v - constant).abs(), tol)
                .with_value(cval(v)),
        );
        let diff = (*v - closed).abs();
        let bound = v.err + closed.err + tol;
        out.push(CheckRecord::numeric("prop31.closed-form", params, diff, bound, diff <= bound));
    }
    Ok(out)
}

/// The three coefficient identities of Machide's reciprocity law at the
/// specialization `a=(1,1), b=(p,p), c=(q,q), x=(s,0), y=(pt,0), z=(-qt,0)`.
pub fn lemma32(
    pairs: &[CoprimePair],
    s: f64,
    t: f64,
    tau: &TauPoint,
    opts: &VerifyOptions,
) -> Result<Vec<CheckRecord>> {
    let tol = opts.tol_for(Family::Lemma32);
    let mut out = Vec::new();
    for pair in pairs {
        let spec = lemma32_spec(*pair, s, t);
        let residuals = machide_coefficient_identities(&spec, tau, &opts.policy)?;
        for (name, r) in ["lemma32.y2/z", "lemma32.z2/y", "lemma32.y"].iter().zip(residuals) {
            let params = json!({"p": pair.p, "q": pair.q, "s": s, "t": t, "tau": tau.to_string()});
            out.push(CheckRecord::below(name, params, r.abs(), tol));
        }
    }
    Ok(out)
}

/// Relative residuals of the Eisenstein identities for every `1 ≤ k ≤ 2n+2`,
/// plus the van der Pol form `2πi ∂E_2/∂τ = -E_2² + 5E_4` at each `τ`.
pub fn eq73(ns: &[u32], taus: &[TauPoint], opts: &VerifyOptions) -> Result<Vec<CheckRecord>> {
    let tol = opts.tol_for(Family::Eq73);
    let mut out = Vec::new();
    for tau in taus {
        for &n in ns {
            for k in 1..=2 * n + 2 {
                let r = verify_eq73(n, k, tau, &opts.policy)?;
                let params = json!({"n": n, "k": k, "tau": tau.to_string()});
                out.push(CheckRecord::below("eq73", params, r.relative(), tol));
            }
        }
        let e2 = eisenstein(1, tau, &opts.policy)?;
        let e4 = eisenstein(2, tau, &opts.policy)?;
        let de2 = eisenstein_tau_derivative(1, tau, &opts.policy)?;
        let lhs = de2.scale(TWO_PI_I);
        let rhs = e4.scale(Complex64::new(5.0, 0.0)) - e2 * e2;
        let rel = (lhs - rhs).abs() / rhs.abs();
        let cv = c_coefficients(1, tau, &opts.policy)?;
        let params = json!({"tau": tau.to_string()});
        out.push(
            CheckRecord::below("eq73.van-der-pol", params, rel, opts.tol_or(VAN_DER_POL_TOL))
                .with_value(cval(&cv.c[1])),
        );
    }
    Ok(out)
}

/// `p T(p+q,q) + q T(p,p+q) - (p+q) T(p,q)`, relative to the size of its
/// terms.
pub fn three_term(cases: &[EllipticCase], opts: &VerifyOptions) -> Result<Vec<CheckRecord>> {
    let tol = opts.tol_for(Family::ThreeTerm);
    cases
        .iter()
        .map(|c| {
            let r = verify_three_term(c.n, CoprimePair::in_u(c.p, c.q)?, &c.tau, &opts.policy)?;
            Ok(CheckRecord::below("three-term", case_params(c), r.relative(), tol))
        })
        .collect()
}

/// One-term spectral expansion of `R⁻_w` for weights without cusp forms.
pub fn eq64(weights: &[u32], taus: &[TauPoint], opts: &VerifyOptions) -> Result<Vec<CheckRecord>> {
    let tol = opts.tol_for(Family::Eq64);
    let mut out = Vec::new();
    for &w in weights {
        for tau in taus {
            let (res, scale) = verify_eq64_onedim(w, tau, &opts.policy)?;
            let params = json!({"w": w, "tau": tau.to_string()});
            out.push(CheckRecord::below("eq64", params, res.max_abs() / scale, tol));
        }
    }
    Ok(out)
}

/// Numerical rank of `{R⁻_w(·,·;τ_i)}` for `num_tau` seeded samples; passes
/// when it equals `min(num_tau, d_w + 1)`.
pub fn basis_rank(weights: &[u32], num_tau: usize, opts: &VerifyOptions) -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();
    for &w in weights {
        let (d, dim) = dim_data(w)?;
        let taus = sample_taus(opts.seed, num_tau);
        let rank = rank_of(w, &taus, &opts.policy)?;
        let sv = reciprocity_singular_values(w, &taus, &opts.policy)?;
        let expected = (dim as usize).min(num_tau);
        let params = json!({"w": w, "num_tau": num_tau, "seed": opts.seed, "d_w": d});
        out.push(CheckRecord {
            check: Family::BasisRank.name().into(),
            params: to_map(params),
            residual: json!(rank as i64 - expected as i64),
            tol: json!(0),
            pass: rank == expected,
            value: Some(json!({"rank": rank, "expected": expected, "singular_values": sv})),
        });
    }
    Ok(out)
}

/// Cusp heights used for the degeneration checks.
pub const DEFAULT_HEIGHTS: [f64; 3] = [10.0, 15.0, 20.0];
/// Heights at which the `e^{-2πt}` approach is still above binary64
/// rounding, used to exhibit the strict decay.
pub const DECAY_HEIGHTS: [f64; 5] = [1.0, 2.0, 3.0, 4.0, 5.0];

/// Degeneration of `D⁻₂ₙ` to Apostol's sum as `τ = it → i∞`.
///
/// Records per case:
/// * `limit.apostol`: residual at the largest height in `heights`.
/// * `limit.monotone`: the residual at the largest height is strictly below
///   the one at the smallest. Beyond `t ≈ 6` both sit at the rounding floor,
///   so the value carries each residual with the rounding bound of `D⁻`.
/// * `limit.decay`: strictly decreasing residuals over [`DECAY_HEIGHTS`].
/// * `limit.reciprocity` (for `q ≥ 1`): `R⁻_{2n}` against
///   `2(2πi)^{2n}/(2n)! · g_{2n}(p,q)`, relative.
pub fn limit(
    cases: &[(u32, i64, i64)],
    heights: &[f64],
    opts: &VerifyOptions,
) -> Result<Vec<CheckRecord>> {
    let tol = opts.tol_for(Family::Limit);
    let mut out = Vec::new();
    let mut sorted = heights.to_vec();
    sorted.sort_by(f64::total_cmp);
    let (Some(&low), Some(&top)) = (sorted.first(), sorted.last()) else {
        return Err(Error::InvalidArgument("no heights given".into()));
    };
    for &(n, p, q) in cases {
        let pair = CoprimePair::in_v(p, q)?;
        let exact = apostol_limit(n, pair)?;
        let residual_at = |t: f64| -> Result<(f64, f64)> {
            let tau = TauPoint::from_parts(0.0, t)?;
            let d = elliptic_apostol_sum(n, pair, &tau, Route::ZetaDerivative, &opts.policy)?;
            Ok(((d.value.value() - exact).norm(), d.value.err))
        };
        let (r_top, e_top) = residual_at(top)?;
        let (r_low, e_low) = residual_at(low)?;

        let params = json!({"n": n, "p": p, "q": q, "t": top});
        out.push(
            CheckRecord::below("limit.apostol", params, r_top, tol)
                .with_value(json!({"re": exact.re, "im": exact.im})),
        );
        let params = json!({"n": n, "p": p, "q": q, "t": [low, top]});
        out.push(
            CheckRecord::numeric("limit.monotone", params, r_top, r_low, r_top < r_low)
                .with_value(json!({"residuals": [r_low, r_top], "rounding": [e_low, e_top]})),
        );
        let decay: Vec<f64> = DECAY_HEIGHTS
            .iter()
            .map(|&t| residual_at(t).map(|r| r.0))
            .collect::<Result<_>>()?;
        let strict = decay.windows(2).all(|w| w[1] < w[0]);
        let params = json!({"n": n, "p": p, "q": q, "t": DECAY_HEIGHTS});
        out.push(
            CheckRecord::numeric("limit.decay", params, decay[decay.len() - 1], decay[0], strict)
                .with_value(json!(decay)),
        );
        if q >= 1 {
            let tau = TauPoint::from_parts(0.0, top)?;
            let r = reciprocity_rhs(n, CoprimePair::in_u(p, q)?, &tau, &opts.policy)?;
            let g = g_poly(2 * n)?.eval(&Rational::from(p), &Rational::from(q)).to_f64();
            let expected = 2.0 * two_pi_i_pow(2 * n as i32) / factorial_f64(2 * n) * g;
            let res = (r.value() - expected).norm() / expected.norm().max(1.0);
            let params = json!({"w": 2 * n, "p": p, "q": q, "t": top});
            out.push(CheckRecord::below(
                "limit.reciprocity",
                params,
                res,
                opts.tol_or(RECIPROCITY_LIMIT_TOL),
            ));
        }
    }
    Ok(out)
}

/// Kronecker's double series by direct lattice summation against the
/// elliptic Bernoulli function: `B_k(x,y) = (-1)^{k-1}k!/(2πi)^k C_k(-x+yτ)`,
/// passing when the difference is within the combined error estimates.
pub fn kronecker(
    ks: &[u32],
    x: f64,
    y: f64,
    tau: &TauPoint,
    radius: u32,
    opts: &VerifyOptions,
) -> Result<Vec<CheckRecord>> {
    let cutoff = LatticeCutoff::new(radius)?;
    let mut out = Vec::new();
    for &k in ks {
        let z = Complex64::new(-x, 0.0) + y * tau.tau();
        let c = kronecker_direct(k, z, tau, cutoff)?;
        let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
        let factor = sign * factorial_f64(k) / two_pi_i_pow(k as i32);
        let from_lattice = c.scale(factor);
        let b = elliptic_bernoulli(k, x, y, tau, &opts.policy)?;
        let diff = (from_lattice - b).abs();
        let bound = from_lattice.err + b.err + opts.tol.unwrap_or(0.0);
        let params = json!({"k": k, "x": x, "y": y, "tau": tau.to_string(), "radius": radius});
        out.push(
            CheckRecord::numeric("kronecker", params, diff, bound, diff <= bound)
                .with_value(cval(&b)),
        );
    }
    Ok(out)
}

/// The acceptance sample of every family with default parameters.
pub fn default_suite(family: Family, opts: &VerifyOptions) -> Result<Vec<CheckRecord>> {
    let i = tau_of(0.0, 1.0);
    match family {
        Family::ApostolReciprocity => apostol_reciprocity(&[2, 4, 6, 8, 10], 30),
        Family::Thm11 => thm11(&default_elliptic_cases(), opts),
        Family::Thm13 => thm13(
            CoprimePair::in_u(3, 2)?,
            &[i, tau_of(0.2, 1.2)],
            &DEFAULT_XS,
            opts,
        ),
        Family::Prop31 => prop31(CoprimePair::in_u(3, 2)?, &i, &DEFAULT_SS, opts),
        Family::Lemma32 => lemma32(
            &[CoprimePair::in_u(3, 2)?, CoprimePair::in_u(5, 3)?],
            0.013,
            0.007,
            &i,
            opts,
        ),
        Family::Eq73 => eq73(&[1, 2, 3, 4], &[i, tau_of(0.3, 1.0)], opts),
        Family::ThreeTerm => {
            let cases: Vec<EllipticCase> = default_elliptic_cases()
                .into_iter()
                .filter(|c| c.q >= 1)
                .collect();
            three_term(&cases, opts)
        }
        Family::Eq64 => eq64(&[2, 4, 6, 8, 12], &[i, tau_of(0.1, 1.1)], opts),
        Family::BasisRank => {
            let mut out = Vec::new();
            for w in (2..=14).step_by(2) {
                let (d, _) = dim_data(w)?;
                out.extend(basis_rank(&[w], d as usize + 3, opts)?);
            }
            Ok(out)
        }
        Family::Limit => limit(&[(1, 3, 1), (1, 5, 3), (2, 5, 2)], &DEFAULT_HEIGHTS, opts),
        Family::Kronecker => kronecker(&[3, 4], 0.25, 0.4, &i, 400, opts),
    }
}

/// Serializes records as JSON lines.
pub fn to_json_lines(records: &[CheckRecord]) -> String {
    let mut s = String::new();
    for r in records {
        s.push_str(&serde_json::to_string(r).expect("records serialize"));
        s.push('\n');
    }
    s
}
