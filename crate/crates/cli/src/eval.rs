use ellded::exact::{
    apostol_sum, bernoulli_function, bernoulli_number, bernoulli_polynomial, g_poly, CoprimePair,
    Rational,
};
use ellded::identities::eisenstein_period_data;
use ellded::qseries::{
    eisenstein, eisenstein_normalized, elliptic_bernoulli, parse_complex, weierstrass_zeta,
    zeta_deriv, SeriesPolicy, TauPoint,
};
use ellded::symbols::{
    elliptic_apostol_sum, generating_constant, generating_d, generating_r, machide_sum,
    reciprocity_rhs, small_x_bound, MachideSpec, Route,
};
use ellded::{Error, Result};
use serde_json::{json, Map, Value};

use crate::args::Command;

fn record(op: &str, params: Value, value: Value) -> Value {
    json!({"op": op, "params": params, "value": value})
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("values serialize")
}

fn pair_of<T: std::str::FromStr>(s: &str, name: &str) -> Result<(T, T)> {
    let bad = || Error::Parse(format!("--{name} expects two comma-separated numbers, got {s:?}"));
    let (a, b) = s.split_once(',').ok_or_else(bad)?;
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

/// Evaluates one of the value subcommands.
pub fn run(cmd: &Command, policy: &SeriesPolicy) -> Result<Value> {
    let out = match cmd {
        Command::Bernoulli { k, x, periodic } => match x {
            None => record("bernoulli", json!({"k": k}), to_value(&bernoulli_number(*k))),
            Some(x) => {
                let xr: Rational = x.parse()?;
                let v = if *periodic {
                    bernoulli_function(*k, &xr)
                } else {
                    bernoulli_polynomial(*k, &xr)
                };
                let params = json!({"k": k, "x": xr, "periodic": periodic});
                record("bernoulli", params, to_value(&v))
            }
        },
        Command::ApostolSum { k, q, p } => {
            let v = apostol_sum(*k, *q, *p)?;
            record("apostol-sum", json!({"k": k, "q": q, "p": p}), to_value(&v))
        }
        Command::GPoly { w } => record("g-poly", json!({"w": w}), to_value(&g_poly(*w)?)),
        Command::Eisenstein { n, tau, normalized } => {
            let t: TauPoint = tau.parse()?;
            let v = if *normalized {
                eisenstein_normalized(*n, &t, policy)?
            } else {
                eisenstein(*n, &t, policy)?
            };
            let params = json!({"n": n, "tau": t, "normalized": normalized});
            record("eisenstein", params, to_value(&v))
        }
        Command::EllipticBernoulli { k, x, y, tau } => {
            let t: TauPoint = tau.parse()?;
            let v = elliptic_bernoulli(*k, *x, *y, &t, policy)?;
            let params = json!({"k": k, "x": x, "y": y, "tau": t});
            record("elliptic-bernoulli", params, to_value(&v))
        }
        Command::ZetaW { z, tau, k } => {
            let t: TauPoint = tau.parse()?;
            let zc = parse_complex(z)?;
            let v = if *k == 0 {
                weierstrass_zeta(zc, &t, policy)?
            } else {
                zeta_deriv(*k, zc, &t, policy)?
            };
            let params = json!({"z": {"re": zc.re, "im": zc.im}, "tau": t, "k": k});
            record("zeta-w", params, to_value(&v))
        }
        Command::EllipticSum { n, p, q, tau, route } => {
            let t: TauPoint = tau.parse()?;
            let route: Route = route.parse()?;
            let r = elliptic_apostol_sum(*n, CoprimePair::in_v(*p, *q)?, &t, route, policy)?;
            let mut rec = record(
                "elliptic-sum",
                json!({"n": n, "p": p, "q": q, "tau": t}),
                to_value(&r.value),
            );
            rec["route"] = to_value(&r.route);
            rec
        }
        Command::ReciprocityRhs { n, p, q, tau } => {
            let t: TauPoint = tau.parse()?;
            let v = reciprocity_rhs(*n, CoprimePair::in_u(*p, *q)?, &t, policy)?;
            record("reciprocity-rhs", json!({"n": n, "p": p, "q": q, "tau": t}), to_value(&v))
        }
        Command::Generating { p, q, tau, x } => {
            let t: TauPoint = tau.parse()?;
            let pair = CoprimePair::in_u(*p, *q)?;
            let bound = small_x_bound(pair);
            if *x == 0.0 || x.abs() >= bound {
                return Err(Error::InvalidArgument(format!(
                    "x must satisfy 0 < |x| < {bound} for this pair"
                )));
            }
            let d_pq = generating_d(pair, &t, *x, policy)?;
            let d_qp = generating_d(CoprimePair::in_v(*q, *p)?, &t, *x, policy)?;
            let r = generating_r(pair, &t, *x, policy)?;
            let constant = generating_constant(pair, &t, policy)?;
            let mut value = Map::new();
            value.insert("d_pq".into(), to_value(&d_pq));
            value.insert("d_qp".into(), to_value(&d_qp));
            value.insert("r".into(), to_value(&r));
            value.insert("residual".into(), to_value(&(d_pq + d_qp - r)));
            value.insert("constant".into(), to_value(&constant));
            record("generating", json!({"p": p, "q": q, "tau": t, "x": x}), Value::Object(value))
        }
        Command::Machide { a, b, c, x, y, z, m, n, tau } => {
            let t: TauPoint = tau.parse()?;
            let spec = MachideSpec {
                a: pair_of(a, "a")?,
                b: pair_of(b, "b")?,
                c: pair_of(c, "c")?,
                x: pair_of(x, "x")?,
                y: pair_of(y, "y")?,
                z: pair_of(z, "z")?,
                m: *m,
                n: *n,
            };
            let v = machide_sum(&spec, &t, policy)?;
            let mut params = to_value(&spec);
            params["tau"] = to_value(&t);
            record("machide", params, to_value(&v))
        }
        Command::PeriodData { n } => {
            let data = eisenstein_period_data(*n, policy)?;
            record("period-data", json!({"n": n}), to_value(&data))
        }
        Command::Verify(_) => unreachable!("verification is dispatched separately"),
    };
    Ok(out)
}
