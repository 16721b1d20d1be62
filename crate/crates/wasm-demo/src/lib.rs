//! Browser bindings for three interactive views of the library. Every
//! function returns a JSON string so the page needs no generated glue types.

use ellded::exact::CoprimePair;
use ellded::qseries::{eisenstein, SeriesPolicy, TauPoint};
use ellded::symbols::{apostol_limit, elliptic_apostol_sum, reciprocity_rhs, Route};
use num_complex::Complex64;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn policy() -> SeriesPolicy {
    SeriesPolicy::default()
}

fn js_err(e: ellded::Error) -> JsError {
    JsError::new(&e.to_string())
}

fn cval(v: &ellded::qseries::ComplexVal) -> Value {
    json!({"re": v.re, "im": v.im, "err": v.err})
}

/// `E_{2n}` sampled at `steps + 1` points on the segment from `τ0` to `τ1`.
pub fn eisenstein_path_json(
    n: u32,
    tau0: Complex64,
    tau1: Complex64,
    steps: u32,
) -> ellded::Result<String> {
    let steps = steps.max(1);
    let mut points = Vec::with_capacity(steps as usize + 1);
    for i in 0..=steps {
        let t = tau0 + (tau1 - tau0) * (i as f64 / steps as f64);
        let tau = TauPoint::new(t)?;
        let v = eisenstein(n, &tau, &policy())?;
        points.push(json!({"tau": {"re": t.re, "im": t.im}, "value": cval(&v)}));
    }
    Ok(Value::Array(points).to_string())
}

/// Both sides of the reciprocity law `D⁻(p,q) + D⁻(q,p) = R⁻(p,q)`.
pub fn reciprocity_json(n: u32, p: i64, q: i64, tau: Complex64) -> ellded::Result<String> {
    let tau = TauPoint::new(tau)?;
    let pol = policy();
    let d_pq = elliptic_apostol_sum(n, CoprimePair::in_v(p, q)?, &tau, Route::ZetaDerivative, &pol)?;
    let d_qp = elliptic_apostol_sum(n, CoprimePair::in_v(q, p)?, &tau, Route::ZetaDerivative, &pol)?;
    let r = reciprocity_rhs(n, CoprimePair::in_u(p, q)?, &tau, &pol)?;
    let lhs = d_pq.value + d_qp.value;
    Ok(json!({
        "d_pq": cval(&d_pq.value),
        "d_qp": cval(&d_qp.value),
        "r": cval(&r),
        "residual": (lhs - r).abs(),
        "bound": lhs.err + r.err,
    })
    .to_string())
}

/// `|D⁻_{2n}(p,q;it) - limit|` for `t` spaced evenly in `[t_min, t_max]`.
pub fn degeneration_json(
    n: u32,
    p: i64,
    q: i64,
    t_min: f64,
    t_max: f64,
    steps: u32,
) -> ellded::Result<String> {
    let pair = CoprimePair::in_v(p, q)?;
    let limit = apostol_limit(n, pair)?;
    let steps = steps.max(1);
    let mut points = Vec::with_capacity(steps as usize + 1);
    for i in 0..=steps {
        let t = t_min + (t_max - t_min) * (i as f64 / steps as f64);
        let tau = TauPoint::from_parts(0.0, t)?;
        let d = elliptic_apostol_sum(n, pair, &tau, Route::ZetaDerivative, &policy())?;
        points.push(json!({
            "t": t,
            "residual": (d.value.value() - limit).norm(),
            "err": d.value.err,
        }));
    }
    Ok(json!({"limit": {"re": limit.re, "im": limit.im}, "points": points}).to_string())
}

#[wasm_bindgen]
pub fn eisenstein_path(
    n: u32,
    re0: f64,
    im0: f64,
    re1: f64,
    im1: f64,
    steps: u32,
) -> Result<String, JsError> {
    eisenstein_path_json(n, Complex64::new(re0, im0), Complex64::new(re1, im1), steps).map_err(js_err)
}

#[wasm_bindgen]
pub fn reciprocity(n: u32, p: i32, q: i32, re: f64, im: f64) -> Result<String, JsError> {
    reciprocity_json(n, p as i64, q as i64, Complex64::new(re, im)).map_err(js_err)
}

#[wasm_bindgen]
pub fn degeneration(n: u32, p: i32, q: i32, t_min: f64, t_max: f64, steps: u32) -> Result<String, JsError> {
    degeneration_json(n, p as i64, q as i64, t_min, t_max, steps).map_err(js_err)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_has_requested_points() {
        let s = eisenstein_path_json(2, Complex64::new(-0.5, 1.0), Complex64::new(0.5, 1.0), 4).unwrap();
        let v: Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v.as_array().unwrap().len(), 5);
    }

    #[test]
    fn reciprocity_closes() {
        let v: Value = serde_json::from_str(&reciprocity_json(1, 3, 2, Complex64::new(0.0, 1.0)).unwrap()).unwrap();
        assert!(v["residual"].as_f64().unwrap() < 1e-9);
    }

    #[test]
    fn degeneration_decays() {
        let s = degeneration_json(1, 3, 1, 1.0, 3.0, 2).unwrap();
        let v: Value = serde_json::from_str(&s).unwrap();
        let r: Vec<f64> = v["points"].as_array().unwrap().iter().map(|p| p["residual"].as_f64().unwrap()).collect();
        assert!(r[0] > r[1] && r[1] > r[2]);
    }

    #[test]
    fn domain_errors_surface() {
        assert!(reciprocity_json(1, 4, 2, Complex64::new(0.0, 1.0)).is_err());
        assert!(eisenstein_path_json(2, Complex64::new(0.0, -1.0), Complex64::new(0.0, 1.0), 2).is_err());
    }
}
