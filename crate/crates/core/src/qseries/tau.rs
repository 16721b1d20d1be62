use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Below this `Im τ` evaluators warn and raise the term cap.
pub const WARN_IM_TAU: f64 = 0.11;

/// A point of the upper half-plane with its nome `q = e^{2πiτ}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TauPoint {
    tau: Complex64,
    nome: Complex64,
}

impl TauPoint {
    pub fn new(tau: Complex64) -> Result<Self> {
        if !(tau.im > 0.0) || !tau.re.is_finite() || !tau.im.is_finite() {
            return Err(Error::NotInUpperHalfPlane {
                re: tau.re,
                im: tau.im,
            });
        }
        let nome = e(tau);
        Ok(TauPoint { tau, nome })
    }

    pub fn from_parts(re: f64, im: f64) -> Result<Self> {
        Self::new(Complex64::new(re, im))
    }

    pub fn tau(&self) -> Complex64 {
        self.tau
    }

    pub fn nome(&self) -> Complex64 {
        self.nome
    }

    pub fn im(&self) -> f64 {
        self.tau.im
    }

    /// `|q| = e^{-2π Im τ}`.
    pub fn nome_abs(&self) -> f64 {
        (-2.0 * PI * self.tau.im).exp()
    }

    pub fn translate(&self, shift: f64) -> Self {
        TauPoint::new(self.tau + shift).expect("translation keeps Im tau")
    }

    pub fn scale(&self, factor: f64) -> Result<Self> {
        TauPoint::new(self.tau * factor)
    }
}

/// `e(z) = exp(2πiz)`.
pub fn e(z: Complex64) -> Complex64 {
    (Complex64::new(0.0, 2.0 * PI) * z).exp()
}

impl fmt::Display for TauPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.tau.im.is_sign_negative() {
            write!(f, "{}{}i", self.tau.re, self.tau.im)
        } else {
            write!(f, "{}+{}i", self.tau.re, self.tau.im)
        }
    }
}

impl Serialize for TauPoint {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Parses `"a+bi"`, `"a-bi"`, `"bi"` or a bare real `"a"`.
pub fn parse_complex(s: &str) -> Result<Complex64> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || Error::Parse(format!("not a complex number of the form a+bi: {s:?}"));
    if t.is_empty() {
        return Err(bad());
    }
    let Some(body) = t.strip_suffix('i') else {
        return t.parse::<f64>().map(|re| Complex64::new(re, 0.0)).map_err(|_| bad());
    };
    // split at the last sign that is not a leading sign or part of an exponent
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => "1",
        "-" => "-1",
        other => other,
    };
    let re: f64 = re.parse().map_err(|_| bad())?;
    let im: f64 = im.trim_start_matches('+').parse().map_err(|_| bad())?;
    Ok(Complex64::new(re, im))
}

impl FromStr for TauPoint {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        TauPoint::new(parse_complex(s)?)
    }
}

/// Truncation contract for every series and lattice sum.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SeriesPolicy {
    /// Relative tolerance for discarded tails.
    pub tol: f64,
    /// Cap on the number of terms of any single series.
    pub max_terms: usize,
    /// `Im τ` below this value is rejected.
    pub min_im_tau: f64,
}

impl Default for SeriesPolicy {
    fn default() -> Self {
        SeriesPolicy {
            tol: 1e-12,
            max_terms: 1_000_000,
            min_im_tau: 0.05,
        }
    }
}

impl SeriesPolicy {
    pub fn with_tol(tol: f64) -> Result<Self> {
        Self {
            tol,
            ..Self::default()
        }
        .validated()
    }

    pub fn validated(self) -> Result<Self> {
        if !(self.tol > 0.0) {
            return Err(Error::InvalidArgument(format!("tol must be > 0, got {}", self.tol)));
        }
        if self.max_terms < 1 {
            return Err(Error::InvalidArgument("max_terms must be >= 1".into()));
        }
        Ok(self)
    }

    /// Term cap for series in nome `τ`, after the slow-nome checks.
    pub(crate) fn term_cap(&self, tau: &TauPoint) -> Result<usize> {
        if tau.im() < self.min_im_tau {
            return Err(Error::SlowNome {
                im: tau.im(),
                min: self.min_im_tau,
            });
        }
        if tau.im() < WARN_IM_TAU {
            log::warn!(
                "Im(tau) = {} is small; q-series converge slowly (|q| = {:.3})",
                tau.im(),
                tau.nome_abs()
            );
            return Ok(self.max_terms.saturating_mul(10));
        }
        Ok(self.max_terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_forms() {
        assert_eq!(parse_complex("0.3+1.1i").unwrap(), Complex64::new(0.3, 1.1));
        assert_eq!(parse_complex("0+40i").unwrap(), Complex64::new(0.0, 40.0));
        assert_eq!(parse_complex("-0.2-1.5i").unwrap(), Complex64::new(-0.2, -1.5));
        assert_eq!(parse_complex("1.2i").unwrap(), Complex64::new(0.0, 1.2));
        assert_eq!(parse_complex("i").unwrap(), Complex64::new(0.0, 1.0));
        assert_eq!(parse_complex("1e-3+2E+1i").unwrap(), Complex64::new(1e-3, 20.0));
        assert_eq!(parse_complex(" 2 ").unwrap(), Complex64::new(2.0, 0.0));
        assert!(parse_complex("1+").is_err());
        assert!(parse_complex("abc").is_err());
    }

    #[test]
    fn rejects_lower_half_plane() {
        assert!("0.3-1i".parse::<TauPoint>().is_err());
        assert!("2".parse::<TauPoint>().is_err());
        let t: TauPoint = "0+1i".parse().unwrap();
        assert!((t.nome().re - (-2.0 * PI).exp()).abs() < 1e-18);
        assert!(t.nome_abs() < 1.0);
    }

    #[test]
    fn slow_nome_regime() {
        let policy = SeriesPolicy::default();
        assert!(policy.term_cap(&TauPoint::from_parts(0.0, 0.01).unwrap()).is_err());
        assert_eq!(
            policy.term_cap(&TauPoint::from_parts(0.0, 0.08).unwrap()).unwrap(),
            10 * policy.max_terms
        );
        assert_eq!(
            policy.term_cap(&TauPoint::from_parts(0.0, 1.0).unwrap()).unwrap(),
            policy.max_terms
        );
        assert!(SeriesPolicy::with_tol(0.0).is_err());
    }
}
