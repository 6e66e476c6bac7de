//! Analytic function catalog: every entry is nonnegative and evaluable at any point of `R^d`.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::grid::{GridFunction, GridSpec};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FunctionSpec {
    /// `exp(-|x|^2)`
    Gaussian,
    /// `exp(-c |x|^2)`, `c > 0`
    ScaledGaussian { c: f64 },
    /// `c |x|^2`, `c >= 0`
    Quadratic { c: f64 },
    /// `max(0, 1 - |x| / R)`
    Tent { radius: f64 },
    /// `0` at the origin, `+inf` elsewhere: the identity of infimal convolution.
    IndicatorOrigin,
    /// `c |x|^2` on the closed ball of radius `R`, `+inf` outside.
    TruncatedQuadratic { c: f64, radius: f64 },
}

fn norm_sq(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum()
}

impl FunctionSpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |what: &str, v: f64| Err(Error::InvalidArgument(format!("{what} = {v} in {self}")));
        match *self {
            FunctionSpec::ScaledGaussian { c } if !(c.is_finite() && c > 0.0) => bad("c", c),
            FunctionSpec::Quadratic { c } if !(c.is_finite() && c >= 0.0) => bad("c", c),
            FunctionSpec::Tent { radius } if !(radius.is_finite() && radius > 0.0) => bad("R", radius),
            FunctionSpec::TruncatedQuadratic { c, .. } if !(c.is_finite() && c > 0.0) => bad("c", c),
            FunctionSpec::TruncatedQuadratic { radius, .. } if !(radius.is_finite() && radius > 0.0) => {
                bad("R", radius)
            }
            _ => Ok(()),
        }
    }

    /// Value at `x`; `+inf` is returned as `f64::INFINITY`.
    pub fn eval(&self, x: &[f64]) -> f64 {
        match *self {
            FunctionSpec::Gaussian => (-norm_sq(x)).exp(),
            FunctionSpec::ScaledGaussian { c } => (-c * norm_sq(x)).exp(),
            FunctionSpec::Quadratic { c } => c * norm_sq(x),
            FunctionSpec::Tent { radius } => (1.0 - norm_sq(x).sqrt() / radius).max(0.0),
            FunctionSpec::IndicatorOrigin => {
                if x.iter().all(|&v| v == 0.0) {
                    0.0
                } else {
                    f64::INFINITY
                }
            }
            FunctionSpec::TruncatedQuadratic { c, radius } => {
                let r2 = norm_sq(x);
                if r2 <= radius * radius {
                    c * r2
                } else {
                    f64::INFINITY
                }
            }
        }
    }

    /// Whether the function is convex on `R^d`.
    pub fn is_convex(&self) -> bool {
        matches!(
            self,
            FunctionSpec::Quadratic { .. }
                | FunctionSpec::IndicatorOrigin
                | FunctionSpec::TruncatedQuadratic { .. }
        )
    }

    /// The one-dimensional `φ` with `f(x) = Σ_k φ(x_k)`, if `f` has that form.
    pub fn axis_factor(&self) -> Option<FunctionSpec> {
        match self {
            FunctionSpec::Quadratic { .. } | FunctionSpec::IndicatorOrigin => Some(*self),
            _ => None,
        }
    }
}

/// Samples `spec` exactly at every node of `grid`.
pub fn sample(spec: &FunctionSpec, grid: &GridSpec) -> Result<GridFunction> {
    spec.validate()?;
    GridFunction::from_fn(*grid, |x| spec.eval(x))
}

/// The dilation `T_λ f (x) = f(λx)`, evaluated analytically at every node.
pub fn dilate(spec: &FunctionSpec, lambda: f64, grid: &GridSpec) -> Result<GridFunction> {
    if !(lambda.is_finite() && lambda > 0.0) {
        return Err(Error::InvalidArgument(format!("dilation factor {lambda} must be positive")));
    }
    spec.validate()?;
    let mut y = [0.0; crate::grid::MAX_DIM];
    GridFunction::from_fn(*grid, |x| {
        for (yk, xk) in y.iter_mut().zip(x) {
            *yk = lambda * xk;
        }
        spec.eval(&y[..x.len()])
    })
}

impl fmt::Display for FunctionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FunctionSpec::Gaussian => write!(f, "gaussian"),
            FunctionSpec::ScaledGaussian { c } => write!(f, "gaussian:c={c}"),
            FunctionSpec::Quadratic { c } => write!(f, "quadratic:c={c}"),
            FunctionSpec::Tent { radius } => write!(f, "tent:R={radius}"),
            FunctionSpec::IndicatorOrigin => write!(f, "indicator-origin"),
            FunctionSpec::TruncatedQuadratic { c, radius } => {
                write!(f, "trunc-quadratic:c={c},R={radius}")
            }
        }
    }
}

impl Serialize for FunctionSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Splits `name:k=v,k=v` into the name and its key/value pairs.
pub(crate) fn split_params(text: &str) -> Result<(&str, Vec<(&str, &str)>)> {
    let (name, rest) = match text.split_once(':') {
        Some((n, r)) => (n.trim(), Some(r)),
        None => (text.trim(), None),
    };
    let mut params = Vec::new();
    if let Some(rest) = rest {
        for kv in rest.split(',') {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value in {text:?}, got {kv:?}")))?;
            params.push((k.trim(), v.trim()));
        }
    }
    Ok((name, params))
}

pub(crate) fn parse_real(key: &str, v: &str) -> Result<f64> {
    v.parse::<f64>()
        .map_err(|_| Error::Parse(format!("{key}={v:?} is not a decimal real")))
}

fn take(params: &[(&str, &str)], key: &str, text: &str) -> Result<f64> {
    let (_, v) = params
        .iter()
        .find(|(k, _)| *k == key)
        .ok_or_else(|| Error::Parse(format!("missing {key} in {text:?}")))?;
    parse_real(key, v)
}

fn expect_keys(params: &[(&str, &str)], allowed: &[&str], text: &str) -> Result<()> {
    match params.iter().find(|(k, _)| !allowed.contains(k)) {
        Some((k, _)) => Err(Error::Parse(format!("unknown key {k:?} in {text:?}"))),
        None => Ok(()),
    }
}

impl FromStr for FunctionSpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let (name, params) = split_params(text)?;
        let spec = match name {
            "gaussian" => {
                expect_keys(&params, &["c"], text)?;
                if params.is_empty() {
                    FunctionSpec::Gaussian
                } else {
                    FunctionSpec::ScaledGaussian { c: take(&params, "c", text)? }
                }
            }
            "quadratic" => {
                expect_keys(&params, &["c"], text)?;
                FunctionSpec::Quadratic { c: take(&params, "c", text)? }
            }
            "tent" => {
                expect_keys(&params, &["R"], text)?;
                FunctionSpec::Tent { radius: take(&params, "R", text)? }
            }
            "indicator-origin" => {
                expect_keys(&params, &[], text)?;
                FunctionSpec::IndicatorOrigin
            }
            "trunc-quadratic" => {
                expect_keys(&params, &["c", "R"], text)?;
                FunctionSpec::TruncatedQuadratic {
                    c: take(&params, "c", text)?,
                    radius: take(&params, "R", text)?,
                }
            }
            other => return Err(Error::Parse(format!("unknown function {other:?}"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// A catalog entry with one numeric parameter left open, written with `?`
/// in place of the value, e.g. `trunc-quadratic:c=?,R=3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecTemplate(String);

impl SpecTemplate {
    pub fn instantiate(&self, value: f64) -> Result<FunctionSpec> {
        self.0.replacen('?', &value.to_string(), 1).parse()
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl FromStr for SpecTemplate {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        if text.matches('?').count() != 1 {
            return Err(Error::Parse(format!("template {text:?} needs exactly one '?'")));
        }
        let t = SpecTemplate(text.to_string());
        // shape check with a neutral value
        t.instantiate(1.0)?;
        Ok(t)
    }
}

impl fmt::Display for SpecTemplate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::make_grid;

    #[test]
    fn gaussian_is_one_at_origin() {
        let g = make_grid(1, 6.0, 5).unwrap();
        let f = sample(&FunctionSpec::Gaussian, &g).unwrap();
        assert_eq!(f.samples()[g.origin_index()], 1.0);
    }

    #[test]
    fn quadratic_at_three() {
        let g = make_grid(1, 6.0, 5).unwrap();
        let f = sample(&FunctionSpec::Quadratic { c: 1.0 }, &g).unwrap();
        assert_eq!(f.samples()[3], 9.0);
        let d = dilate(&FunctionSpec::Quadratic { c: 1.0 }, 2.0, &g).unwrap();
        assert_eq!(d.samples()[3], 36.0);
    }

    #[test]
    fn indicator_origin_samples() {
        let g = make_grid(1, 6.0, 5).unwrap();
        let f = sample(&FunctionSpec::IndicatorOrigin, &g).unwrap();
        let inf = f64::INFINITY;
        assert_eq!(f.samples(), &[inf, inf, 0.0, inf, inf]);
    }

    #[test]
    fn truncated_quadratic_boundary_is_closed() {
        let s = FunctionSpec::TruncatedQuadratic { c: 2.0, radius: 3.0 };
        assert_eq!(s.eval(&[3.0]), 18.0);
        assert!(s.eval(&[3.0001]).is_infinite());
    }

    #[test]
    fn identity_dilation_is_bitwise_sampling() {
        let g = make_grid(2, 3.0, 11).unwrap();
        for s in ["gaussian", "gaussian:c=2", "tent:R=2", "trunc-quadratic:c=1,R=3", "indicator-origin"] {
            let spec: FunctionSpec = s.parse().unwrap();
            assert_eq!(sample(&spec, &g).unwrap(), dilate(&spec, 1.0, &g).unwrap(), "{s}");
        }
    }

    #[test]
    fn parse_display_round_trip() {
        for s in [
            "gaussian",
            "gaussian:c=2",
            "quadratic:c=1",
            "tent:R=2",
            "indicator-origin",
            "trunc-quadratic:c=1,R=3",
        ] {
            let spec: FunctionSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
    }

    #[test]
    fn parse_rejects_garbage() {
        for s in ["gauss", "quadratic", "quadratic:c=-1", "tent:R=0", "tent:r=2", "gaussian:c=x", "indicator-origin:c=1"] {
            assert!(s.parse::<FunctionSpec>().is_err(), "{s}");
        }
    }

    #[test]
    fn template_instantiation() {
        let t: SpecTemplate = "trunc-quadratic:c=?,R=3".parse().unwrap();
        assert_eq!(
            t.instantiate(0.25).unwrap(),
            FunctionSpec::TruncatedQuadratic { c: 0.25, radius: 3.0 }
        );
        assert!("quadratic:c=1".parse::<SpecTemplate>().is_err());
    }
}
