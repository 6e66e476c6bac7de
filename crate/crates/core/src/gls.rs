//! Generating functions `ψ(p)`, Grand Lebesgue Space norms
//! `‖f‖_Gψ = sup_p ‖f‖_p / ψ(p)`, fundamental functions
//! `φ[Gψ](δ) = sup_p δ^{1/p} / ψ(p)` and `ψ = ν / ζ` factorizations.
//!
//! Every supremum over `p` is taken over finitely many exponents, so the
//! reported norm is a lower bound on the continuum value. Reports carry the
//! exponents used and the maximizer.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::catalog::{parse_real, split_params};
use crate::error::{Error, Result};
use crate::extreal::ExtReal;
use crate::grid::GridFunction;
use crate::norms::{lp_norm, PExponent};

/// Upper end of the default p-sampling when `b = ∞`.
pub const DEFAULT_P_CAP: f64 = 256.0;

/// Upper end of the exponent range searched by the generic fundamental-function maximizer.
pub const FUNDAMENTAL_P_CAP: f64 = 1e6;

const FUNDAMENTAL_GRID: usize = 4001;

#[derive(Debug, Clone, PartialEq)]
pub enum GeneratingFunction {
    /// `p^{1/s}` on `[1, ∞)`.
    Power { s: f64 },
    /// `1` at `p = r`, `+∞` elsewhere; the GLS norm is then the plain `L_r` norm.
    Degenerate { r: f64 },
    /// `1` on `[a, b]` (`b` may be `∞`).
    ConstantOne { a: f64, b: f64 },
    /// `ν(p) / ζ(p)` on the intersection of the two domains.
    Ratio { num: Box<GeneratingFunction>, den: Box<GeneratingFunction> },
    /// Piecewise-linear interpolation of positive values on ascending exponents.
    Tabulated { p_values: Vec<f64>, psi_values: Vec<f64> },
}

impl GeneratingFunction {
    pub fn constant_one() -> Self {
        GeneratingFunction::ConstantOne { a: 1.0, b: f64::INFINITY }
    }

    pub fn ratio(num: GeneratingFunction, den: GeneratingFunction) -> Result<Self> {
        let gf = GeneratingFunction::Ratio { num: Box::new(num), den: Box::new(den) };
        gf.validate()?;
        Ok(gf)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidPsi(msg));
        match self {
            GeneratingFunction::Power { s } if !(s.is_finite() && *s > 0.0) => {
                bad(format!("power exponent s = {s} must be positive"))
            }
            GeneratingFunction::Degenerate { r } if !(r.is_finite() && *r >= 1.0) => {
                bad(format!("degenerate point r = {r} must be finite and >= 1"))
            }
            GeneratingFunction::ConstantOne { a, b } if !(a.is_finite() && *a >= 1.0 && b >= a) => {
                bad(format!("constant-one domain [{a}, {b}] needs 1 <= a <= b"))
            }
            GeneratingFunction::Ratio { num, den } => {
                num.validate()?;
                den.validate()?;
                let (a, b) = self.domain();
                if a > b {
                    return bad("ratio of generating functions with disjoint domains".into());
                }
                Ok(())
            }
            GeneratingFunction::Tabulated { p_values, psi_values } => {
                if p_values.len() < 2 || p_values.len() != psi_values.len() {
                    return bad("tabulated psi needs >= 2 matching (p, psi) pairs".into());
                }
                if p_values[0] < 1.0 || p_values.windows(2).any(|w| w[1] <= w[0] || w[1].is_nan()) {
                    return bad("tabulated exponents must be >= 1 and strictly ascending".into());
                }
                if psi_values.iter().any(|v| !(v.is_finite() && *v > 0.0)) {
                    return bad("tabulated psi values must be finite and positive".into());
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    /// `(a, b)` with `a = inf{p : ψ(p) < ∞}` and `b = sup{p : ψ(p) < ∞}`.
    pub fn domain(&self) -> (f64, f64) {
        match self {
            GeneratingFunction::Power { .. } => (1.0, f64::INFINITY),
            GeneratingFunction::Degenerate { r } => (*r, *r),
            GeneratingFunction::ConstantOne { a, b } => (*a, *b),
            GeneratingFunction::Ratio { num, den } => {
                let (a1, b1) = num.domain();
                let (a2, b2) = den.domain();
                (a1.max(a2), b1.min(b2))
            }
            GeneratingFunction::Tabulated { p_values, .. } => {
                (p_values[0], *p_values.last().expect("validated non-empty"))
            }
        }
    }

    /// Isolated exponents where `ψ` is finite (the points of degenerate parts).
    pub fn atoms(&self) -> Vec<f64> {
        match self {
            GeneratingFunction::Degenerate { r } => vec![*r],
            GeneratingFunction::Ratio { num, den } => {
                let (a, b) = self.domain();
                let mut v: Vec<f64> = num.atoms().into_iter().chain(den.atoms()).collect();
                v.retain(|p| (a..=b).contains(p));
                v.dedup();
                v
            }
            _ => Vec::new(),
        }
    }

    pub fn contains(&self, p: f64) -> bool {
        let (a, b) = self.domain();
        if a == b {
            return p == a;
        }
        a <= p && p <= b
    }

    pub fn eval(&self, p: f64) -> Result<ExtReal> {
        eval_psi(self, p)
    }
}

/// `ψ(p)`, with `+∞` outside the domain.
pub fn eval_psi(gf: &GeneratingFunction, p: f64) -> Result<ExtReal> {
    if p.is_nan() || p < 1.0 {
        return Err(Error::InvalidArgument(format!("exponent p = {p} must be >= 1")));
    }
    let fin = |v: f64| ExtReal::new(v);
    match gf {
        GeneratingFunction::Power { s } => fin(p.powf(1.0 / s)),
        GeneratingFunction::Degenerate { r } => {
            // symbolic variant: exact comparison on the stored point
            if p == *r {
                Ok(ExtReal::new(1.0)?)
            } else {
                Ok(ExtReal::INFINITY)
            }
        }
        GeneratingFunction::ConstantOne { a, b } => {
            if *a <= p && p <= *b {
                fin(1.0)
            } else {
                Ok(ExtReal::INFINITY)
            }
        }
        GeneratingFunction::Ratio { num, den } => {
            let (nv, dv) = (eval_psi(num, p)?, eval_psi(den, p)?);
            match (nv.as_finite(), dv.as_finite()) {
                (Some(n), Some(d)) if d > 0.0 && n > 0.0 => fin(n / d),
                (Some(_), Some(_)) | (None, None) => Err(Error::IndeterminatePsi { p }),
                _ => Ok(ExtReal::INFINITY),
            }
        }
        GeneratingFunction::Tabulated { p_values, psi_values } => {
            let last = p_values.len() - 1;
            if p < p_values[0] || p > p_values[last] {
                return Ok(ExtReal::INFINITY);
            }
            let k = p_values.partition_point(|&q| q <= p);
            if k == 0 || p == p_values[k - 1] {
                return fin(psi_values[k.saturating_sub(1)]);
            }
            let (p0, p1) = (p_values[k - 1], p_values[k]);
            let t = (p - p0) / (p1 - p0);
            fin(psi_values[k - 1] * (1.0 - t) + psi_values[k] * t)
        }
    }
}

fn fmt_real(v: f64) -> String {
    if v.is_infinite() {
        "inf".to_string()
    } else {
        v.to_string()
    }
}

impl fmt::Display for GeneratingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratingFunction::Power { s } => write!(f, "power:s={s}"),
            GeneratingFunction::Degenerate { r } => write!(f, "degenerate:r={r}"),
            GeneratingFunction::ConstantOne { a, b } => {
                write!(f, "one:a={},b={}", fmt_real(*a), fmt_real(*b))
            }
            GeneratingFunction::Ratio { num, den } => write!(f, "ratio:num=({num}),den=({den})"),
            GeneratingFunction::Tabulated { p_values, psi_values } => {
                let join = |v: &[f64]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("|");
                write!(f, "table:p={},psi={}", join(p_values), join(psi_values))
            }
        }
    }
}

impl Serialize for GeneratingFunction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn strip_parens(t: &str) -> &str {
    let t = t.trim();
    t.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(t)
}

fn parse_ratio(body: &str) -> Result<GeneratingFunction> {
    let rest = body
        .strip_prefix("num=")
        .ok_or_else(|| Error::Parse(format!("ratio needs num=…,den=…, got {body:?}")))?;
    let (num, den) = if rest.starts_with('(') {
        let mut depth = 0usize;
        let close = rest
            .char_indices()
            .find(|&(_, c)| {
                match c {
                    '(' => depth += 1,
                    ')' => depth -= 1,
                    _ => {}
                }
                depth == 0
            })
            .map(|(i, _)| i)
            .ok_or_else(|| Error::Parse(format!("unbalanced parentheses in {body:?}")))?;
        let tail = rest[close + 1..]
            .strip_prefix(",den=")
            .ok_or_else(|| Error::Parse(format!("missing den= in {body:?}")))?;
        (&rest[..=close], tail)
    } else {
        let at = rest
            .rfind(",den=")
            .ok_or_else(|| Error::Parse(format!("missing den= in {body:?}")))?;
        (&rest[..at], &rest[at + 5..])
    };
    GeneratingFunction::ratio(strip_parens(num).parse()?, strip_parens(den).parse()?)
}

fn parse_list(key: &str, v: &str) -> Result<Vec<f64>> {
    v.split('|').map(|x| parse_real(key, x.trim())).collect()
}

impl FromStr for GeneratingFunction {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = strip_parens(text);
        if let Some(body) = text.strip_prefix("ratio:") {
            return parse_ratio(body);
        }
        let (name, params) = split_params(text)?;
        let get = |key: &str| params.iter().find(|(k, _)| *k == key).map(|(_, v)| *v);
        let need = |key: &str| {
            get(key).ok_or_else(|| Error::Parse(format!("missing {key} in {text:?}")))
        };
        let allowed: &[&str] = match name {
            "power" => &["s"],
            "degenerate" => &["r"],
            "one" => &["a", "b"],
            "table" => &["p", "psi"],
            other => return Err(Error::Parse(format!("unknown generating function {other:?}"))),
        };
        if let Some((k, _)) = params.iter().find(|(k, _)| !allowed.contains(k)) {
            return Err(Error::Parse(format!("unknown key {k:?} in {text:?}")));
        }
        let gf = match name {
            "power" => GeneratingFunction::Power { s: parse_real("s", need("s")?)? },
            "degenerate" => GeneratingFunction::Degenerate { r: parse_real("r", need("r")?)? },
            "one" => GeneratingFunction::ConstantOne {
                a: get("a").map(|v| parse_real("a", v)).transpose()?.unwrap_or(1.0),
                b: get("b").map(|v| parse_real("b", v)).transpose()?.unwrap_or(f64::INFINITY),
            },
            _ => GeneratingFunction::Tabulated {
                p_values: parse_list("p", need("p")?)?,
                psi_values: parse_list("psi", need("psi")?)?,
            },
        };
        gf.validate()?;
        Ok(gf)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Spacing {
    Linear,
    Log,
}

impl FromStr for Spacing {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "linear" | "lin" => Ok(Spacing::Linear),
            "log" | "logarithmic" => Ok(Spacing::Log),
            other => Err(Error::Parse(format!("unknown spacing {other:?}"))),
        }
    }
}

/// Finite set of exponents standing in for `sup over p ∈ Dom[ψ]`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PSampling {
    pub p_min: f64,
    pub p_max: f64,
    pub count: usize,
    pub spacing: Spacing,
    /// Additional exponents merged into the grid.
    pub extra: Vec<f64>,
}

impl PSampling {
    pub fn new(p_min: f64, p_max: f64, count: usize, spacing: Spacing) -> Result<Self> {
        if !(p_min >= 1.0 && p_max.is_finite() && p_min < p_max) {
            return Err(Error::InvalidSampling(format!(
                "need 1 <= p_min < p_max < inf, got [{p_min}, {p_max}]"
            )));
        }
        if count < 2 {
            return Err(Error::InvalidSampling(format!("count {count} must be >= 2")));
        }
        Ok(PSampling { p_min, p_max, count, spacing, extra: Vec::new() })
    }

    /// Covers `[a, min(b, 256)]`; for a single-point domain the default `[1, 256]`
    /// is returned, since the atom is always evaluated.
    pub fn for_psi(gf: &GeneratingFunction, count: usize, spacing: Spacing) -> Result<Self> {
        let (a, b) = gf.domain();
        let hi = b.min(DEFAULT_P_CAP);
        if a < hi {
            PSampling::new(a, hi, count, spacing)
        } else {
            PSampling::new(1.0, DEFAULT_P_CAP, count, spacing)
        }
    }

    pub fn with_extra(mut self, points: impl IntoIterator<Item = f64>) -> Result<Self> {
        for p in points {
            if p.is_nan() || p < 1.0 || p.is_infinite() {
                return Err(Error::InvalidSampling(format!("extra exponent {p} must be finite and >= 1")));
            }
            self.extra.push(p);
        }
        Ok(self)
    }

    /// Sorted, de-duplicated exponents.
    pub fn points(&self) -> Vec<f64> {
        let last = (self.count - 1) as f64;
        let mut pts: Vec<f64> = (0..self.count)
            .map(|i| {
                let t = i as f64 / last;
                match self.spacing {
                    Spacing::Linear => self.p_min + t * (self.p_max - self.p_min),
                    Spacing::Log => self.p_min * (self.p_max / self.p_min).powf(t),
                }
            })
            .collect();
        pts[0] = self.p_min;
        pts[self.count - 1] = self.p_max;
        pts.extend(&self.extra);
        pts.sort_by(f64::total_cmp);
        pts.dedup();
        pts
    }

    /// Fails if some sampled exponent lies outside `Dom[ψ]`.
    pub fn check_within(&self, gf: &GeneratingFunction) -> Result<()> {
        match self.points().into_iter().find(|&p| !gf.contains(p)) {
            Some(p) => Err(Error::InvalidSampling(format!("p = {p} outside the domain of {gf}"))),
            None => Ok(()),
        }
    }
}

/// Exponents actually evaluated: sampled points inside `Dom[ψ]` plus the atoms of `ψ`.
pub fn effective_points(gf: &GeneratingFunction, sampling: &PSampling) -> Vec<f64> {
    let mut pts: Vec<f64> = sampling.points().into_iter().filter(|&p| gf.contains(p)).collect();
    pts.extend(gf.atoms());
    pts.sort_by(f64::total_cmp);
    pts.dedup();
    pts
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GlsNorm {
    pub value: ExtReal,
    /// Exponent achieving the maximum (first on ties).
    pub argmax_p: f64,
    pub p_values: Vec<f64>,
    /// `‖f‖_p / ψ(p)` at each entry of `p_values`.
    pub ratios: Vec<ExtReal>,
}

/// `max over sampled p of ‖f‖_p / ψ(p)`, using `C / ∞ = 0` off the domain.
pub fn gls_norm(f: &GridFunction, gf: &GeneratingFunction, sampling: &PSampling) -> Result<GlsNorm> {
    let p_values = effective_points(gf, sampling);
    let mut ratios = Vec::with_capacity(p_values.len());
    let mut kept = Vec::with_capacity(p_values.len());
    for &p in &p_values {
        let psi = eval_psi(gf, p)?;
        let Some(psi) = psi.as_finite() else { continue };
        let norm = lp_norm(f, PExponent::finite(p)?);
        ratios.push(if norm.is_infinite() {
            ExtReal::INFINITY
        } else {
            ExtReal::new(norm.value() / psi)?
        });
        kept.push(p);
    }
    let (best, &value) = ratios
        .iter()
        .enumerate()
        .rev()
        .max_by(|a, b| a.1.cmp(b.1))
        .ok_or(Error::EmptyDomain)?;
    Ok(GlsNorm { value, argmax_p: kept[best], p_values: kept, ratios })
}

/// `φ[Gψ](δ) = sup_p δ^{1/p} / ψ(p)`.
///
/// Closed forms for `Degenerate` and `ConstantOne`; otherwise `ln δ / p - ln ψ(p)`
/// is maximized over a log-spaced grid on `[a, min(b, 1e6)]` and refined by
/// golden-section search around the best grid point.
pub fn fundamental_function(gf: &GeneratingFunction, delta: f64) -> Result<f64> {
    if delta.is_nan() || delta < 0.0 || delta.is_infinite() {
        return Err(Error::InvalidArgument(format!("delta = {delta} must be finite and >= 0")));
    }
    if delta == 0.0 {
        return Ok(0.0);
    }
    match gf {
        GeneratingFunction::Degenerate { r } => Ok(delta.powf(1.0 / r)),
        GeneratingFunction::ConstantOne { a, b } => Ok(if delta >= 1.0 {
            delta.powf(1.0 / a)
        } else {
            delta.powf(1.0 / b)
        }),
        _ => fundamental_numeric(gf, delta),
    }
}

/// The generic maximizer, exposed so closed forms can be checked against it.
pub fn fundamental_numeric(gf: &GeneratingFunction, delta: f64) -> Result<f64> {
    if delta == 0.0 {
        return Ok(0.0);
    }
    let ln_delta = delta.ln();
    let objective = |p: f64| -> Result<f64> {
        Ok(match eval_psi(gf, p)?.as_finite() {
            Some(psi) => ln_delta / p - psi.ln(),
            None => f64::NEG_INFINITY,
        })
    };
    let (a, b) = gf.domain();
    let mut best = f64::NEG_INFINITY;
    for p in gf.atoms() {
        best = best.max(objective(p)?);
    }
    let hi = b.min(FUNDAMENTAL_P_CAP);
    if a < hi {
        let (la, lb) = (a.ln(), hi.ln());
        let step = (lb - la) / (FUNDAMENTAL_GRID - 1) as f64;
        let at = |i: usize| if i == FUNDAMENTAL_GRID - 1 { hi } else { (la + step * i as f64).exp() };
        let mut best_i = 0;
        let mut best_grid = f64::NEG_INFINITY;
        for i in 0..FUNDAMENTAL_GRID {
            let v = objective(at(i))?;
            if v > best_grid {
                best_grid = v;
                best_i = i;
            }
        }
        best = best.max(best_grid);
        // golden-section in ln p on the bracket around the best grid node
        let mut lo = at(best_i.saturating_sub(1)).ln();
        let mut up = at((best_i + 1).min(FUNDAMENTAL_GRID - 1)).ln();
        let g = (5f64.sqrt() - 1.0) / 2.0;
        let mut x1 = up - g * (up - lo);
        let mut x2 = lo + g * (up - lo);
        let mut f1 = objective(x1.exp())?;
        let mut f2 = objective(x2.exp())?;
        for _ in 0..200 {
            if up - lo < 1e-15 {
                break;
            }
            if f1 < f2 {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + g * (up - lo);
                f2 = objective(x2.exp())?;
            } else {
                up = x2;
                x2 = x1;
                f2 = f1;
                x1 = up - g * (up - lo);
                f1 = objective(x1.exp())?;
            }
        }
        best = best.max(f1).max(f2);
    }
    if best == f64::NEG_INFINITY {
        return Err(Error::EmptyDomain);
    }
    Ok(best.exp())
}

/// How to split `ψ` as `ν / ζ`.
#[derive(Debug, Clone, PartialEq)]
pub enum Factorization {
    /// `ν = ψ`, `ζ = 1`.
    Trivial,
    Given { nu: GeneratingFunction, zeta: GeneratingFunction },
}

/// Returns `(ν, ζ)` with `ν(p) / ζ(p) = ψ(p)` on probe exponents.
pub fn factor(
    gf: &GeneratingFunction,
    strategy: &Factorization,
) -> Result<(GeneratingFunction, GeneratingFunction)> {
    gf.validate()?;
    let (a, b) = gf.domain();
    match strategy {
        Factorization::Trivial => Ok((gf.clone(), GeneratingFunction::ConstantOne { a, b })),
        Factorization::Given { nu, zeta } => {
            nu.validate()?;
            zeta.validate()?;
            for part in [nu, zeta] {
                let (pa, pb) = part.domain();
                if pa > a || pb < b {
                    return Err(Error::NotAFactorization { p: if pa > a { a } else { b } });
                }
            }
            let mut probes: Vec<f64> = vec![1.0, 2.0, 4.0, 8.0];
            let hi = b.min(64.0);
            if a < hi {
                probes.extend((0..16).map(|i| a * (hi / a).powf(i as f64 / 15.0)));
            }
            probes.push(a);
            probes.extend(gf.atoms());
            probes.retain(|&p| gf.contains(p));
            for p in probes {
                let psi = eval_psi(gf, p)?.value();
                let (n, z) = (eval_psi(nu, p)?, eval_psi(zeta, p)?);
                let ok = match (n.as_finite(), z.as_finite()) {
                    (Some(n), Some(z)) => (n / z - psi).abs() <= 1e-12 * psi,
                    _ => false,
                };
                if !ok {
                    return Err(Error::NotAFactorization { p });
                }
            }
            Ok((nu.clone(), zeta.clone()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{sample, FunctionSpec};
    use crate::grid::make_grid;

    fn gf(s: &str) -> GeneratingFunction {
        s.parse().unwrap()
    }

    #[test]
    fn evaluations() {
        assert_eq!(eval_psi(&gf("power:s=2"), 4.0).unwrap().value(), 2.0);
        let d = gf("degenerate:r=3");
        assert_eq!(eval_psi(&d, 3.0).unwrap().value(), 1.0);
        assert!(eval_psi(&d, 2.0).unwrap().is_infinite());
        assert_eq!(eval_psi(&gf("ratio:num=power:s=1,den=one"), 5.0).unwrap().value(), 5.0);
        assert!(eval_psi(&gf("one:a=2,b=3"), 4.0).unwrap().is_infinite());
        assert!(eval_psi(&gf("power:s=1"), 0.5).is_err());
    }

    #[test]
    fn indeterminate_ratio() {
        let r = GeneratingFunction::ratio(gf("degenerate:r=2"), gf("degenerate:r=2")).unwrap();
        assert_eq!(eval_psi(&r, 2.0).unwrap().value(), 1.0);
        assert_eq!(eval_psi(&r, 3.0), Err(Error::IndeterminatePsi { p: 3.0 }));
    }

    #[test]
    fn tabulated_interpolates() {
        let t = gf("table:p=1|3,psi=1|2");
        assert_eq!(eval_psi(&t, 2.0).unwrap().value(), 1.5);
        assert_eq!(eval_psi(&t, 3.0).unwrap().value(), 2.0);
        assert!(eval_psi(&t, 3.5).unwrap().is_infinite());
        assert!("table:p=2|1,psi=1|1".parse::<GeneratingFunction>().is_err());
        assert!("table:p=1|2,psi=1|0".parse::<GeneratingFunction>().is_err());
    }

    #[test]
    fn parse_forms() {
        for (text, want) in [
            ("power:s=2", GeneratingFunction::Power { s: 2.0 }),
            ("degenerate:r=3", GeneratingFunction::Degenerate { r: 3.0 }),
            ("one:a=1,b=inf", GeneratingFunction::constant_one()),
            ("one", GeneratingFunction::constant_one()),
        ] {
            assert_eq!(gf(text), want);
            assert_eq!(gf(&want.to_string()), want);
        }
        let r = gf("ratio:num=power:s=1,den=one:a=1,b=inf");
        assert_eq!(gf(&r.to_string()), r);
        let nested = gf("ratio:num=(ratio:num=power:s=1,den=power:s=2),den=(one:a=1,b=inf)");
        assert_eq!(gf(&nested.to_string()), nested);
        for bad in ["power", "power:s=0", "degenerate:r=0.5", "one:a=3,b=2", "cosh:s=1", "power:t=1"] {
            assert!(bad.parse::<GeneratingFunction>().is_err(), "{bad}");
        }
    }

    #[test]
    fn sampling_points() {
        let s = PSampling::new(1.0, 64.0, 7, Spacing::Log).unwrap();
        let pts = s.points();
        assert_eq!(pts.len(), 7);
        for (p, want) in pts.iter().zip([1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0]) {
            assert!((p - want).abs() < 1e-12);
        }
        assert!(PSampling::new(2.0, 2.0, 3, Spacing::Linear).is_err());
        assert!(PSampling::new(0.5, 2.0, 3, Spacing::Linear).is_err());
        assert!(PSampling::new(1.0, 2.0, 1, Spacing::Linear).is_err());
        let lin = PSampling::new(1.0, 3.0, 3, Spacing::Linear).unwrap();
        assert_eq!(lin.points(), vec![1.0, 2.0, 3.0]);
        assert!(lin.check_within(&gf("one:a=1,b=2")).is_err());
        assert!(lin.check_within(&gf("power:s=2")).is_ok());
    }

    #[test]
    fn degenerate_norm_is_lebesgue_norm() {
        let g = make_grid(1, 6.0, 257).unwrap();
        let f = sample(&FunctionSpec::Tent { radius: 3.0 }, &g).unwrap();
        let s = PSampling::new(1.0, 8.0, 5, Spacing::Log).unwrap();
        let n = gls_norm(&f, &gf("degenerate:r=3"), &s).unwrap();
        assert_eq!(n.value, lp_norm(&f, PExponent::Finite(3.0)));
        assert_eq!(n.p_values, vec![3.0]);
    }

    #[test]
    fn zero_function_and_empty_domain() {
        let g = make_grid(1, 6.0, 33).unwrap();
        let z = GridFunction::zeros(g);
        let s = PSampling::new(1.0, 8.0, 5, Spacing::Log).unwrap();
        assert_eq!(gls_norm(&z, &gf("power:s=2"), &s).unwrap().value, ExtReal::ZERO);
        assert_eq!(gls_norm(&z, &gf("one:a=10,b=20"), &s), Err(Error::EmptyDomain));
    }

    #[test]
    fn fundamental_closed_forms() {
        let v = fundamental_function(&gf("degenerate:r=2"), 8.0).unwrap();
        assert!((v - 2.8284271247461903).abs() < 1e-15);
        assert_eq!(fundamental_function(&GeneratingFunction::constant_one(), 9.0).unwrap(), 9.0);
        assert_eq!(fundamental_function(&gf("power:s=1"), 0.0).unwrap(), 0.0);
        assert!(fundamental_function(&gf("power:s=1"), -1.0).is_err());
        let e = fundamental_function(&gf("power:s=1"), (-1f64).exp()).unwrap();
        assert!((e - (-1f64).exp()).abs() < 1e-9, "{e}");
    }

    #[test]
    fn numeric_agrees_with_constant_one_closed_form() {
        let one = gf("one:a=1,b=50");
        for delta in [0.01, 0.5, 1.0, 3.0, 100.0] {
            let closed = fundamental_function(&one, delta).unwrap();
            let numeric = fundamental_numeric(&one, delta).unwrap();
            assert!((closed - numeric).abs() <= 1e-12 * closed, "{delta}: {closed} {numeric}");
        }
    }

    #[test]
    fn factorizations() {
        let psi = gf("power:s=2");
        let (nu, zeta) = factor(&psi, &Factorization::Trivial).unwrap();
        assert_eq!(nu, psi);
        assert_eq!(zeta, GeneratingFunction::constant_one());
        let given = Factorization::Given { nu: gf("power:s=1"), zeta: gf("power:s=2") };
        assert!(factor(&psi, &given).is_ok());
        let wrong = Factorization::Given { nu: gf("power:s=1"), zeta: gf("power:s=3") };
        assert!(matches!(factor(&psi, &wrong), Err(Error::NotAFactorization { .. })));
        let narrow = Factorization::Given { nu: gf("one:a=1,b=10"), zeta: gf("one:a=1,b=10") };
        assert!(factor(&gf("one"), &narrow).is_err());
    }
}
