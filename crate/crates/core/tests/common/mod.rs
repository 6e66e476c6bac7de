//! Independent oracles shared by the integration tests. Nothing here calls the
//! engines or norms under test.
#![allow(dead_code)]

use std::f64::consts::PI;

use infconv::FunctionSpec;

/// `‖exp(-|x|^2)‖_p` on `R^d`: `(π/p)^{d/(2p)}`.
pub fn gaussian_norm(p: f64, d: usize) -> f64 {
    (PI / p).powf(d as f64 / (2.0 * p))
}

/// Max-norm Lipschitz bound of a finite catalog entry on `[-L, L]^d`.
pub fn lipschitz(spec: &FunctionSpec, half_width: f64, d: usize) -> f64 {
    let reach = half_width * (d as f64).sqrt();
    match *spec {
        FunctionSpec::Gaussian => (2.0f64).sqrt() * (-0.5f64).exp(),
        FunctionSpec::ScaledGaussian { c } => (2.0 * c).sqrt() * (-0.5f64).exp(),
        FunctionSpec::Quadratic { c } => 2.0 * c * reach,
        FunctionSpec::Tent { radius } => 1.0 / radius,
        FunctionSpec::TruncatedQuadratic { c, radius } => 2.0 * c * radius.min(reach),
        FunctionSpec::IndicatorOrigin => f64::INFINITY,
    }
}

/// Plain sequential min-plus scan on 1-D arrays of odd length `n`, cropped to the box.
pub fn minplus_1d(f: &[f64], g: &[f64]) -> Vec<f64> {
    let n = f.len() as i64;
    let o = (n - 1) / 2;
    (0..n)
        .map(|i| {
            let mut best = f64::INFINITY;
            for j in 0..n {
                let k = i - j + o;
                if (0..n).contains(&k) {
                    best = best.min(f[j as usize] + g[k as usize]);
                }
            }
            best
        })
        .collect()
}

/// Direct Riemann sum `Σ h^d |v|^p` over explicitly enumerated nodes, then the `1/p` root.
pub fn riemann_norm(values: &[f64], cell: f64, p: f64) -> f64 {
    let mut s = 0.0;
    for v in values {
        s += v.abs().powf(p);
    }
    (s * cell).powf(1.0 / p)
}

/// `φ(δ)` for `ψ(p) = p^{1/s}` on `[1, ∞)` from the stationary point
/// `p* = s ln(1/δ)` of `ln δ / p - ln p / s`, clamped to `p >= 1`.
pub fn power_fundamental(s: f64, delta: f64) -> f64 {
    let p_star = (s * (1.0 / delta).ln()).max(1.0);
    delta.powf(1.0 / p_star) / p_star.powf(1.0 / s)
}

/// Dense grid search of `sup_p δ^{1/p} / p^{1/s}` on `[1, p_max]`.
pub fn power_fundamental_dense(s: f64, delta: f64, p_max: f64, points: usize) -> f64 {
    (0..points)
        .map(|i| 1.0 * (p_max / 1.0f64).powf(i as f64 / (points - 1) as f64))
        .map(|p| delta.powf(1.0 / p) / p.powf(1.0 / s))
        .fold(0.0, f64::max)
}

/// Relative difference.
pub fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}
