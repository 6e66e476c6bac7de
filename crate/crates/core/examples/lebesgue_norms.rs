//! Quadrature Lebesgue norms, the dilation identity and the tail fit.

use std::f64::consts::PI;

use infconv::catalog::sample;
use infconv::norms::{dilation_norm_identity_check, lp_norm, subgaussian_fit};
use infconv::{make_grid, FunctionSpec, PExponent};

pub fn run() -> infconv::Result<()> {
    let grid = make_grid(1, 6.0, 1025)?;
    let g = sample(&FunctionSpec::Gaussian, &grid)?;
    for p in [1.0, 2.0, 4.0] {
        let got = lp_norm(&g, PExponent::finite(p)?).value();
        let exact = (PI / p).powf(1.0 / (2.0 * p));
        println!("‖G‖_{p} = {got:.12}  closed form {exact:.12}");
    }
    println!("‖G‖_inf = {}", lp_norm(&g, PExponent::Infinity));

    let box2 = make_grid(2, 2.0, 129)?;
    let spec = FunctionSpec::TruncatedQuadratic { c: 1.0, radius: 10.0 };
    for lambda in [0.5, 2.0, 3.0] {
        let c = dilation_norm_identity_check(&spec, lambda, PExponent::finite(2.0)?, &box2)?;
        println!("λ={lambda}: ‖T_λ f‖ = {:.10}, λ^(-d/p)‖f‖ = {:.10}, gap {:.1e}", c.lhs, c.rhs, c.rel_gap);
    }

    let q = sample(&FunctionSpec::Quadratic { c: 1.0 }, &grid)?;
    let us: Vec<f64> = (1..=6).map(|k| (k * 5) as f64).collect();
    let tail = subgaussian_fit(&q, 1.0, &us)?;
    println!("tail of x^2: T(u) = {:?}, fitted C = {:?}", tail.tail_values, tail.fitted_c);
    Ok(())
}

fn main() -> infconv::Result<()> {
    run()
}
