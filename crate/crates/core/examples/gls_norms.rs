//! Grand Lebesgue Space norms over a sampled exponent range.

use infconv::catalog::sample;
use infconv::gls::gls_norm;
use infconv::norms::lp_norm;
use infconv::{make_grid, FunctionSpec, GeneratingFunction, PExponent, PSampling, Spacing};

pub fn run() -> infconv::Result<()> {
    let grid = make_grid(1, 6.0, 513)?;
    let f = sample(&FunctionSpec::Tent { radius: 2.0 }, &grid)?;
    let sampling = PSampling::new(1.0, 64.0, 33, Spacing::Log)?;

    for text in ["power:s=2", "power:s=0.5", "one:a=2,b=8", "ratio:num=power:s=1,den=power:s=2"] {
        let psi: GeneratingFunction = text.parse()?;
        let n = gls_norm(&f, &psi, &sampling)?;
        println!("{psi:<40} ‖f‖ = {:.6} at p = {:.3}", n.value.value(), n.argmax_p);
    }

    // a degenerate ψ gives back the plain L_r norm
    let n = gls_norm(&f, &GeneratingFunction::Degenerate { r: 3.0 }, &sampling)?;
    println!("degenerate r=3: {} vs ‖f‖_3 = {}", n.value, lp_norm(&f, PExponent::finite(3.0)?));
    Ok(())
}

fn main() -> infconv::Result<()> {
    run()
}
