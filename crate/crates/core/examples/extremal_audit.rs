//! Two Gaussians: the symmetric split reaches 2^{1/2}, the real infimal
//! convolution does not, because the infimum escapes to the edge of the box.

use infconv::harness::empirical_k;
use infconv::{make_grid, Engine, FunctionSpec, PExponent};

pub fn run() -> infconv::Result<()> {
    let grid = make_grid(1, 6.0, 1025)?;
    let r = empirical_k(&[FunctionSpec::Gaussian; 2], PExponent::finite(2.0)?, &grid, Engine::BruteForce)?;
    println!("bound       {:.6}", r.bound);
    println!("surrogate   {:.6}", r.surrogate_ratio.unwrap_or(f64::NAN));
    println!("true ratio  {:.6}", r.ratio);
    if let Some(note) = &r.note {
        println!("{note}");
    }
    Ok(())
}

fn main() -> infconv::Result<()> {
    run()
}
