//! Linear-time infimal convolution of discretely convex 1-D sequences,
//! timed against the brute-force engine.

use std::time::Instant;

use infconv::catalog::sample;
use infconv::infconv::{infconv_convex_fast_1d, infconv_pair, ConvexSequence};
use infconv::{make_grid, FunctionSpec};

pub fn run_with(n: usize) -> infconv::Result<f64> {
    let grid = make_grid(1, 6.0, n)?;
    let f = sample(&FunctionSpec::Quadratic { c: 1.0 }, &grid)?;
    let g = sample(&FunctionSpec::TruncatedQuadratic { c: 3.0, radius: 10.0 }, &grid)?;
    let (cf, cg) = (ConvexSequence::from_grid_function(&f)?, ConvexSequence::from_grid_function(&g)?);

    let t = Instant::now();
    let fast = infconv_convex_fast_1d(&cf, &cg)?.to_grid_function();
    let t_fast = t.elapsed().as_secs_f64();
    let t = Instant::now();
    let brute = infconv_pair(&f, &g)?;
    let t_brute = t.elapsed().as_secs_f64();

    let speedup = t_brute / t_fast.max(1e-9);
    println!(
        "n={n}: fast {:.2e} s, brute {:.2e} s, speedup {speedup:.0}x, max diff {:.1e}",
        t_fast,
        t_brute,
        fast.max_abs_diff(&brute)
    );
    Ok(speedup)
}

pub fn run() -> infconv::Result<()> {
    run_with(513)?;
    Ok(())
}

fn main() -> infconv::Result<()> {
    run()?;
    run_with(4097)?;
    Ok(())
}
