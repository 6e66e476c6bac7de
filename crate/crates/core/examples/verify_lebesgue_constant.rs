//! Upper bound and surrogate ratio for the Lebesgue constant m^{d/p}.

use infconv::harness::{randomized_upper_bound, surrogate_lebesgue_ratio, verify_theorem_2_1, DEFAULT_SEED};
use infconv::{make_grid, Engine, FunctionSpec, PExponent};

pub fn run() -> infconv::Result<()> {
    let grid = make_grid(1, 6.0, 1025)?;
    for m in 2..=5 {
        for p in [1.0, 2.0, 4.0] {
            let r = verify_theorem_2_1(m, PExponent::finite(p)?, &FunctionSpec::Gaussian, &grid, Engine::BruteForce)?;
            println!(
                "m={m} p={p}: bound {:.6} surrogate {:.6} true ratio {:.2e} satisfied={}",
                r.bound,
                r.surrogate_ratio.unwrap_or(f64::NAN),
                r.ratio,
                r.satisfied
            );
        }
    }

    let plane = make_grid(2, 6.0, 257)?;
    let s = surrogate_lebesgue_ratio(&FunctionSpec::Gaussian, 2, PExponent::finite(1.0)?, &plane)?;
    println!("d=2, m=2, p=1 surrogate: {s:.6} (bound 4)");

    let small = make_grid(1, 3.0, 129)?;
    let sweep = randomized_upper_bound(50, DEFAULT_SEED, &small, &[2, 3], &[1.0, 2.0, 4.0])?;
    println!(
        "random sweep: {} cases, {} violations, max ratio/bound {:.4}",
        sweep.cases, sweep.violations, sweep.max_ratio_over_bound
    );
    Ok(())
}

fn main() -> infconv::Result<()> {
    run()
}
