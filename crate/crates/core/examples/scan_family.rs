//! Scan a one-parameter family for the largest empirical ratio.

use infconv::harness::scan_ratio;
use infconv::{make_grid, Engine, PExponent, SpecTemplate};

pub fn run() -> infconv::Result<()> {
    let grid = make_grid(1, 3.0, 257)?;
    let family: SpecTemplate = "trunc-quadratic:c=?,R=3".parse()?;
    let scan = scan_ratio(&family, &[0.25, 0.5, 1.0, 2.0, 4.0], 2, PExponent::finite(2.0)?, &grid, Engine::BruteForce);
    for e in &scan.entries {
        match (&e.report, &e.error) {
            (Some(r), _) => println!("c={:<5} ratio {:.6} (bound {:.6})", e.param, r.ratio, r.bound),
            (_, Some(err)) => println!("c={:<5} skipped: {err}", e.param),
            _ => {}
        }
    }
    println!("best c = {:?}, ratio {:?}", scan.best_param, scan.best_ratio);
    Ok(())
}

fn main() -> infconv::Result<()> {
    run()
}
