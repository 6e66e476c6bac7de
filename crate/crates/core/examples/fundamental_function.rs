//! The fundamental function φ(δ) = sup_p δ^{1/p} / ψ(p).

use infconv::gls::{fundamental_function, fundamental_numeric};
use infconv::GeneratingFunction;

pub fn run() -> infconv::Result<()> {
    let power = GeneratingFunction::Power { s: 2.0 };
    let one = GeneratingFunction::constant_one();
    let degenerate = GeneratingFunction::Degenerate { r: 2.0 };
    println!("{:>10} {:>14} {:>14} {:>14}", "delta", "power:s=2", "one", "degenerate:r=2");
    for delta in [1e-4, 0.01, 0.5, 1.0, 4.0, 8.0, 27.0] {
        println!(
            "{delta:>10} {:>14.8} {:>14.8} {:>14.8}",
            fundamental_function(&power, delta)?,
            fundamental_function(&one, delta)?,
            fundamental_function(&degenerate, delta)?,
        );
    }
    // the closed form and the generic search agree on a bounded domain
    let bounded = GeneratingFunction::ConstantOne { a: 1.5, b: 6.0 };
    println!(
        "one on [1.5, 6] at δ=0.2: closed {:.10}, numeric {:.10}",
        fundamental_function(&bounded, 0.2)?,
        fundamental_numeric(&bounded, 0.2)?
    );
    Ok(())
}

fn main() -> infconv::Result<()> {
    run()
}
