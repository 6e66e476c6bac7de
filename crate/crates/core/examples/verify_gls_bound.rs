//! The GLS bound ‖□ f_j‖_Gν <= φ_Gζ(m^d) Σ ‖f_j‖_Gψ with ψ = ν/ζ.

use infconv::gls::Factorization;
use infconv::harness::verify_theorem_4_1;
use infconv::{make_grid, Engine, FunctionSpec, GeneratingFunction, PSampling, Spacing};

pub fn run() -> infconv::Result<()> {
    let grid = make_grid(1, 6.0, 513)?;
    let sampling = PSampling::new(1.0, 64.0, 33, Spacing::Log)?;
    let psi = GeneratingFunction::Power { s: 2.0 };

    for m in 2..=3 {
        let specs = vec![FunctionSpec::Gaussian; m];
        let r = verify_theorem_4_1(&specs, &psi, &Factorization::Trivial, &grid, &sampling, Engine::BruteForce)?;
        println!(
            "trivial, m={m}: lhs {:.4e} <= φ={} x Σ = {:.6}  margin {:.4} chain ok: {}",
            r.lhs, r.fund, r.rhs, r.margin, r.chain_holds
        );
    }

    let split = Factorization::Given {
        nu: GeneratingFunction::Power { s: 1.0 },
        zeta: GeneratingFunction::Power { s: 2.0 },
    };
    let specs = [FunctionSpec::Tent { radius: 3.0 }, FunctionSpec::Quadratic { c: 0.1 }];
    let r = verify_theorem_4_1(&specs, &psi, &split, &grid, &sampling, Engine::BruteForce)?;
    println!("ν = p, ζ = p^(1/2): lhs {:.6} rhs {:.6} satisfied={}", r.lhs, r.rhs, r.satisfied);
    Ok(())
}

fn main() -> infconv::Result<()> {
    run()
}
