//! Sample catalog functions on origin-centred grids and dilate them.

use infconv::catalog::{dilate, sample};
use infconv::{make_grid, FunctionSpec};

pub fn run() -> infconv::Result<()> {
    let grid = make_grid(1, 3.0, 13)?;
    println!("grid: d={} L={} n={} h={}", grid.dim(), grid.half_width(), grid.points_per_axis(), grid.spacing());

    for text in ["gaussian", "tent:R=2", "trunc-quadratic:c=1,R=2", "indicator-origin"] {
        let spec: FunctionSpec = text.parse()?;
        let f = sample(&spec, &grid)?;
        let row: Vec<String> = f.samples().iter().map(|v| format!("{v:.3}")).collect();
        println!("{spec:<28} {}", row.join(" "));
    }

    // T_2 f(x) = f(2x) squeezes the Gaussian toward the origin
    let squeezed = dilate(&FunctionSpec::Gaussian, 2.0, &grid)?;
    println!("gaussian(2x) at x = 0.5: {:.6}", squeezed.get(grid.origin_index() + 2).value());

    let plane = make_grid(2, 1.0, 3)?;
    let q = sample(&"quadratic:c=1".parse()?, &plane)?;
    let mut x = [0.0; 3];
    for i in 0..plane.len() {
        plane.coordinates(i, &mut x);
        println!("({:+.1}, {:+.1}) -> {}", x[0], x[1], q.samples()[i]);
    }
    Ok(())
}

fn main() -> infconv::Result<()> {
    run()
}
