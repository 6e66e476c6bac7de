//! Infimal convolution of two or more sampled functions, with argmin tracking
//! and the brute-force multi-way oracle.

use infconv::catalog::sample;
use infconv::infconv::{infconv_direct, infconv_fold, infconv_pair_with_argmin};
use infconv::{make_grid, FunctionSpec};

pub fn run() -> infconv::Result<()> {
    let grid = make_grid(1, 6.0, 257)?;
    let q = sample(&FunctionSpec::Quadratic { c: 1.0 }, &grid)?;
    let (h, argmin) = infconv_pair_with_argmin(&q, &q)?;
    for x in [-4.0, -1.0, 0.0, 2.5] {
        let i = (grid.origin_index() as f64 + x / grid.spacing()).round() as usize;
        let xi = grid.axis_coordinate(i);
        let y = grid.axis_coordinate(argmin[i]);
        println!("x={xi:+.3}  (q□q)(x)={:.6}  x^2/2={:.6}  split at {y:+.3}", h.samples()[i], xi * xi / 2.0);
    }

    // Gaussians: the infimum runs to the box edge, far from 2G(0) = 2
    let gauss = sample(&FunctionSpec::Gaussian, &grid)?;
    let gg = infconv_fold(&[gauss.clone(), gauss])?;
    println!("(G□G)(0) on [-6, 6] = {:.3e}", gg.samples()[grid.origin_index()]);

    let small = make_grid(1, 2.0, 17)?;
    let fs: Vec<_> = ["tent:R=1", "quadratic:c=2", "gaussian"]
        .iter()
        .map(|s| sample(&s.parse().unwrap(), &small))
        .collect::<infconv::Result<_>>()?;
    let fold = infconv_fold(&fs)?;
    let direct = infconv_direct(&fs)?;
    println!("fold vs direct, m=3: max diff {:.1e}", fold.max_abs_diff(&direct));
    Ok(())
}

fn main() -> infconv::Result<()> {
    run()
}
