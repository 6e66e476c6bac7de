//! Discrete infimal (min-plus) convolution on truncated grids.
//!
//! For functions on the same grid, `(f □ g)[i] = min_j f[j] + g[i - j + o]`
//! where `o` is the origin index and both `j` and `i - j + o` must be nodes.
//! Values outside the box count as `+inf`, so the Minkowski-sum range is
//! cropped back onto the input grid.
//!
//! [`infconv_pair`] is the reference engine. The faster paths in
//! [`convex`] and [`separable`] are opt-in and are tested against it.

pub mod convex;
pub mod separable;

use rayon::prelude::*;

use crate::catalog::FunctionSpec;
use crate::error::{Error, Result};
use crate::grid::{GridFunction, GridSpec, MAX_DIM};

pub use convex::{infconv_convex_fast_1d, ConvexSequence};
pub use separable::infconv_separable;

/// Which engine computed a convolution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Engine {
    BruteForce,
    Separable,
    Direct,
}

/// Per-axis origin indices padded to three axes: unused leading axes have a single node.
fn padded_origins(grid: &GridSpec) -> [usize; MAX_DIM] {
    let mut os = [0; MAX_DIM];
    for o in os.iter_mut().skip(MAX_DIM - grid.dim()) {
        *o = grid.origin_index();
    }
    os
}

/// Minimum over feasible offsets `t` of `a[t] + b[x - t]`, where `x` is the
/// offset of output node `flat`, with the row-major first feasible minimizer
/// (a flat index into `a`).
fn pair_at(
    a: &[f64],
    oa: &[usize; MAX_DIM],
    b: &[f64],
    ob: &[usize; MAX_DIM],
    oo: &[usize; MAX_DIM],
    flat: usize,
) -> (f64, Option<usize>) {
    let side = |o: usize| 2 * o + 1;
    let mut x = [0i64; MAX_DIM];
    let mut rest = flat;
    for k in (0..MAX_DIM).rev() {
        x[k] = (rest % side(oo[k])) as i64 - oo[k] as i64;
        rest /= side(oo[k]);
    }
    // feasible t per axis: |t| <= oa and |x - t| <= ob
    let mut lo = [0i64; MAX_DIM];
    let mut hi = [0i64; MAX_DIM];
    for k in 0..MAX_DIM {
        lo[k] = (-(oa[k] as i64)).max(x[k] - ob[k] as i64);
        hi[k] = (oa[k] as i64).min(x[k] + ob[k] as i64);
        if lo[k] > hi[k] {
            return (f64::INFINITY, None);
        }
    }
    let (sa1, sa2) = (side(oa[1]), side(oa[2]));
    let (sb1, sb2) = (side(ob[1]), side(ob[2]));
    let mut best = f64::INFINITY;
    let mut arg = None;
    for t0 in lo[0]..=hi[0] {
        let ia0 = (t0 + oa[0] as i64) as usize;
        let ib0 = (x[0] - t0 + ob[0] as i64) as usize;
        for t1 in lo[1]..=hi[1] {
            let ia1 = (t1 + oa[1] as i64) as usize;
            let ib1 = (x[1] - t1 + ob[1] as i64) as usize;
            let arow = (ia0 * sa1 + ia1) * sa2;
            let brow = (ib0 * sb1 + ib1) * sb2;
            // inner axis: a index ascends, b index descends
            let a_start = arow + (lo[2] + oa[2] as i64) as usize;
            let b_start = brow + (x[2] - lo[2] + ob[2] as i64) as usize;
            let len = (hi[2] - lo[2]) as usize + 1;
            for s in 0..len {
                let v = a[a_start + s] + b[b_start - s];
                if v < best || arg.is_none() {
                    best = v;
                    arg = Some(a_start + s);
                }
            }
        }
    }
    (best, arg)
}

fn check_same_grid(f: &GridFunction, g: &GridFunction) -> Result<()> {
    if f.grid() != g.grid() {
        return Err(Error::GridMismatch);
    }
    Ok(())
}

fn infconv_on_with_argmin(
    f: &GridFunction,
    g: &GridFunction,
    out: &GridSpec,
) -> Result<(GridFunction, Vec<Option<usize>>)> {
    if !f.grid().is_commensurate(g.grid()) || !f.grid().is_commensurate(out) {
        return Err(Error::GridMismatch);
    }
    let (oa, ob, oo) = (padded_origins(f.grid()), padded_origins(g.grid()), padded_origins(out));
    let (fs, gs) = (f.samples(), g.samples());
    let (values, args): (Vec<f64>, Vec<Option<usize>>) = (0..out.len())
        .into_par_iter()
        .map(|i| pair_at(fs, &oa, gs, &ob, &oo, i))
        .unzip();
    Ok((GridFunction::new(*out, values)?, args))
}

/// Brute-force `f □ g` with operands and output on possibly different grids of
/// equal spacing. Nodes outside an operand's grid count as `+inf`.
pub fn infconv_on(f: &GridFunction, g: &GridFunction, out: &GridSpec) -> Result<GridFunction> {
    Ok(infconv_on_with_argmin(f, g, out)?.0)
}

/// Brute-force pairwise infimal convolution, `O(N^2)` in the node count.
pub fn infconv_pair(f: &GridFunction, g: &GridFunction) -> Result<GridFunction> {
    Ok(infconv_pair_with_argmin(f, g)?.0)
}

/// As [`infconv_pair`], also returning for each output node the flat index of
/// the minimizing `y` (first feasible in row-major order on ties).
pub fn infconv_pair_with_argmin(
    f: &GridFunction,
    g: &GridFunction,
) -> Result<(GridFunction, Vec<usize>)> {
    check_same_grid(f, g)?;
    let (h, args) = infconv_on_with_argmin(f, g, f.grid())?;
    let args = args
        .into_iter()
        .map(|a| a.expect("origin-centred grid always has a feasible split"))
        .collect();
    Ok((h, args))
}

/// `f_1 □ f_2 □ … □ f_m`, folded from the left with the brute-force engine.
///
/// The k-th partial result is kept on the grid widened to half-width
/// `min(k, m - k + 1) L`, the set of partial sums that can still land in the
/// box, and only the final result is cropped to the input grid. This makes
/// the fold equal to [`infconv_direct`]; for `m = 2` it is [`infconv_pair`].
pub fn infconv_fold(fs: &[GridFunction]) -> Result<GridFunction> {
    let (first, rest) = fs.split_first().ok_or(Error::EmptyFold)?;
    for f in rest {
        check_same_grid(first, f)?;
    }
    let base = *first.grid();
    let m = fs.len();
    let mut acc = first.clone();
    for (i, f) in rest.iter().enumerate() {
        let k = i + 2;
        let out = base.widened(k.min(m - k + 1))?;
        acc = infconv_on(&acc, f, &out)?;
    }
    Ok(acc)
}

/// Work exponent of [`infconv_direct`]: `d (m - 1) log2(n)`.
pub fn direct_cost(grid: &GridSpec, m: usize) -> f64 {
    (grid.dim() * m.saturating_sub(1)) as f64 * (grid.points_per_axis() as f64).log2()
}

/// Largest admissible [`direct_cost`].
pub const DIRECT_COST_LIMIT: f64 = 40.0;

/// Direct m-fold oracle: enumerates every tuple `(y_1, …, y_{m-1})` of nodes with
/// `y_m = x - Σ y_j` also a node and takes the minimum of `Σ f_j(y_j)`.
///
/// Exponential in `m`; it exists to cross-check [`infconv_fold`].
pub fn infconv_direct(fs: &[GridFunction]) -> Result<GridFunction> {
    let first = fs.first().ok_or(Error::EmptyFold)?;
    if fs.len() < 2 {
        return Err(Error::InvalidArgument("direct oracle needs m >= 2".into()));
    }
    for f in fs {
        check_same_grid(first, f)?;
    }
    let grid = *first.grid();
    let cost = direct_cost(&grid, fs.len());
    if cost > DIRECT_COST_LIMIT {
        return Err(Error::OracleTooLarge { cost });
    }
    let d = grid.dim();
    let n = grid.points_per_axis();
    let o = grid.origin_index() as i64;
    let free = fs.len() - 1;
    let samples: Vec<&[f64]> = fs.iter().map(|f| f.samples()).collect();

    let flat_of = |offsets: &[i64]| -> usize {
        offsets.iter().fold(0usize, |acc, &t| acc * n + (t + o) as usize)
    };

    let values = (0..grid.len())
        .into_par_iter()
        .map(|flat| {
            let mut idx = [0usize; MAX_DIM];
            grid.unflatten(flat, &mut idx);
            let x: Vec<i64> = idx[..d].iter().map(|&i| i as i64 - o).collect();
            // digits[j*d + k] is the k-th offset of y_{j+1}, each in [-o, o]
            let mut digits = vec![-o; free * d];
            let mut last = vec![0i64; d];
            let mut best = f64::INFINITY;
            loop {
                let mut feasible = true;
                for k in 0..d {
                    let s: i64 = (0..free).map(|j| digits[j * d + k]).sum();
                    last[k] = x[k] - s;
                    if last[k].abs() > o {
                        feasible = false;
                        break;
                    }
                }
                if feasible {
                    let mut total = 0.0;
                    for (j, f) in samples.iter().enumerate().take(free) {
                        total += f[flat_of(&digits[j * d..(j + 1) * d])];
                    }
                    total += samples[free][flat_of(&last)];
                    if total < best {
                        best = total;
                    }
                }
                // odometer
                let mut pos = digits.len();
                loop {
                    if pos == 0 {
                        return best;
                    }
                    pos -= 1;
                    if digits[pos] < o {
                        digits[pos] += 1;
                        break;
                    }
                    digits[pos] = -o;
                }
            }
        })
        .collect();
    GridFunction::new(grid, values)
}

/// `m · spec(x / m)`: the value of `Σ f(y_k)` at the symmetric split `y_k = x/m`.
///
/// Pointwise an upper bound on the m-fold infimal convolution of `spec`, with
/// equality when `spec` is convex.
pub fn symmetric_surrogate(spec: &FunctionSpec, m: usize, grid: &GridSpec) -> Result<GridFunction> {
    if m == 0 {
        return Err(Error::InvalidArgument("m must be positive".into()));
    }
    spec.validate()?;
    let mf = m as f64;
    let mut y = [0.0; MAX_DIM];
    GridFunction::from_fn(*grid, |x| {
        for (yk, xk) in y.iter_mut().zip(x) {
            *yk = xk / mf;
        }
        mf * spec.eval(&y[..x.len()])
    })
}
