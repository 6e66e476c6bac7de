//! Coordinate-wise engine for additively separable catalog entries.
//!
//! When every operand has the form `f_j(x) = Σ_k φ_j(x_k)`, the box-truncated
//! min-plus convolution factorizes: `(□ f_j)(x) = Σ_k (□ φ_j)(x_k)`. The 1-D
//! folds are computed with the brute-force engine.

use crate::catalog::{sample, FunctionSpec};
use crate::error::{Error, Result};
use crate::grid::{GridFunction, GridSpec, MAX_DIM};

use super::infconv_fold;

/// m-fold infimal convolution of separable `specs` on `grid`.
pub fn infconv_separable(specs: &[FunctionSpec], grid: &GridSpec) -> Result<GridFunction> {
    if specs.is_empty() {
        return Err(Error::EmptyFold);
    }
    let axis = grid.axis_grid();
    let factors = specs
        .iter()
        .map(|s| {
            let phi = s.axis_factor().ok_or_else(|| Error::NotSeparable(s.to_string()))?;
            sample(&phi, &axis)
        })
        .collect::<Result<Vec<_>>>()?;
    let line = infconv_fold(&factors)?;
    let line = line.samples();
    let d = grid.dim();
    let mut idx = [0usize; MAX_DIM];
    let values = (0..grid.len())
        .map(|flat| {
            grid.unflatten(flat, &mut idx);
            idx[..d].iter().map(|&i| line[i]).sum()
        })
        .collect();
    GridFunction::new(*grid, values)
}
