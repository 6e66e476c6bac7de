//! Linear-time min-plus convolution of discretely convex 1-D sequences.
//!
//! The min-plus convolution of two convex sequences is convex, and its
//! increment sequence is the sorted merge of the operands' increments. Walking
//! that merge visits, for every output offset `k = a + b`, a minimizing pair
//! `(a, b)`; the output value is taken directly as `f[a] + g[b]`, so no error
//! accumulates along the walk.

use crate::error::{Error, Result};
use crate::grid::{GridFunction, GridSpec};

/// Relative slack allowed when checking that increments are non-decreasing.
pub const CONVEXITY_TOL: f64 = 1e-12;

/// Finite samples on a 1-D grid whose increments are non-decreasing.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvexSequence {
    grid: GridSpec,
    values: Vec<f64>,
}

impl ConvexSequence {
    pub fn new(grid: GridSpec, values: Vec<f64>) -> Result<Self> {
        if grid.dim() != 1 {
            return Err(Error::InvalidArgument("convex sequences live on 1-D grids".into()));
        }
        if values.len() != grid.points_per_axis() {
            return Err(Error::InvalidArgument(format!(
                "expected {} values, got {}",
                grid.points_per_axis(),
                values.len()
            )));
        }
        if let Some(&bad) = values.iter().find(|v| !v.is_finite()) {
            return Err(Error::InvalidValue(bad));
        }
        let scale = values.iter().fold(1.0_f64, |acc, v| acc.max(v.abs()));
        for (index, w) in values.windows(3).enumerate() {
            let (d0, d1) = (w[1] - w[0], w[2] - w[1]);
            if d1 < d0 - CONVEXITY_TOL * scale {
                return Err(Error::NotConvex { index: index + 1 });
            }
        }
        Ok(ConvexSequence { grid, values })
    }

    pub fn from_grid_function(f: &GridFunction) -> Result<Self> {
        ConvexSequence::new(*f.grid(), f.samples().to_vec())
    }

    pub fn grid(&self) -> &GridSpec {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn increments(&self) -> impl Iterator<Item = f64> + '_ {
        self.values.windows(2).map(|w| w[1] - w[0])
    }

    pub fn to_grid_function(&self) -> GridFunction {
        GridFunction::new(self.grid, self.values.clone()).expect("finite samples")
    }
}

/// `f □ g` for convex sequences on the same grid, in `O(n)`.
///
/// Agrees with [`super::infconv_pair`] on finite convex inputs up to rounding.
pub fn infconv_convex_fast_1d(f: &ConvexSequence, g: &ConvexSequence) -> Result<ConvexSequence> {
    if f.grid != g.grid {
        return Err(Error::GridMismatch);
    }
    let n = f.values.len();
    let o = f.grid.origin_index();
    let (fv, gv) = (&f.values, &g.values);
    let mut out = Vec::with_capacity(n);
    // full Minkowski index k = a + b runs over 0..2n-1; the grid keeps k in o..o+n
    let (mut a, mut b) = (0usize, 0usize);
    for k in 0..o + n {
        if k > 0 {
            let take_f = b == n - 1 || (a < n - 1 && fv[a + 1] - fv[a] <= gv[b + 1] - gv[b]);
            if take_f {
                a += 1;
            } else {
                b += 1;
            }
        }
        if k >= o {
            out.push(fv[a] + gv[b]);
        }
    }
    ConvexSequence::new(f.grid, out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::make_grid;
    use crate::infconv::infconv_pair;

    fn seq(grid: GridSpec, f: impl Fn(f64) -> f64) -> ConvexSequence {
        let v = (0..grid.points_per_axis()).map(|i| f(grid.axis_coordinate(i))).collect();
        ConvexSequence::new(grid, v).unwrap()
    }

    #[test]
    fn rejects_non_convex() {
        let g = make_grid(1, 1.0, 5).unwrap();
        assert!(matches!(
            ConvexSequence::new(g, vec![0.0, 1.0, 0.0, 1.0, 2.0]),
            Err(Error::NotConvex { index: 1 })
        ));
        assert!(ConvexSequence::new(g, vec![0.0, 1.0, f64::INFINITY, 1.0, 2.0]).is_err());
        assert!(ConvexSequence::new(make_grid(2, 1.0, 5).unwrap(), vec![0.0; 25]).is_err());
    }

    #[test]
    fn halved_quadratic() {
        let g = make_grid(1, 4.0, 101).unwrap();
        let q = seq(g, |x| x * x);
        let fast = infconv_convex_fast_1d(&q, &q).unwrap();
        let brute = infconv_pair(&q.to_grid_function(), &q.to_grid_function()).unwrap();
        assert!(fast.to_grid_function().max_abs_diff(&brute) <= 1e-12 * 16.0);
    }

    #[test]
    fn zero_sequence_gives_window_minimum() {
        let g = make_grid(1, 2.0, 41).unwrap();
        let f = seq(g, |x| (x - 0.7).powi(2) + 0.3 * x);
        let z = seq(g, |_| 0.0);
        let fast = infconv_convex_fast_1d(&f, &z).unwrap();
        let n = f.values().len();
        let o = g.origin_index();
        for i in 0..n {
            let lo = i.saturating_sub(o);
            let hi = (i + o).min(n - 1);
            let window_min = f.values()[lo..=hi].iter().cloned().fold(f64::INFINITY, f64::min);
            assert!((fast.values()[i] - window_min).abs() < 1e-12);
        }
    }

    #[test]
    fn steep_cone_is_an_approximate_identity() {
        let g = make_grid(1, 3.0, 61).unwrap();
        let f = seq(g, |x| 0.5 * x * x + x);
        let o = g.origin_index() as f64;
        let cone = ConvexSequence::new(
            g,
            (0..61).map(|i| 1e6 * (i as f64 - o).abs()).collect(),
        )
        .unwrap();
        let h = infconv_convex_fast_1d(&f, &cone).unwrap();
        for (a, b) in h.values().iter().zip(f.values()) {
            assert!((a - b).abs() < 1e-12);
        }
    }
}
