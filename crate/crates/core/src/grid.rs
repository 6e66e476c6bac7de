//! Origin-centred uniform grids on `[-L, L]^d` and extended-real samples on them.
//!
//! Node `i` on an axis sits at `(i - o) * h`, where `o = (n - 1) / 2` is the
//! origin index and `h = 2L / (n - 1)`. Computing coordinates from the signed
//! offset keeps the origin exactly at zero and makes the grid exactly
//! symmetric under negation.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::extreal::ExtReal;

/// Default maximum number of nodes, `2^24`.
pub const DEFAULT_NODE_CAP: usize = 1 << 24;

/// Largest supported dimension.
pub const MAX_DIM: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridSpec {
    #[serde(rename = "d")]
    dim: usize,
    #[serde(rename = "L")]
    half_width: f64,
    n: usize,
    #[serde(rename = "h")]
    spacing: f64,
}

/// Builds a grid with the default node cap.
pub fn make_grid(dim: usize, half_width: f64, n: usize) -> Result<GridSpec> {
    GridSpec::with_cap(dim, half_width, n, DEFAULT_NODE_CAP)
}

impl GridSpec {
    pub fn new(dim: usize, half_width: f64, n: usize) -> Result<Self> {
        make_grid(dim, half_width, n)
    }

    pub fn with_cap(dim: usize, half_width: f64, n: usize, cap: usize) -> Result<Self> {
        if !(1..=MAX_DIM).contains(&dim) {
            return Err(Error::InvalidGrid(format!("dimension {dim} not in 1..={MAX_DIM}")));
        }
        if !(half_width.is_finite() && half_width > 0.0) {
            return Err(Error::InvalidGrid(format!("half-width {half_width} must be positive")));
        }
        if n < 3 || n.is_multiple_of(2) {
            return Err(Error::InvalidGrid(format!("points per axis {n} must be odd and >= 3")));
        }
        let nodes = (n as u128).pow(dim as u32);
        if nodes > cap as u128 {
            return Err(Error::GridTooLarge { nodes, cap });
        }
        Ok(GridSpec {
            dim,
            half_width,
            n,
            spacing: 2.0 * half_width / (n - 1) as f64,
        })
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn half_width(&self) -> f64 {
        self.half_width
    }

    #[inline]
    pub fn points_per_axis(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn spacing(&self) -> f64 {
        self.spacing
    }

    /// Index of the origin along each axis.
    #[inline]
    pub fn origin_index(&self) -> usize {
        (self.n - 1) / 2
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n.pow(self.dim as u32)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Quadrature weight `h^d` of every node.
    pub fn cell_volume(&self) -> f64 {
        self.spacing.powi(self.dim as i32)
    }

    #[inline]
    pub fn axis_coordinate(&self, i: usize) -> f64 {
        (i as f64 - self.origin_index() as f64) * self.spacing
    }

    /// The 1-D grid with the same half-width and node count.
    pub fn axis_grid(&self) -> GridSpec {
        GridSpec { dim: 1, ..*self }
    }

    /// Same spacing over `[-kL, kL]^d`: `k(n - 1) + 1` nodes per axis, so the
    /// Minkowski sum of `k` copies of this box fits. The node cap is not applied.
    pub fn widened(&self, k: usize) -> Result<GridSpec> {
        if k == 0 {
            return Err(Error::InvalidArgument("widening factor must be positive".into()));
        }
        Ok(GridSpec {
            half_width: self.half_width * k as f64,
            n: k * (self.n - 1) + 1,
            ..*self
        })
    }

    /// Whether two grids have the same dimension and node spacing, so node
    /// offsets on one are node offsets on the other.
    pub fn is_commensurate(&self, other: &GridSpec) -> bool {
        self.dim == other.dim
            && (self.spacing - other.spacing).abs() <= 1e-12 * self.spacing.max(other.spacing)
    }

    /// Same node count over `[-λL, λL]^d`; node `i` of the result sits at `λ` times node `i` here.
    pub fn scaled(&self, lambda: f64) -> Result<GridSpec> {
        if !(lambda.is_finite() && lambda > 0.0) {
            return Err(Error::InvalidArgument(format!("scale factor {lambda} must be positive")));
        }
        Ok(GridSpec {
            half_width: self.half_width * lambda,
            spacing: self.spacing * lambda,
            ..*self
        })
    }

    /// Row-major multi-index of a flat index, written into `out[..d]`.
    pub fn unflatten(&self, mut flat: usize, out: &mut [usize]) {
        for k in (0..self.dim).rev() {
            out[k] = flat % self.n;
            flat /= self.n;
        }
    }

    pub fn flatten(&self, idx: &[usize]) -> usize {
        idx.iter().take(self.dim).fold(0, |acc, &i| acc * self.n + i)
    }

    /// Coordinates of node `flat`, written into `out[..d]`.
    pub fn coordinates(&self, flat: usize, out: &mut [f64]) {
        let mut idx = [0usize; MAX_DIM];
        self.unflatten(flat, &mut idx);
        for k in 0..self.dim {
            out[k] = self.axis_coordinate(idx[k]);
        }
    }

    /// Flat index of the node with all coordinates negated.
    pub fn mirror(&self, flat: usize) -> usize {
        let mut idx = [0usize; MAX_DIM];
        self.unflatten(flat, &mut idx);
        for i in idx.iter_mut().take(self.dim) {
            *i = self.n - 1 - *i;
        }
        self.flatten(&idx)
    }

    /// Whether node `flat` lies on the outer face of the box.
    pub fn is_boundary(&self, flat: usize) -> bool {
        let mut idx = [0usize; MAX_DIM];
        self.unflatten(flat, &mut idx);
        idx[..self.dim].iter().any(|&i| i == 0 || i == self.n - 1)
    }
}

/// Extended-real samples on a grid, row-major by axis order.
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction {
    grid: GridSpec,
    samples: Vec<f64>,
}

impl GridFunction {
    pub fn new(grid: GridSpec, samples: Vec<f64>) -> Result<Self> {
        if samples.len() != grid.len() {
            return Err(Error::InvalidArgument(format!(
                "expected {} samples, got {}",
                grid.len(),
                samples.len()
            )));
        }
        if let Some(&bad) = samples.iter().find(|v| v.is_nan() || **v == f64::NEG_INFINITY) {
            return Err(Error::InvalidValue(bad));
        }
        if !samples.iter().any(|v| v.is_finite()) {
            return Err(Error::DegenerateFunction);
        }
        Ok(GridFunction { grid, samples })
    }

    /// Samples `f` at every node; `f` receives the node coordinates.
    pub fn from_fn(grid: GridSpec, mut f: impl FnMut(&[f64]) -> f64) -> Result<Self> {
        let d = grid.dim();
        let mut x = [0.0; MAX_DIM];
        let samples = (0..grid.len())
            .map(|i| {
                grid.coordinates(i, &mut x);
                f(&x[..d])
            })
            .collect();
        GridFunction::new(grid, samples)
    }

    pub fn zeros(grid: GridSpec) -> Self {
        GridFunction { grid, samples: vec![0.0; grid.len()] }
    }

    #[inline]
    pub fn grid(&self) -> &GridSpec {
        &self.grid
    }

    #[inline]
    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn into_samples(self) -> Vec<f64> {
        self.samples
    }

    #[inline]
    pub fn get(&self, flat: usize) -> ExtReal {
        // invariant checked at construction
        ExtReal::new(self.samples[flat]).expect("samples are never NaN or -inf")
    }

    pub fn has_infinite(&self) -> bool {
        self.samples.iter().any(|v| v.is_infinite())
    }

    /// `max(1, max |finite sample|)`, the scale used in relative comparisons.
    pub fn scale(&self) -> f64 {
        self.samples
            .iter()
            .filter(|v| v.is_finite())
            .fold(1.0_f64, |acc, v| acc.max(v.abs()))
    }

    /// `c * f`. `c` must be finite; a negative `c` is rejected when `f` has `+inf` samples.
    pub fn scaled(&self, c: f64) -> Result<GridFunction> {
        if !c.is_finite() || (c < 0.0 && self.has_infinite()) {
            return Err(Error::InvalidArgument(format!("cannot scale by {c}")));
        }
        let samples = self
            .samples
            .iter()
            .map(|&v| if v.is_infinite() { f64::INFINITY } else { c * v })
            .collect();
        GridFunction::new(self.grid, samples)
    }

    /// Pointwise sum of two functions on the same grid.
    pub fn add(&self, other: &GridFunction) -> Result<GridFunction> {
        if self.grid != other.grid {
            return Err(Error::GridMismatch);
        }
        let samples = self.samples.iter().zip(&other.samples).map(|(a, b)| a + b).collect();
        GridFunction::new(self.grid, samples)
    }

    /// Largest absolute pointwise difference over nodes finite in both; `+inf` if
    /// the two disagree on which nodes are infinite.
    pub fn max_abs_diff(&self, other: &GridFunction) -> f64 {
        self.samples
            .iter()
            .zip(&other.samples)
            .map(|(a, b)| match (a.is_finite(), b.is_finite()) {
                (true, true) => (a - b).abs(),
                (false, false) => 0.0,
                _ => f64::INFINITY,
            })
            .fold(0.0, f64::max)
    }
}
