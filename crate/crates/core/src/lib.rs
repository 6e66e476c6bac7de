//! Infimal (min-plus) convolution of functions sampled on truncated grids in
//! `R^d` (`d <= 3`), Lebesgue–Riesz and Grand Lebesgue Space norms, and
//! numerical checks of the sharp norm inequalities
//!
//! ```text
//! ‖f_1 □ … □ f_m‖_p   <= m^{d/p}     Σ_j ‖f_j‖_p
//! ‖f_1 □ … □ f_m‖_Gν  <= φ_Gζ(m^d)   Σ_j ‖f_j‖_Gψ,    ψ = ν / ζ
//! ```
//!
//! | Module | Contents |
//! |--------|----------|
//! | [`grid`] | origin-centred grids, [`GridFunction`] |
//! | [`catalog`] | analytic [`FunctionSpec`] entries, sampling, dilation |
//! | [`infconv`] | brute-force, direct, separable and convex 1-D engines |
//! | [`norms`] | `L_p` quadrature, tail measure, subgaussian fit |
//! | [`gls`] | generating functions, GLS norms, fundamental functions |
//! | [`harness`] | sharpness and GLS-bound reports |
//! | [`report`] | JSON and CSV output |
//! | [`cli`] | the `infconv` command line |
//!
//! ```
//! use infconv::{catalog::sample, grid::make_grid, infconv::infconv_pair, FunctionSpec};
//!
//! let grid = make_grid(1, 6.0, 129).unwrap();
//! let q = sample(&FunctionSpec::Quadratic { c: 1.0 }, &grid).unwrap();
//! let half = infconv_pair(&q, &q).unwrap();
//! // x^2 □ x^2 = x^2 / 2
//! let o = grid.origin_index();
//! assert!((half.samples()[o + 2] - grid.axis_coordinate(o + 2).powi(2) / 2.0).abs() < 1e-12);
//! ```

pub mod catalog;
pub mod cli;
pub mod error;
pub mod extreal;
pub mod gls;
pub mod grid;
pub mod harness;
pub mod infconv;
pub mod norms;
pub mod report;

pub use catalog::{FunctionSpec, SpecTemplate};
pub use error::{Error, Result};
pub use extreal::ExtReal;
pub use gls::{Factorization, GeneratingFunction, PSampling, Spacing};
pub use grid::{make_grid, GridFunction, GridSpec};
pub use harness::{GlsBoundReport, SharpnessReport};
pub use infconv::Engine;
pub use norms::PExponent;
