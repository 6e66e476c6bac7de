use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("grid has {nodes} nodes, above the cap of {cap}")]
    GridTooLarge { nodes: u128, cap: usize },
    #[error("invalid extended real value {0}")]
    InvalidValue(f64),
    #[error("function is +inf at every node")]
    DegenerateFunction,
    #[error("operands live on different grids")]
    GridMismatch,
    #[error("cannot fold an empty list of functions")]
    EmptyFold,
    #[error("direct m-fold oracle too large: d*(m-1)*log2(n) = {cost:.2} > 40")]
    OracleTooLarge { cost: f64 },
    #[error("sequence is not discretely convex at increment {index}")]
    NotConvex { index: usize },
    #[error("spec {0} is not additively separable")]
    NotSeparable(String),
    #[error("dilation identity not applicable: {0}")]
    IdentityNotApplicable(String),
    #[error("indeterminate generating function value at p = {p}")]
    IndeterminatePsi { p: f64 },
    #[error("invalid generating function: {0}")]
    InvalidPsi(String),
    #[error("invalid p-sampling: {0}")]
    InvalidSampling(String),
    #[error("no sampled exponent has a finite generating function value")]
    EmptyDomain,
    #[error("not a factorization: nu/zeta differs from psi at p = {p}")]
    NotAFactorization { p: f64 },
    #[error("sum of component norms is {0}, outside (0, inf)")]
    OutsideSupremumDomain(f64),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
