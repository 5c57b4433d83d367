use num_complex::Complex64;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("alpha = {0} is outside the admissible range 0 < alpha < 1")]
    InvalidAlpha(f64),

    #[error("point {point} lies outside the open unit disk")]
    OutsideDisk { point: Complex64 },

    #[error("requested order {requested} exceeds the configured cap {cap}")]
    OrderCap { requested: usize, cap: usize },

    #[error("operation `{op}` is not supported for the {variant} map")]
    UnsupportedVariant { op: &'static str, variant: &'static str },

    #[error("invalid self-map: {0}")]
    InvalidMap(String),

    #[error("cannot parse map spec `{input}`: {reason}")]
    MapSpec { input: String, reason: String },

    #[error("root solver did not converge (max residual {residual:e})")]
    RootSolver { residual: f64 },

    #[error("non-finite integrand value at quadrature node z = {node}")]
    NonFinite { node: Complex64 },

    #[error("power iteration did not converge after {iterations} iterations (last estimate {last})")]
    NonConvergence { iterations: usize, last: f64 },

    #[error("counting series diverges for alpha = {alpha} (requires alpha > 1/2)")]
    DivergentSeries { alpha: f64 },

    #[error("precondition violated: {0}")]
    Precondition(String),
}
