use crate::numerics::Bracket;
use crate::transcendental::ThresholdReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// Argument outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A parameter violates its admissible range.
    #[error("invalid value {value} for `{field}`: {reason}")]
    Range {
        field: &'static str,
        value: f64,
        reason: &'static str,
    },

    /// `exp(x^2)` would overflow double precision.
    #[error("argument {x} exceeds the overflow cap {cap}")]
    Overflow { x: f64, cap: f64 },

    #[error("no sign change on [{lo}, {hi}]: f(lo) = {f_lo}, f(hi) = {f_hi}")]
    Bracket { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },

    #[error("root finder did not converge after {iterations} iterations, last bracket [{}, {}]", .bracket.lo, .bracket.hi)]
    Convergence { iterations: usize, bracket: Bracket },

    #[error("no root: {0}")]
    NoRoot(String),

    #[error(
        "no similarity solution: h0 = {} does not exceed the threshold h0* = {}",
        .0.h0,
        .0.h0_star
    )]
    NoSolution(Box<ThresholdReport>),

    /// The threshold machinery is undefined for gamma = 0 or theta0 = 0.
    #[error("threshold quantities are undefined for {0}")]
    Bypassed(&'static str),

    /// Malformed parameter file; `line` is 1-based, 0 for whole-file problems.
    #[error("config line {line}: {message}")]
    Config { line: usize, message: String },

    #[error("finite-difference stencil at x = {x}, t = {t} with step {h} crosses a free boundary")]
    StencilCrossesFront { x: f64, t: f64, h: f64 },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
