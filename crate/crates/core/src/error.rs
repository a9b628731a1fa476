use crate::sweep::WidthReport;

/// Errors surfaced by body construction, support solvers, and checks.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// The requested ball intersection has no common point.
    #[error("empty ball intersection (feasibility residual {residual:.3e})")]
    EmptyBody { residual: f64 },
    /// The iterative solver could not certify the requested tolerance.
    #[error("solver failed to certify tolerance (level gap {gap:.3e}, feasibility residual {residual:.3e})")]
    SolverFailure { gap: f64, residual: f64 },
    /// Membership queries are only defined for trees that invert down to ball checks.
    #[error("membership query unsupported for {node} nodes")]
    UnsupportedQuery { node: &'static str },
    /// A check required a constant-width body and measured otherwise.
    #[error("body is not of constant width (width spread {:.6e})", .report.max_width - .report.min_width)]
    NotConstantWidth { report: Box<WidthReport> },
    /// Caller-facing misuse: bad dimensions, parameters out of range, malformed input.
    #[error("{0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
