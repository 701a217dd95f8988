use thiserror::Error;

/// Failure modes shared by every geometry and template operation.
///
/// Each message is a single line naming the violated precondition so the CLI
/// can forward it verbatim.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("identical {0}: intersection is not a finite set")]
    Identical(&'static str),
    #[error("point lies on the line (hyperbolic distance {0:e})")]
    PointOnLine(f64),
    #[error("cannot produce {requested} distinct geodesics: endpoint spacing below resolution")]
    Resolution { requested: usize },
    #[error("point ({0}, {1}) is outside the open unit disk")]
    OutOfDisk(f64, f64),
    #[error("unsupported vertex configuration {0}: expected (p,6,6) with p in {{5,6,7}}")]
    UnsupportedConfig(String),
    #[error("patch is not closed")]
    NotClosed,
    #[error("adaptive quadrature did not converge within depth {0}")]
    NonConvergence(u32),
    #[error("need at least {needed} creases, got {got}")]
    TooFewCreases { needed: usize, got: usize },
    #[error("tiling construction failed: {0}")]
    Construction(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
