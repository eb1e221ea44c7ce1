use thiserror::Error;

/// Errors produced by roadmap construction, planning and scenario loading.
#[derive(Debug, Error)]
pub enum Error {
    #[error("quadrature order must be at least 1")]
    ZeroQuadratureOrder,

    #[error("a roadmap needs at least 2 nodes, got {0}")]
    TooFewNodes(usize),

    #[error("{what} ({x1}, {x2}) lies outside the workspace")]
    OutsideWorkspace { what: &'static str, x1: f64, x2: f64 },

    #[error("goal is not reachable from start")]
    GoalUnreachable,

    #[error("unknown preset `{name}`; available presets: {available}")]
    UnknownPreset { name: String, available: String },

    #[error("scenario config: {0}")]
    Config(String),

    #[error("invalid scenario field `{field}`: {message}")]
    Invalid { field: &'static str, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn invalid(field: &'static str, message: impl Into<String>) -> Self {
        Error::Invalid { field, message: message.into() }
    }
}
