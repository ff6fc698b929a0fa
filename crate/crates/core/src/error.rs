use thiserror::Error;

/// Errors produced by the polynomial, graph and family layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid radicand {0}: must be a positive integer")]
    InvalidRadicand(i64),

    #[error("divergent integral: term x^0*y^{y_exp} has no S_x image")]
    DivergentIntegral { y_exp: u64 },

    #[error("invalid range: {0}")]
    InvalidRange(String),

    #[error("vertex {vertex} has degree 0; M-polynomials need minimum degree >= 1")]
    DegenerateDegree { vertex: usize },

    #[error("invalid edge {u}-{v}: {reason}")]
    InvalidEdge { u: usize, v: usize, reason: String },

    #[error("line {line}: {message}")]
    Format { line: usize, message: String },

    #[error("line {line}: cannot parse {token:?} as a vertex id")]
    Parse { line: usize, token: String },

    #[error("{family}: {message}")]
    Domain { family: String, message: String },

    #[error("{family}: no such graph exists ({message})")]
    Infeasible { family: String, message: String },

    #[error("unknown family {0:?}")]
    UnknownFamily(String),

    #[error("bad parameter list: {0}")]
    BadParams(String),

    #[error("routes disagree: {0}")]
    RouteDisagreement(String),

    #[error("malformed polynomial JSON: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
