use thiserror::Error;

/// Errors raised by the numerical kernels and solvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("{function} has a pole at {at}")]
    Pole { function: &'static str, at: f64 },

    #[error("{function} did not converge after {terms} terms")]
    NonConvergence { function: &'static str, terms: usize },

    #[error("b = {b} lies within 1e-6 of an integer and the integer-b nudge is disabled")]
    SingularB { b: f64 },

    #[error("{function} out of range: ln|value| = {log_magnitude} exceeds the f64 limit {threshold}")]
    Range {
        function: &'static str,
        log_magnitude: f64,
        threshold: f64,
    },

    #[error("order {order} is too close to an integer for the I-difference route")]
    OrderNearInteger { order: f64 },

    #[error("quadrature stopped at estimated error {achieved:e} (requested {requested:e})")]
    Quadrature { requested: f64, achieved: f64 },

    #[error("no sign change found in [{lo}, {hi}]: {context}")]
    NoBracket { lo: f64, hi: f64, context: String },

    #[error("evaluation failed at kappa = {kappa}: {source}")]
    AtKappa { kappa: f64, source: Box<Error> },

    #[error("root iteration did not converge: {0}")]
    RootNotConverged(String),

    #[error("eigensolver failed in the {block} block at index {index}")]
    Eigensolver { block: &'static str, index: usize },

    #[error("matrix element overflow: alpha/epsilon^2 not representable; smallest usable epsilon is {min_epsilon:e}")]
    MatrixOverflow { min_epsilon: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn at_kappa(self, kappa: f64) -> Error {
        match self {
            e @ Error::AtKappa { .. } => e,
            e => Error::AtKappa {
                kappa,
                source: Box::new(e),
            },
        }
    }
}
