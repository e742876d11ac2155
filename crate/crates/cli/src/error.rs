use pseudoharm_core::Error as CoreError;
use serde_json::json;
use thiserror::Error;

/// A requested solve that did not produce a result.
#[derive(Debug)]
pub struct Failure {
    pub state: String,
    pub error: CoreError,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] CoreError),

    #[error("{} of {total} requested solves failed", failures.len())]
    Solves { total: usize, failures: Vec<Failure> },

    #[error("cannot write {path}: {source}")]
    Io { path: String, source: std::io::Error },

    #[error("serialization failed: {0}")]
    Serialize(String),
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Core(e) => core_kind(e),
            CliError::Solves { .. } => "solve_failed",
            CliError::Io { .. } => "io",
            CliError::Serialize(_) => "serialization",
        }
    }

    /// Machine-readable form printed on stderr.
    pub fn to_json(&self) -> String {
        let mut body = json!({ "kind": self.kind(), "message": self.to_string() });
        if let CliError::Solves { failures, .. } = self {
            body["failures"] = failures
                .iter()
                .map(|f| json!({ "state": f.state, "kind": core_kind(&f.error), "message": f.error.to_string() }))
                .collect();
        }
        json!({ "error": body }).to_string()
    }
}

fn core_kind(e: &CoreError) -> &'static str {
    match e {
        CoreError::Domain(_) => "domain",
        CoreError::Pole { .. } => "pole",
        CoreError::NonConvergence { .. } => "non_convergence",
        CoreError::SingularB { .. } => "singular_b",
        CoreError::Range { .. } => "range",
        CoreError::OrderNearInteger { .. } => "order_near_integer",
        CoreError::Quadrature { .. } => "quadrature",
        CoreError::NoBracket { .. } => "no_bracket",
        CoreError::AtKappa { source, .. } => core_kind(source),
        CoreError::RootNotConverged(_) => "root_not_converged",
        CoreError::Eigensolver { .. } => "eigensolver",
        CoreError::MatrixOverflow { .. } => "matrix_overflow",
    }
}
