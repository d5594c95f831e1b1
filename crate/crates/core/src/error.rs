use thiserror::Error;

/// Errors raised by constructions and checks in this crate.
///
/// The variants fall into three families which the command-line front end
/// maps onto distinct exit codes: mathematical failures, resource bounds,
/// and malformed input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("axiom `{axiom}` violated at {witness}")]
    AxiomViolation { axiom: String, witness: String },

    #[error("malformed input: {0}")]
    MalformedSpec(String),

    #[error("size limit exceeded: {what} has {actual}, bound is {bound}")]
    SizeLimit {
        what: String,
        actual: usize,
        bound: usize,
    },

    #[error("reduced words still appear at length {bound}; the funny tensor is not finite within the bound")]
    WordExplosion { bound: usize },

    #[error("unsupported input: {0}")]
    UnsupportedInput(String),

    #[error("lifting problem has no unique filler: {0}")]
    NotOrthogonal(String),

    #[error("square does not commute: {0}")]
    NonCommuting(String),

    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),
}

impl Error {
    pub fn axiom(axiom: impl Into<String>, witness: impl Into<String>) -> Self {
        Error::AxiomViolation {
            axiom: axiom.into(),
            witness: witness.into(),
        }
    }

    pub fn malformed(msg: impl Into<String>) -> Self {
        Error::MalformedSpec(msg.into())
    }

    pub fn size(what: impl Into<String>, actual: usize, bound: usize) -> Self {
        Error::SizeLimit {
            what: what.into(),
            actual,
            bound,
        }
    }

    /// Process exit code used by the command-line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::AxiomViolation { .. }
            | Error::NotOrthogonal(_)
            | Error::NonCommuting(_)
            | Error::HypothesisViolation(_) => 1,
            Error::SizeLimit { .. } | Error::WordExplosion { .. } | Error::UnsupportedInput(_) => 2,
            Error::MalformedSpec(_) | Error::ArityMismatch { .. } => 3,
        }
    }

    /// Short machine-readable tag, used in JSON reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::AxiomViolation { .. } => "AxiomViolation",
            Error::MalformedSpec(_) => "MalformedSpec",
            Error::SizeLimit { .. } => "SizeLimit",
            Error::WordExplosion { .. } => "WordExplosion",
            Error::UnsupportedInput(_) => "UnsupportedInput",
            Error::NotOrthogonal(_) => "NotOrthogonal",
            Error::NonCommuting(_) => "NonCommuting",
            Error::ArityMismatch { .. } => "ArityMismatch",
            Error::HypothesisViolation(_) => "HypothesisViolation",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
