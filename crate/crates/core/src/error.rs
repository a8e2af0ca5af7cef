use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("malformed input: {0}")]
    Input(String),
    #[error("infeasible")]
    Infeasible,
    #[error("unbounded")]
    Unbounded,
    #[error("not positive: {0}")]
    NotPositive(String),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("face enumeration needs {forms} forms but the cap is {cap}; raise it with --cap-faces")]
    CapExceeded { forms: usize, cap: usize },
    #[error("window too small - differences not stabilized: {0}")]
    NotStabilized(String),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// Process exit code used by the command line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Dimension(_) | Error::Input(_) => 2,
            Error::Infeasible | Error::Unbounded | Error::NotPositive(_) | Error::Hypothesis(_) => 3,
            Error::CapExceeded { .. } | Error::NotStabilized(_) | Error::Overflow(_) => 4,
            Error::Internal(_) => 1,
        }
    }
}
