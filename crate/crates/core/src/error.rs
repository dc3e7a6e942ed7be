use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A token in a pattern, word or morphism text could not be read.
    #[error("invalid token `{token}`: {reason}")]
    Parse { token: String, reason: String },

    /// An operation was called outside its domain.
    #[error("{0}")]
    Domain(String),

    /// An enumeration guard was exceeded.
    #[error("enumeration guard exceeded: {0}")]
    Guard(String),

    /// A budgeted search ran out of nodes before reaching a verdict.
    #[error("search budget of {max_nodes} nodes exhausted")]
    BudgetExhausted { max_nodes: u64 },

    /// A sweep contradicted a proven statement. Only an implementation bug can cause this.
    #[error("theorem violated by pattern `{pattern}`: {detail}")]
    TheoremViolation { pattern: String, detail: String },
}

impl Error {
    pub(crate) fn parse(token: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            token: token.into(),
            reason: reason.into(),
        }
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
