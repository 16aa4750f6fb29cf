use thiserror::Error;

/// Errors surfaced by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The input violates a documented precondition.
    #[error("invalid input: {0}")]
    Input(String),
    /// A document could not be parsed.
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    /// A search ran past its configured node or assignment budget.
    #[error("budget of {0} exceeded")]
    BudgetExceeded(u64),
    /// An invariant that the construction relies on did not hold.
    #[error("consistency check failed: {0}")]
    Consistency(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}
