//! Error type shared by every module of the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Incompatible tensor extents for an operation.
    #[error("shape mismatch in {op}: {lhs} vs {rhs}")]
    Shape {
        op: &'static str,
        lhs: String,
        rhs: String,
    },

    /// A caller broke an operation's contract (non-scalar backward root,
    /// even window size, missing gradient, ...).
    #[error("contract violation: {0}")]
    Contract(String),

    /// Malformed manifest or config text.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// Checkpoint does not match the model it is loaded into.
    #[error("checkpoint incompatible: {0}")]
    Checkpoint(String),

    /// Training aborted on a non-finite loss. The last finite checkpoint
    /// (if any was written) stays on disk.
    #[error("training diverged at iteration {iteration}: loss is not finite")]
    Diverged { iteration: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn shape(op: &'static str, lhs: impl ToString, rhs: impl ToString) -> Self {
        Error::Shape {
            op,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }
}
