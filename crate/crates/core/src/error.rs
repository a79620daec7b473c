use thiserror::Error;

use crate::picard::DivisorClass;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// `d + a + b + c` is not divisible by 3, so the coordinates do not lie in Pic X.
    #[error("not a member of Pic X: d + a + b + c = {sum} is not divisible by 3")]
    Membership { sum: i64 },

    /// Explicit starred coordinates disagree with the ones derived from the truncated part.
    #[error("starred coordinates {given} disagree with derived {derived}")]
    StarredMismatch { given: String, derived: String },

    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("integer overflow in divisor arithmetic")]
    Overflow,

    #[error("reduced effective divisor {0} matches no known family")]
    ClassificationGap(String),

    #[error("torsion {tau} violates the reduced-form constraint of family {family}")]
    InvalidTau { family: String, tau: String },

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("step budget of {budget} exhausted")]
    BudgetExceeded { budget: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),
}

impl Error {
    pub(crate) fn gap(d: &DivisorClass) -> Self {
        Error::ClassificationGap(d.to_string())
    }
}
