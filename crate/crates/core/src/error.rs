use thiserror::Error;

use crate::roots::HcTriple;
use crate::symexpr::{LinExpr, Symbol};

#[derive(Debug, Error)]
pub enum Error {
    #[error("no value assigned to {0}")]
    MissingAssignment(Symbol),
    #[error("simple reflection index {0} is not in 1..=3")]
    InvalidIndex(u8),
    #[error("so(n,2) needs n >= 3, got {0}")]
    InvalidRank(u32),
    #[error("{0} is not even, cannot halve")]
    Parity(LinExpr),
    #[error("sign of k undetermined at {0}")]
    IndefiniteSign(HcTriple),
    #[error("highest-root image of {0} is not a member")]
    KsClosure(HcTriple),
    #[error("differential-operator edges contain a cycle")]
    Cycle,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid multiplet spec: {0}")]
    Spec(String),
    #[error("{0}")]
    Internal(String),
}

impl Error {
    /// True for errors caused by user input rather than broken invariants.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::Parse(_) | Error::Spec(_) | Error::InvalidRank(_) | Error::MissingAssignment(_)
        )
    }
}
