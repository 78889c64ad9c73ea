use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("resource cap exceeded: {0}")]
    CapExceeded(String),

    #[error("inexact division")]
    InexactDivision,

    #[error("linear system is inconsistent")]
    Inconsistent,

    #[error("linear system is underdetermined")]
    Underdetermined,

    #[error("internal invariant violated: {0}")]
    Internal(String),
}
