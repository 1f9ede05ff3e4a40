use thiserror::Error;

use crate::bounds::BoundError;
use crate::degseq::SequenceError;
use crate::graph::GraphError;
use crate::oracle::OracleError;
use crate::report::ReportError;

/// Crate-wide error, one variant per module.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Sequence(#[from] SequenceError),
    #[error(transparent)]
    Bound(#[from] BoundError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Report(#[from] ReportError),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for resource guards (enumeration size limits) as opposed to bad input.
    pub fn is_resource_guard(&self) -> bool {
        matches!(
            self,
            Error::Oracle(OracleError::OutOfRange { .. } | OracleError::TooManyTrees { .. })
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
