use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A value outside the mathematical domain of an operation, e.g. an
    /// asymptote requested for a zero delay spread.
    #[error("domain error: {0}")]
    Domain(String),

    /// A constructor argument that violates a type invariant.
    #[error("invalid {what}: {reason}")]
    Invalid { what: &'static str, reason: String },

    #[error("cannot parse quantity {input:?}: {reason}")]
    Quantity { input: String, reason: String },

    #[error("unknown table {0:?}")]
    UnknownTable(String),

    #[error("unknown field {field:?} (known fields: {known})")]
    UnknownField { field: String, known: String },

    #[error("invalid filter expression {0:?}")]
    Filter(String),

    #[error("{path}: {} malformed row(s): {}", rows.len(), rows.iter().map(|r| r.to_string()).collect::<Vec<_>>().join("; "))]
    CsvRows { path: String, rows: Vec<RowIssue> },

    #[error("{path}: {reason}")]
    CsvSchema { path: String, reason: String },

    #[error("infeasible channel discretization: {0}")]
    Discretization(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("write failed: {0}")]
    Write(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn invalid(what: &'static str, reason: impl Into<String>) -> Self {
        Error::Invalid {
            what,
            reason: reason.into(),
        }
    }

    pub(crate) fn domain(reason: impl Into<String>) -> Self {
        Error::Domain(reason.into())
    }

    /// True for errors that come from the numeric domain of the model
    /// rather than from malformed input.
    pub fn is_domain(&self) -> bool {
        matches!(self, Error::Domain(_) | Error::Discretization(_))
    }
}

/// A rejected CSV row.
#[derive(Debug, Clone, PartialEq)]
pub struct RowIssue {
    pub line: u64,
    pub reason: String,
}

impl std::fmt::Display for RowIssue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}: {}", self.line, self.reason)
    }
}

pub type Result<T> = std::result::Result<T, Error>;
