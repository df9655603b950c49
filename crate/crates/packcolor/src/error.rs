use std::path::PathBuf;

use packcolor_core::graph6::Graph6Error;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {source}")]
    Graph6 { line: usize, source: Graph6Error },
    #[error("no graph given: pass --graph or a graph6 line on standard input")]
    NoGraph,
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Domain(String),
    #[error("report: {0}")]
    Csv(#[from] csv::Error),
}

impl Error {
    pub fn domain(e: impl std::fmt::Display) -> Error {
        Error::Domain(e.to_string())
    }
}
