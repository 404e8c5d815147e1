use std::path::PathBuf;

use geoposet_core::construct::ConstructError;
use geoposet_core::filters::FilterError;
use geoposet_core::geometry::GeometryError;
use geoposet_core::graph::GraphError;
use geoposet_core::poset::PosetError;
use geoposet_core::realizer::RealizeError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("malformed input: {0}")]
    Format(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Filter(#[from] FilterError),
    #[error(transparent)]
    Realize(#[from] RealizeError),
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error(transparent)]
    Construct(#[from] ConstructError),
}

impl Error {
    pub fn format(msg: impl Into<String>) -> Self {
        Error::Format(msg.into())
    }

    /// True for errors caused by bad flags or unreadable input rather than
    /// by a failed computation.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::Io { .. }
                | Error::Json(_)
                | Error::Format(_)
                | Error::Graph(_)
                | Error::Filter(_)
                | Error::Realize(RealizeError::FamilyNotSupported(_) | RealizeError::InvalidBudget | RealizeError::InvalidTarget(_))
                | Error::Construct(ConstructError::TooSmall(..) | ConstructError::NotAPath(_))
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
