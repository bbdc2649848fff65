use std::path::PathBuf;

use thiserror::Error;

use crate::root_datum::Series;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{series}{rank} is not an admissible Dynkin type")]
    InadmissibleRank { series: Series, rank: usize },

    #[error("unknown Dynkin series `{0}`")]
    UnknownSeries(String),

    #[error("not a forest of Dynkin diagrams: {0}")]
    NotDynkin(String),

    #[error("orientation contains a cycle")]
    CyclicOrientation,

    #[error("arrow set does not match the diagram: {0}")]
    ArrowMismatch(String),

    #[error("malformed orientation spec `{0}`")]
    BadOrientationSpec(String),

    #[error("root closure exceeded {0} roots; Cartan matrix is not of finite type")]
    NotFiniteType(usize),

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("{0}")]
    NotAntichain(String),

    #[error("antichain is not sincere")]
    NotSincere,

    #[error("enumeration of {label} is infeasible here: {reason}")]
    Infeasible { label: String, reason: String },

    #[error("unknown triangle series `{0}`")]
    UnknownTriangle(String),

    #[error("unknown output format `{0}`")]
    UnknownFormat(String),

    #[error("{path}:{line}: malformed b-file line `{text}`")]
    MalformedBFile {
        path: PathBuf,
        line: usize,
        text: String,
    },

    #[error("no fixture for {0} in {1}")]
    MissingFixture(String, PathBuf),

    #[error("network fetch failed: {0}")]
    Fetch(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
