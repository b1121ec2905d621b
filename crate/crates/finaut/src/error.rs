#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] finaut_core::Error),
    #[error("unknown table `{0}`")]
    UnknownTable(String),
    #[error("bad data file {table}: {source}")]
    Data { table: String, source: serde_json::Error },
    #[error("usage: {0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
