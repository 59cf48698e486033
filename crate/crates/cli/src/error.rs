use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] cover_ideals::Error),
    #[error("cannot read input: {0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Usage(String),
}
