use thiserror::Error;

/// Exit code 2: the input could not be used.
pub const EXIT_INPUT: i32 = 2;
/// Exit code 1: the graph is not in the class (or a verdict is negative).
pub const EXIT_NEGATIVE: i32 = 1;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Library(#[from] ttwfree::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Library(ttwfree::Error::NotInClass(_)) => EXIT_NEGATIVE,
            _ => EXIT_INPUT,
        }
    }
}
