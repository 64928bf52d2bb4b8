use dieudonne_core::Error;
use std::fmt;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Parse { line: usize, column: usize, message: String },
    Unsupported(String),
    Numeric(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse { .. } => 2,
            CliError::Unsupported(_) => 3,
            CliError::Numeric(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Parse { line, column, message } => {
                write!(f, "parse error at line {line}, column {column}: {message}")
            }
            CliError::Unsupported(m) => write!(f, "unsupported: {m}"),
            CliError::Numeric(m) => write!(f, "numeric error: {m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { line, column, message } => CliError::Parse { line, column, message },
            Error::InvalidInput(_) | Error::GroupMismatch(_) | Error::PrimeMismatch(..) | Error::ContextMismatch(_) => {
                CliError::Usage(e.to_string())
            }
            Error::UnsupportedGroup(_) => CliError::Unsupported(e.to_string()),
            _ => CliError::Numeric(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}
