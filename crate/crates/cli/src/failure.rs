//! Exit-code classes: 1 for domain failures, 2 for I/O and format failures.

use std::fmt;
use std::process::ExitCode;

use focal_core::Error;

#[derive(Debug)]
pub enum Failure {
    Domain(String),
    Format(String),
}

impl Failure {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            Self::Domain(_) => ExitCode::from(1),
            Self::Format(_) => ExitCode::from(2),
        }
    }

    /// Errors raised while reading an input file count as format failures
    /// whatever their kind.
    pub fn input(path: &str, e: Error) -> Self {
        Self::Format(format!("{path}: {e}"))
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Io(_) | Error::Json(_) | Error::Parse(_) => Self::Format(e.to_string()),
            _ => Self::Domain(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Self::Format(e.to_string())
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Domain(m) | Self::Format(m) => f.write_str(m),
        }
    }
}

pub type Outcome<T = ()> = Result<T, Failure>;
