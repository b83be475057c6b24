//! File formats, text rendering and command implementations for the `brt`
//! command-line tool.

pub mod commands;
pub mod format;
pub mod render;

use std::fmt;

use brt_core::Error;

pub const EXIT_OK: u8 = 0;
pub const EXIT_NEGATIVE: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_INTERNAL: u8 = 3;

/// An error together with the exit code it maps to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn new(code: u8, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }

    pub fn parse(message: impl Into<String>) -> Self {
        Self::new(EXIT_INPUT, message)
    }

    /// An error raised while reading or validating input.
    pub fn from_core_input(e: Error) -> Self {
        Self::new(EXIT_INPUT, e.to_string())
    }

    /// An error raised by a computation on validated input.
    pub fn from_core(e: Error) -> Self {
        let code = match e {
            Error::TooManyColumns { .. } => EXIT_INPUT,
            _ => EXIT_INTERNAL,
        };
        Self::new(code, e.to_string())
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for Failure {}
