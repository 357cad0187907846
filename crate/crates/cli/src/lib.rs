//! Command-line front end for `modclosure`: reads a JSON problem file, runs
//! one computation and reports JSON on stdout, a short summary on stderr.
//!
//! Exit codes: 0 success, 1 a computed negative verdict, 2 bad input,
//! 3 the answer could not be certified or the method does not apply.

pub mod commands;
pub mod problem;
pub mod registry;

use serde_json::Value;

pub use commands::{run, Command};
pub use problem::{Problem, ProblemFile, RandomFields};

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Core(modclosure::Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(msg) => write!(f, "{msg}"),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<modclosure::Error> for CliError {
    fn from(e: modclosure::Error) -> Self {
        CliError::Core(e)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exit {
    Success = 0,
    Negative = 1,
    InputError = 2,
    NotCertified = 3,
}

impl CliError {
    pub fn exit(&self) -> Exit {
        use modclosure::Error as E;
        match self {
            CliError::Input(_) => Exit::InputError,
            CliError::Core(
                E::NotCertified(_)
                | E::NotApplicable(_)
                | E::NoStabilization { .. }
                | E::InfiniteColength
                | E::InfiniteCovolume
                | E::Containment(_)
                | E::UnsupportedDimension(_),
            ) => Exit::NotCertified,
            CliError::Core(_) => Exit::InputError,
        }
    }
}

/// Result of one command.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub report: Value,
    pub summary: String,
    pub exit: Exit,
}

impl Outcome {
    pub fn ok(report: Value, summary: impl Into<String>) -> Self {
        Outcome {
            report,
            summary: summary.into(),
            exit: Exit::Success,
        }
    }

    /// Success or negative verdict depending on `verdict`.
    pub fn verdict(report: Value, summary: impl Into<String>, verdict: bool) -> Self {
        Outcome {
            report,
            summary: summary.into(),
            exit: if verdict { Exit::Success } else { Exit::Negative },
        }
    }

    pub fn from_error(e: &CliError) -> Self {
        let kind = match e.exit() {
            Exit::NotCertified => "not-certified",
            _ => "input",
        };
        Outcome {
            report: serde_json::json!({ "error": e.to_string(), "kind": kind }),
            summary: format!("error: {e}"),
            exit: e.exit(),
        }
    }
}
