//! Expression language, output formats and subcommands for the `hypalg` tool.

use std::fmt;

pub mod commands;
pub mod eval;
pub mod expr;
pub mod format;
pub mod verify;

pub use eval::{eval, eval_str, EvalError, Value};
pub use expr::{parse, Expr, SyntaxError};

#[derive(Debug)]
pub enum CliError {
    Syntax(SyntaxError),
    Eval(EvalError),
}

impl CliError {
    /// 2 for syntax, type and domain errors; 3 for division by a zero divisor.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Eval(EvalError::Algebra { error: hypalg_core::Error::ZeroDivisor, .. }) => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Syntax(e) => e.fmt(f),
            CliError::Eval(e) => e.fmt(f),
        }
    }
}

impl std::error::Error for CliError {}

impl From<SyntaxError> for CliError {
    fn from(e: SyntaxError) -> Self {
        CliError::Syntax(e)
    }
}

impl From<EvalError> for CliError {
    fn from(e: EvalError) -> Self {
        CliError::Eval(e)
    }
}
