//! Instance files, JSON reports and the commands behind the `rbvc` binary.

pub mod analyze;
mod error;
pub mod fcn;
pub mod format;
pub mod generate;
pub mod report;

pub use error::{CliError, Result};
