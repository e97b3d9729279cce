//! Command-line layer over `insdel-core`: JSON code files, reports, the
//! built-in example registry and the subcommand implementations.

pub mod codefile;
pub mod commands;
pub mod encode;
pub mod error;
pub mod registry;
pub mod report;

pub use codefile::CodeFile;
pub use error::{CliError, Result};
pub use report::Report;
