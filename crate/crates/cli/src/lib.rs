//! Command-line front end for `ybasis-core`.
//!
//! Every subcommand writes a single document to stdout (or `--out`) in
//! JSON, LaTeX or plain text. Exit status is 0 on success, 1 when a
//! verification fails and 2 for usage or input errors.

mod commands;
pub mod config;
pub mod json;

pub use commands::{run, EXIT_FAILED, EXIT_OK, EXIT_USAGE};
