//! File formats, text rendering and the command-line front end for
//! [`conifold_core`].

pub mod cli;
mod error;
pub mod formats;
pub mod render;

pub use error::{CliError, Result};
