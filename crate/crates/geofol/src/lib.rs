//! Documents, reports, scans and the `geo` command line on top of
//! [`geofol_core`].

pub mod cli;
pub mod document;
pub mod error;
pub mod outcome;
pub mod report;
pub mod scan;

pub use error::CliError;
