//! Table verification, JSON reports and the command-line surface over
//! [`finaut_core`].
//!
//! Expected values ship as JSON data files, one per table, compiled into the
//! binary. [`verify::verify_table`] rebuilds each row and compares field by
//! field; [`cli::run`] drives everything from an argument vector.

pub mod caps;
pub mod cli;
pub mod data;
pub mod error;
pub mod report;
pub mod verify;

pub use finaut_core as core;

pub use caps::Caps;
pub use error::{Error, Result};
pub use report::{Check, Report, Status};
pub use verify::{verify_table, Filter};
