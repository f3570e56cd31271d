//! Command-line front end: JSON documents in, verdict JSON out.
//!
//! Exit codes: 0 when the verdict is true or a construction succeeded, 1
//! when the verdict is false, 2 for unusable input.

pub mod document;
pub mod ops;
pub mod properties;
pub mod report;

pub use document::{parse_json, serialize, CliError, Document, Kind, Resolver};
pub use ops::{execute, run_task, Options, OPERATIONS};
pub use report::{Check, Report};
