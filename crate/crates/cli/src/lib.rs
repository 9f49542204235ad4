//! Command-line front end for `fusion-burnside`.
//!
//! [`run`] executes one [`JobSpec`] and returns the exit code with the
//! rendered report, so the binary is a thin wrapper and tests can drive the
//! same path in-process.

pub mod bundled;
pub mod checks;
pub mod job;
pub mod report;

pub use job::{compute, run, Command, JobError, JobSpec, Outcome};
pub use report::{emit_report, Format, Report};
