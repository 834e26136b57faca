//! Command-line front end: group descriptions, the threaded pipeline, and
//! text or JSON reports.

pub mod parse;
pub mod pipeline;
pub mod run;

pub use parse::{parse_group_spec, GroupSpec, ParseError};
pub use run::{run, Command, Format, Outcome, RunConfig};
