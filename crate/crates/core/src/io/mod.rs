//! Plain-text instance documents and run reports.

mod format;
mod report;

pub use format::{parse_instance, write_instance};
pub use report::{parse_colouring, RunReport};
