//! File formats, JSON reports and parallel drivers for `em3-core`.

pub mod edgelist;
pub mod error;
pub mod report;
pub mod run;

pub use error::CliError;
