//! Instance files, reports and the analysis pipeline behind the CLI.

pub mod pipeline;
pub mod report;
pub mod schema;

pub use pipeline::{run_analyze, AppError, Command, RunConfig, RunOutcome};
pub use report::RegionReport;
pub use schema::{parse_instance, parse_instance_str, InstanceFile, InstanceSpec};
