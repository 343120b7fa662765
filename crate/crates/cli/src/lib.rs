//! File formats, reports, rendering and batch runs behind the `tguard`
//! command-line tool.

pub mod bench;
pub mod error;
pub mod instance_file;
pub mod report;
pub mod run;
pub mod svg;

pub use error::{CliError, CliResult};
pub use instance_file::{parse_instance, serialize_instance, InstanceFile, SolutionFile};
pub use report::{Format, RunReport};
pub use run::Algo;
