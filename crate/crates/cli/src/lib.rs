//! Library half of the `coverideal` command: graph parsing, the command
//! runner and report rendering.

pub mod error;
pub mod parse;
pub mod report;
pub mod run;
pub mod text;

pub use error::CliError;
pub use parse::parse_graph;
pub use report::RunReport;
pub use run::{run, run_on_text, Cli, Outcome};
