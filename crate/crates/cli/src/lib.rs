//! Library side of the `cdgraph` command: graph file formats, report
//! documents and the subcommands.

pub mod commands;
pub mod graph_file;
pub mod report;

pub use commands::{Outcome, Span, Which, EXIT_DOMAIN, EXIT_OK, EXIT_USAGE};
pub use graph_file::{Format, GraphFile, ParseError};
