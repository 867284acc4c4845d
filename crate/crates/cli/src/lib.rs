//! Command-line front end for `ttwfree`: graph formats, PACE output and
//! the subcommands.

pub mod commands;
pub mod error;
pub mod formats;
pub mod pace;

pub use commands::{cmd_check, cmd_decompose, cmd_ears, cmd_generate, cmd_oracle, cmd_treewidth, Outcome};
pub use error::CliError;
pub use formats::{parse_graph, write_dimacs, write_edge_list, write_graph6, InputFormat};

use std::io::Read;

/// Reads a graph from a path (`-` for standard input), guessing the format
/// from the extension unless one is given.
pub fn read_graph(path: &str, format: Option<InputFormat>) -> Result<ttwfree::Graph, CliError> {
    let text = if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|source| CliError::Io { path: path.to_string(), source })?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_string(), source })?
    };
    parse_graph(&text, format.unwrap_or_else(|| InputFormat::from_path(path)))
}
