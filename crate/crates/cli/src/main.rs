use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use ttwfree::synthesis::Subclass;
use ttwfree_cli::{commands, read_graph, CliError, InputFormat, Outcome};

/// Recognition, decomposition and treewidth of (theta, triangle, wac)-free
/// graphs.
///
/// Exit codes: 0 in the class (or witness found), 1 not in the class (or
/// no witness), 2 input error.
#[derive(Parser)]
#[command(name = "ttwfree", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Graph file, or `-` for standard input.
    path: String,
    /// edge-list, dimacs or graph6 (default: from the extension).
    #[arg(long, short)]
    format: Option<InputFormat>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the class report as JSON.
    Check(Input),
    /// Write an optimal tree decomposition in PACE format.
    Treewidth {
        #[command(flatten)]
        input: Input,
        /// Output file (default: standard output).
        #[arg(long, short)]
        out: Option<String>,
    },
    /// Print the decomposition tree.
    Decompose {
        #[command(flatten)]
        input: Input,
        /// Emit Graphviz DOT.
        #[arg(long)]
        dot: bool,
    },
    /// Print an ear sequence of an atomic member.
    Ears(Input),
    /// Print a random member as an edge list.
    Generate {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        size: usize,
        /// even-wheel-free, even-hole-free or bipartite.
        #[arg(long)]
        subclass: Option<Subclass>,
        /// Build an atomic member (size is then approximate).
        #[arg(long)]
        atomic: bool,
    },
    /// Search for a pattern by brute force (`kuratowski` for planarity).
    Oracle {
        kind: String,
        #[command(flatten)]
        input: Input,
    },
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Check(i) => commands::cmd_check(&read_graph(&i.path, i.format)?),
        Command::Treewidth { input, out } => {
            let o = commands::cmd_treewidth(&read_graph(&input.path, input.format)?)?;
            match out {
                Some(path) if o.code == 0 => {
                    std::fs::write(&path, &o.stdout).map_err(|source| CliError::Io { path, source })?;
                    Ok(Outcome { stdout: String::new(), ..o })
                }
                _ => Ok(o),
            }
        }
        Command::Decompose { input, dot } => commands::cmd_decompose(&read_graph(&input.path, input.format)?, dot),
        Command::Ears(i) => commands::cmd_ears(&read_graph(&i.path, i.format)?),
        Command::Generate { seed, size, subclass, atomic } => commands::cmd_generate(seed, size, subclass, atomic),
        Command::Oracle { kind, input } => commands::cmd_oracle(&read_graph(&input.path, input.format)?, &kind),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(o) => {
            let _ = std::io::stdout().write_all(o.stdout.as_bytes());
            if let Some(note) = o.note {
                eprintln!("{note}");
            }
            ExitCode::from(o.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
