//! `cliquehom`: exact homology of clique/independence complexes, gadget
//! construction and the circuit-to-graph reduction, from the command line.
//!
//! Reports are JSON on stdout (or `--out`); `--human` prints key/value
//! lines instead. Exit status: 0 yes/nontrivial/pass, 1 no/trivial/fail,
//! 2 error (with an error object on stdout).

mod error;
mod run;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::CliError;

#[derive(Parser, Debug)]
#[command(name = "cliquehom", version, about = "Exact clique-complex homology and the circuit-to-graph reduction")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Largest complex dimension materialized (default from CLIQUEHOM_MAX_DIM or 25)
    #[arg(long, global = true)]
    pub max_dim: Option<usize>,
    /// Largest qubit count for dense oracles (default from CLIQUEHOM_DENSE_CAP or 14)
    #[arg(long, global = true)]
    pub dense_cap: Option<usize>,
    /// Seed for the randomized self-check
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Mediator adjacency used when filling a state's cycle
    #[arg(long, global = true, value_enum)]
    pub policy: Option<Policy>,
    /// Key/value lines instead of JSON
    #[arg(long, global = true)]
    pub human: bool,
    /// Write the primary output here instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Disable internal parallelism
    #[arg(long, global = true)]
    pub sequential: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Policy {
    Edge,
    EdgeOrVertex,
    EdgeAndFans,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModeArg {
    Clique,
    Independence,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Reduce a circuit or projector instance to a graph
    Reduce(ReduceArgs),
    /// Decide whether β_l of the independence (or clique) complex is nonzero
    Betti {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        dim: usize,
        #[arg(long, value_enum, default_value = "independence")]
        mode: ModeArg,
    },
    /// Complex-level queries
    Complex {
        #[command(subcommand)]
        command: ComplexCommand,
    },
    /// Graph transformations
    Graph {
        #[command(subcommand)]
        command: GraphCommand,
    },
    /// Build, list and verify gadgets
    Gadget {
        #[command(subcommand)]
        command: GadgetCommand,
    },
    /// Dense count of states annihilated by every projector
    Oracle(SourceArgs),
    /// Hard-core fermion checks
    Susy {
        #[command(subcommand)]
        command: SusyCommand,
    },
    /// Randomized end-to-end cross-checks seeded by --seed
    Selfcheck {
        #[arg(long, default_value_t = 20)]
        cases: usize,
    },
}

#[derive(Args, Debug)]
pub struct SourceArgs {
    /// Circuit text file
    #[arg(long, conflicts_with = "instance", required_unless_present = "instance")]
    pub circuit: Option<PathBuf>,
    /// Projector instance JSON
    #[arg(long)]
    pub instance: Option<PathBuf>,
    /// Sparsify the circuit before building its projectors
    #[arg(long, requires = "circuit")]
    pub sparsify: bool,
}

#[derive(Args, Debug)]
pub struct ReduceArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    /// Emit the complement, whose clique complex carries the same homology
    #[arg(long)]
    pub complement: bool,
    /// Also write the projector instance JSON here
    #[arg(long)]
    pub emit_instance: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum ComplexCommand {
    /// Betti numbers of the clique (or independence) complex
    Betti {
        #[arg(long)]
        graph: PathBuf,
        /// Single dimension; omit for the whole complex
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long, value_enum, default_value = "clique")]
        mode: ModeArg,
    },
}

#[derive(Subcommand, Debug)]
pub enum GraphCommand {
    /// Complement graph
    Complement {
        #[arg(long)]
        graph: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
pub enum GadgetCommand {
    /// Names accepted by `gadget build`
    List,
    /// Build a catalogued gadget, or one for an arbitrary state
    Build {
        #[arg(conflicts_with = "state", required_unless_present = "state")]
        name: Option<String>,
        /// Target state such as "|01> - |10>"
        #[arg(long)]
        state: Option<String>,
    },
    /// Check which cycles a gadget lifts
    Verify { gadget: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum SusyCommand {
    /// Ground-space dimensions per fermion number vs reduced Betti numbers
    Check {
        #[arg(long)]
        graph: PathBuf,
        /// Largest number of independent sets to build
        #[arg(long, default_value_t = susy::DEFAULT_STATE_CAP)]
        cap: usize,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let err = CliError::Usage(e.render().to_string().trim().to_string());
            println!("{}", err.to_json());
            return ExitCode::from(2);
        }
    };
    match run::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            if cli.global.human {
                eprintln!("error ({}): {e}", e.kind());
            } else {
                println!("{}", e.to_json());
            }
            ExitCode::from(2)
        }
    }
}
