use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use fusion_burnside_cli::{run, Command, Format, JobSpec};

/// Burnside rings, fusion systems and their prime ideals.
#[derive(Parser)]
#[command(name = "fusion-burnside", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Table of marks of a group
    Marks(Common),
    /// Conjugacy classes of subgroups
    Subgroups(Common),
    /// F-classes of a fusion system
    Fusion(Common),
    /// The alpha basis of A(F)
    Alpha(Common),
    /// Prime ideals of A(F) or A(F)_(p)
    Ideals {
        #[command(flatten)]
        common: Common,
        /// Work in the p-localized ring
        #[arg(long)]
        localized: bool,
        /// Primes q for the type q ideals, e.g. 3,5
        #[arg(long, value_delimiter = ',')]
        primes: Vec<u64>,
    },
    /// Run the invariant suite
    Check {
        /// Suite name
        #[arg(default_value = "d8-suite")]
        suite: String,
        /// Include the slower bounded searches
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

#[derive(Args)]
struct Common {
    /// Group file or fusion spec (JSON)
    input: Option<PathBuf>,
    /// Ambient group file; the fusion system lives on its Sylow p-subgroup
    #[arg(long)]
    ambient: Option<PathBuf>,
    #[arg(long)]
    p: Option<u64>,
    /// Element indices of the Sylow subgroup, in the order that numbers it
    #[arg(long, value_delimiter = ',')]
    sylow: Option<Vec<usize>>,
    /// JSON labels: a list in --sylow order, or a map from element index
    #[arg(long)]
    labels: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

impl Common {
    fn into_spec(self, command: Command) -> JobSpec {
        JobSpec {
            input: self.input,
            ambient: self.ambient,
            p: self.p,
            sylow: self.sylow,
            labels: self.labels,
            format: self.format,
            ..JobSpec::new(command)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let spec = match cli.command {
        Cmd::Marks(c) => c.into_spec(Command::Marks),
        Cmd::Subgroups(c) => c.into_spec(Command::Subgroups),
        Cmd::Fusion(c) => c.into_spec(Command::Fusion),
        Cmd::Alpha(c) => c.into_spec(Command::Alpha),
        Cmd::Ideals {
            common,
            localized,
            primes,
        } => JobSpec {
            localized,
            primes,
            ..common.into_spec(Command::Ideals)
        },
        Cmd::Check { suite, all, format } => JobSpec {
            input: Some(PathBuf::from(suite)),
            all,
            format,
            ..JobSpec::new(Command::Check)
        },
    };
    let outcome = run(&spec);
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
