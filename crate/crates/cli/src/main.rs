//! `kinteg`: analyze, generate and certify k-integrated community networks.

mod analyze;
mod certify;
mod generate;
mod output;
mod thresholds;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::output::Format;

/// Exit statuses are part of the interface.
pub mod exit {
    pub const OK: u8 = 0;
    pub const USAGE: u8 = 1;
    pub const BUDGET_EXHAUSTED: u8 = 2;
    pub const DISAGREEMENT: u8 = 3;
}

#[derive(Parser, Debug)]
#[command(name = "kinteg", version, about = "k-integration of community networks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Measure integration of a network given as edge and community files.
    Analyze(AnalyzeArgs),
    /// Write a minimal construction to disk and print its certificate.
    Generate(GenerateArgs),
    /// Find the least bridge count for an instance by search.
    Certify(CertifyArgs),
    /// Print the bridge and central-node thresholds for k = 1..kmax.
    Thresholds(ThresholdsArgs),
}

#[derive(Args, Debug)]
pub struct AnalyzeArgs {
    #[arg(long)]
    pub edges: PathBuf,
    #[arg(long)]
    pub communities: PathBuf,
    /// Bounds to check, comma separated.
    #[arg(long = "k", value_delimiter = ',', default_value = "1,2,3",
          value_parser = clap::value_parser!(u32).range(1..))]
    pub ks: Vec<u32>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Complete every community before measuring.
    #[arg(long)]
    pub localize: bool,
    /// Fail unless communities have equal size n >= r.
    #[arg(long)]
    pub strict_model: bool,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    CompleteJoin,
    TwoStar,
    ExtendedStar,
}

#[derive(Args, Debug)]
pub struct GenerateArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    #[arg(long)]
    pub r: usize,
    #[arg(long)]
    pub n: usize,
    /// Bridge pattern for extended-star: complete, star, path, cycle or figure1:K.
    #[arg(long, default_value = "complete")]
    pub quotient: String,
    /// File prefix; writes PREFIX.edges and PREFIX.communities.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Also write PREFIX.dot.
    #[arg(long, requires = "out")]
    pub dot: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exhaustive,
    Randomized,
}

#[derive(Args, Debug)]
pub struct CertifyArgs {
    #[arg(long, required_unless_present = "sizes")]
    pub r: Option<usize>,
    #[arg(long, required_unless_present = "sizes")]
    pub n: Option<usize>,
    /// Explicit community sizes, comma separated, instead of --r/--n.
    #[arg(long, value_delimiter = ',', conflicts_with_all = ["r", "n"])]
    pub sizes: Option<Vec<usize>>,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub k: u32,
    #[arg(long, value_enum, default_value_t = Mode::Exhaustive)]
    pub mode: Mode,
    /// Candidate sets the exhaustive search may examine.
    #[arg(long, default_value_t = 50_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Independent restarts for randomized mode.
    #[arg(long, default_value_t = 32, value_parser = clap::value_parser!(u32).range(1..))]
    pub trials: u32,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct ThresholdsArgs {
    #[arg(long)]
    pub r: u64,
    #[arg(long)]
    pub n: u64,
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
    pub kmax: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("KINTEG_LOG", "warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { exit::USAGE } else { exit::OK });
        }
    };
    let result = match cli.command {
        Command::Analyze(args) => analyze::run(&args),
        Command::Generate(args) => generate::run(&args),
        Command::Certify(args) => certify::run(&args),
        Command::Thresholds(args) => thresholds::run(&args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit::USAGE)
        }
    }
}
