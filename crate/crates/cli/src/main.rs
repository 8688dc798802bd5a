//! `kbonacci`: enumerate k-bonacci words, expand their generating functions
//! and verify everything against brute force.

mod commands;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kbonacci::verify::DEFAULT_HAM_CAP;
use thiserror::Error;

/// Top-level command line.
#[derive(Parser, Debug)]
#[command(name = "kbonacci", version, about, arg_required_else_help = true)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Longest word length for which Hamiltonicity is searched.
    #[arg(long, default_value_t = DEFAULT_HAM_CAP, global = true)]
    ham_cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Number of length-n words avoiding k consecutive 1's.
    Count(CountArgs),
    /// List every word of length n, optionally with statistics.
    Enumerate(EnumerateArgs),
    /// Coefficients of a generating function.
    Series(SeriesArgs),
    /// Cross-check series and closed forms against brute force.
    Verify(VerifyArgs),
    /// Degree proportions at length n against their limits.
    Asymptotics(AsymptoticsArgs),
    /// One term of a named Fibonacci sequence.
    Sequence(SequenceArgs),
}

#[derive(Args, Debug)]
pub struct CountArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 2)]
    pub k: usize,
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    /// Add area, semiperimeter, graph size, degree counts and Hamiltonicity.
    #[arg(long)]
    pub with_stats: bool,
    /// Draw each polyomino.
    #[arg(long)]
    pub draw: bool,
    /// Emit each grid graph in Graphviz DOT.
    #[arg(long)]
    pub dot: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeriesFamily {
    Poly,
    Graph,
    Degree,
    Ham,
    Area,
    Perimeter,
    Vertices,
    Edges,
    Deg2,
    Deg3,
    Deg4,
    HamTotal,
}

#[derive(Args, Debug)]
pub struct SeriesArgs {
    #[arg(long, value_enum)]
    pub family: SeriesFamily,
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    /// Number of coefficients, starting at x^1.
    #[arg(long, default_value_t = 10)]
    pub terms: usize,
    /// Comma-separated auxiliary variables to set to 1.
    #[arg(long, value_delimiter = ',')]
    pub vars_at_1: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    All,
    Poly,
    Graph,
    Degree,
    Ham,
    Formulas,
    Reversal,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = SuiteArg::All)]
    pub suite: SuiteArg,
    #[arg(long, default_value_t = 10)]
    pub max_n: usize,
    #[arg(long, default_value_t = 5)]
    pub max_k: usize,
    /// Report every elapsed time as 0 so output is byte-stable.
    #[arg(long)]
    pub no_timings: bool,
    /// Evaluate checks on one thread.
    #[arg(long)]
    pub sequential: bool,
}

#[derive(Args, Debug)]
pub struct AsymptoticsArgs {
    /// 2, 3 or 4; all three when omitted.
    #[arg(long)]
    pub degree: Option<usize>,
    #[arg(long, default_value_t = 2000)]
    pub n: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SequenceArg {
    T,
    V,
    D2,
    D3,
    D4,
    Area,
    Narayana,
}

#[derive(Args, Debug)]
pub struct SequenceArgs {
    #[arg(long, value_enum)]
    pub name: SequenceArg,
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] kbonacci::Error),
    #[error("{0}")]
    Usage(String),
}

/// Rendered output plus whether the command's checks all passed.
pub struct Output {
    pub text: String,
    pub ok: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, ok: true }
    }
}

fn run(cli: Cli) -> Result<Output, CliError> {
    let (fmt, cap) = (cli.format, cli.ham_cap);
    match cli.command {
        Command::Count(a) => commands::count(&a, fmt).map(Output::ok),
        Command::Enumerate(a) => commands::enumerate(&a, fmt, cap).map(Output::ok),
        Command::Series(a) => commands::series(&a, fmt).map(Output::ok),
        Command::Verify(a) => commands::verify(&a, fmt, cap),
        Command::Asymptotics(a) => commands::asymptotics(&a, fmt).map(Output::ok),
        Command::Sequence(a) => commands::sequence(&a, fmt).map(Output::ok),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.text.as_bytes());
            let _ = stdout.flush();
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
