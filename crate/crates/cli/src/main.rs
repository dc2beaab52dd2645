use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

use commands::{CliError, Outcome};

#[derive(Parser)]
#[command(
    name = "trigspline",
    version,
    about = "Trigonometric-spline spectral analysis of sampled periodic signals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a signal description (JSON), or its samples (CSV) when --n is given
    GenSignal(GenSignalArgs),
    /// Discrete Fourier coefficients of the sampled signal
    Dft(DftArgs),
    /// Build the spline; writes JSON to --out plus <stem>.unfolded.csv and <stem>.eval.csv
    Spline(SplineArgs),
    /// Filter response alpha(r, j) for one or more orders
    Response(ResponseArgs),
    /// Fold sums against the discrete coefficients, with the aliasing bound
    Alias(AliasArgs),
    /// Check one coefficient or approximation bound
    Bounds(BoundsArgs),
}

#[derive(Args, Clone)]
#[group(required = true, multiple = false)]
pub struct SignalSource {
    /// Signal description file (JSON)
    #[arg(long, value_name = "PATH")]
    pub signal: Option<PathBuf>,
    /// Signal description given inline (JSON)
    #[arg(long, value_name = "JSON")]
    pub inline: Option<String>,
    /// Built-in test signal by name
    #[arg(long, value_name = "NAME")]
    pub suite: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Args)]
pub struct Common {
    /// Output file (stdout when omitted)
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Series truncation tolerance
    #[arg(long, value_name = "FLOAT", default_value_t = 1e-12)]
    pub tail_tol: f64,
}

#[derive(Args)]
pub struct GenSignalArgs {
    #[command(flatten)]
    pub source: SignalSource,
    /// Sample on N = 2n + 1 nodes and write CSV
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct DftArgs {
    #[command(flatten)]
    pub source: SignalSource,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args)]
pub struct KernelArgs {
    /// Spline order
    #[arg(long, default_value_t = 3)]
    pub r: u32,
    #[arg(long, default_value = "sinc", value_parser = ["sinc", "abs-sinc", "inv-power"])]
    pub variant: String,
    /// Cap on directly summed terms in the class sums
    #[arg(long, value_name = "INT", default_value_t = 1_000_000)]
    pub m_max_cap: usize,
}

#[derive(Args)]
pub struct SplineArgs {
    #[command(flatten)]
    pub source: SignalSource,
    #[arg(long)]
    pub n: usize,
    #[command(flatten)]
    pub kernel: KernelArgs,
    /// Last index of the unfolded spectrum (default 4N)
    #[arg(long, value_name = "INT")]
    pub j_max: Option<u64>,
    /// Evaluate on P uniform points and write <stem>.eval.csv
    #[arg(long, value_name = "P")]
    pub eval_grid: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args)]
pub struct ResponseArgs {
    #[arg(long)]
    pub n: usize,
    /// Comma-separated spline orders
    #[arg(long, value_name = "LIST", default_value = "1,3,10")]
    pub r: String,
    #[arg(long, default_value = "sinc", value_parser = ["sinc", "abs-sinc", "inv-power"])]
    pub variant: String,
    /// Last index j (default 2N; must be at least n)
    #[arg(long, value_name = "INT")]
    pub j_max: Option<usize>,
    #[arg(long, value_name = "INT", default_value_t = 1_000_000)]
    pub m_max_cap: usize,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args)]
pub struct AliasArgs {
    #[command(flatten)]
    pub source: SignalSource,
    #[arg(long)]
    pub n: usize,
    /// Multiply every bound by this factor before checking it
    #[arg(long, value_name = "FLOAT", default_value_t = 1.0)]
    pub bound_scale: f64,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args)]
pub struct BoundsArgs {
    #[command(flatten)]
    pub source: SignalSource,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value = "alias", value_parser = ["coeff", "alias", "time", "cnorm", "refined"])]
    pub kind: String,
    #[command(flatten)]
    pub kernel: KernelArgs,
    /// Multiply every bound by this factor before checking it
    #[arg(long, value_name = "FLOAT", default_value_t = 1.0)]
    pub bound_scale: f64,
    #[command(flatten)]
    pub common: Common,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::GenSignal(a) => commands::gen_signal(&a),
        Command::Dft(a) => commands::dft(&a),
        Command::Spline(a) => commands::spline(&a),
        Command::Response(a) => commands::response(&a),
        Command::Alias(a) => commands::alias(&a),
        Command::Bounds(a) => commands::bounds(&a),
    };
    match result.and_then(Outcome::write) {
        Ok(violation) => {
            if violation {
                eprintln!("bound or identity violation detected");
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                CliError::Config(_) => 2,
                CliError::Numerical(_) => 3,
            })
        }
    }
}
