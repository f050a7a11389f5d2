use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use ofip::cli::{cmd_example, cmd_interval, cmd_verify, VerifyArgs, EXIT_USAGE};
use ofip::verifier::Execution;

#[derive(Parser)]
#[command(name = "ofip", version, about = "Ordered-interval and fuzzy inner-product toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a randomized verification campaign and write JSON and CSV reports.
    Verify {
        #[arg(long)]
        config: PathBuf,
        /// Overrides the config's seed. Falls back to OFIP_SEED when neither is set.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        trials: Option<u64>,
        /// Overrides the config's report_path.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Worker threads; defaults to one per core.
        #[arg(long, conflicts_with = "serial")]
        threads: Option<usize>,
        /// Evaluate trials on the calling thread only.
        #[arg(long)]
        serial: bool,
    },
    /// Evaluate the closed-form fuzzy norm on ℝ² at one level.
    Example {
        #[arg(long)]
        alpha: f64,
        /// The two coordinates, comma separated.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        x: Vec<f64>,
    },
    /// Evaluate an ordered-interval expression such as "[3,4] (-) [2,10]".
    Interval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (mut out, mut err) = (std::io::stdout().lock(), std::io::stderr().lock());
    let code = match cli.command {
        Command::Verify {
            config,
            seed,
            trials,
            report,
            threads,
            serial,
        } => {
            let execution = match (serial, threads) {
                (true, _) => Execution::Serial,
                (false, Some(n)) => Execution::Threads(n),
                (false, None) => Execution::Parallel,
            };
            let args = VerifyArgs {
                config,
                seed,
                trials,
                report,
                execution,
            };
            cmd_verify(&args, &mut out, &mut err)
        }
        Command::Example { alpha, x } => match <[f64; 2]>::try_from(x.as_slice()) {
            Ok(x) => cmd_example(alpha, x, &mut out, &mut err),
            Err(_) => {
                eprintln!("error: --x takes exactly two comma-separated numbers, got {}", x.len());
                EXIT_USAGE
            }
        },
        Command::Interval { expr } => cmd_interval(&expr, &mut out, &mut err),
    };
    ExitCode::from(code as u8)
}
