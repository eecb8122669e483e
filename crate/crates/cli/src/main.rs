mod commands;
mod error;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use jacobi_moments::rational::parse_rational;
use jacobi_moments::Rational;

use crate::error::CliError;

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

#[derive(Parser, Debug)]
#[command(name = "jacobi-moments", version, about = "Exact moments and large-N limits for the Jacobi unitary ensemble")]
struct Cli {
    /// Write the result to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// I_k = <p_k> at fixed (a, b, N).
    Ik(IkArgs),
    /// lim I_k / N under a = a1 N + a0, b = b1 N + b0.
    Limit(LimitArgs),
    /// Finite-N convergence table as CSV.
    Table(TableArgs),
    /// Run the invariant suites.
    Verify(VerifyArgs),
    /// Metropolis estimate of <p_k> with a z-score against the exact value.
    Mc(McArgs),
}

#[derive(Args, Debug)]
pub struct IkArgs {
    #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
    pub k: i64,
    #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
    pub n: i64,
    #[arg(long, value_parser = rational, allow_negative_numbers = true)]
    pub a: Rational,
    #[arg(long, value_parser = rational, allow_negative_numbers = true)]
    pub b: Rational,
    /// Also evaluate the hook-sum, density and brute-force routes where they apply.
    #[arg(long)]
    pub cross_check: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum LimitForm {
    General,
    L1l2,
    AutoSpecial,
}

#[derive(Args, Debug)]
pub struct LimitArgs {
    #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
    pub k: i64,
    #[arg(long, value_parser = rational, allow_negative_numbers = true)]
    pub a1: Rational,
    #[arg(long, value_parser = rational, allow_negative_numbers = true)]
    pub b1: Rational,
    #[arg(long, value_enum, default_value_t = LimitForm::General)]
    pub form: LimitForm,
    /// For the a1 = 0 and b1 = 0 families, also print the limit as a function of l.
    #[arg(long)]
    pub symbolic: bool,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
    pub k_max: i64,
    #[arg(long, value_parser = rational, allow_negative_numbers = true)]
    pub a1: Rational,
    #[arg(long, value_parser = rational, allow_negative_numbers = true)]
    pub b1: Rational,
    #[arg(long, value_parser = rational, allow_negative_numbers = true, default_value = "1")]
    pub a0: Rational,
    #[arg(long, value_parser = rational, allow_negative_numbers = true, default_value = "1")]
    pub b0: Rational,
    /// Comma-separated matrix sizes.
    #[arg(long, value_delimiter = ',', num_args = 1.., required = true)]
    pub n_list: Vec<String>,
    /// Skip cells with a vanishing factor instead of failing.
    #[arg(long)]
    pub skip_degenerate: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteArg {
    All,
    Identities,
    Oracles,
    Limits,
    Conjecture,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = SuiteArg::All)]
    pub suite: SuiteArg,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct McArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub k: u32,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub n: u32,
    #[arg(long, value_parser = rational, allow_negative_numbers = true)]
    pub a: Rational,
    #[arg(long, value_parser = rational, allow_negative_numbers = true)]
    pub b: Rational,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[arg(long, default_value_t = 100_000)]
    pub samples: u64,
    #[arg(long, default_value_t = 2_000)]
    pub burn_in: u64,
    #[arg(long, default_value_t = 1)]
    pub thinning: u64,
    #[arg(long, default_value_t = 0.2, allow_negative_numbers = true)]
    pub step_width: f64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = cli.out.as_deref();
    let result = match cli.command {
        Command::Ik(args) => commands::ik(&args, out),
        Command::Limit(args) => commands::limit(&args, out),
        Command::Table(args) => commands::table(&args, out),
        Command::Verify(args) => commands::verify(&args, out),
        Command::Mc(args) => commands::mc(&args, out),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if !matches!(e, CliError::Verification(_)) {
                eprintln!("jacobi-moments: {e}");
            }
            e.exit_code()
        }
    }
}
