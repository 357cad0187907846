use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use modclosure_cli::{run, Command, RandomFields};

#[derive(Parser, Debug)]
#[command(name = "modclosure", version, about = "Integral closures and multiplicities of polynomial submodules")]
struct Cli {
    /// Seed for the Monte Carlo multiplicities (default 42).
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Coefficients are drawn from [-bound, bound] (default 100).
    #[arg(long, global = true)]
    bound: Option<u32>,
    /// Number of random trials (default 5).
    #[arg(long, global = true)]
    trials: Option<u32>,
    #[command(subcommand)]
    command: Command,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let flags = RandomFields {
        seed: cli.seed,
        bound: cli.bound,
        trials: cli.trials,
    };
    let outcome = run(&cli.command, flags);
    let text = serde_json::to_string_pretty(&outcome.report).expect("reports are valid JSON");
    let mut out = std::io::stdout().lock();
    // a closed pipe is not worth a panic
    let _ = writeln!(out, "{text}");
    eprintln!("{}", outcome.summary);
    ExitCode::from(outcome.exit as u8)
}
