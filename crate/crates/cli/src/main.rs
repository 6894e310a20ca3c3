//! gmhd: run the pseudo-spectral GMHD solver, drive the verification suites,
//! and evaluate the closed-form classifiers.
//!
//! Exit codes: 0 success, 1 error, 2 blow-up signal from a run.

mod config;
mod runcmd;
mod verifycmd;

use clap::{Parser, Subcommand};

use gmhd_core::diag;
use gmhd_core::multiplier::GFamily;

#[derive(Parser)]
#[command(name = "gmhd", version, about = "Generalized-MHD pseudo-spectral solver and verification toolkit")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a simulation job described by a JSON config.
    Run {
        /// Path to the job config (JSON).
        config: std::path::PathBuf,
    },
    /// Run a verification suite and write JSON + CSV reports.
    Verify {
        /// partition | bernstein | lemma1 | gn | energy | exponents | all
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Grid points per axis where the suite uses a grid.
        #[arg(long)]
        grid: Option<usize>,
        /// Report directory (default: GMHD_OUTPUT_DIR or ./gmhd_out).
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Classify a dissipation regime; prints JSON.
    Classify {
        #[arg(long)]
        alpha: f64,
        #[arg(long, default_value_t = 0.0)]
        beta: f64,
        #[arg(long, default_value_t = 0.0)]
        gamma: f64,
        #[arg(long)]
        n: usize,
        /// unity | log_power
        #[arg(long, default_value = "log_power")]
        g_family: String,
    },
    /// Evaluate the interpolation exponent set; prints JSON.
    Exponents {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        lambda: f64,
    },
}

fn parse_family(name: &str) -> anyhow::Result<GFamily> {
    match name {
        "unity" => Ok(GFamily::Unity),
        "log_power" => Ok(GFamily::LogPower),
        other => Err(anyhow::anyhow!(
            "unsupported g family {other:?}: closed-form classification exists only for \"unity\" and \"log_power\""
        )),
    }
}

fn dispatch(cli: Cli) -> anyhow::Result<i32> {
    match cli.cmd {
        Cmd::Run { config } => runcmd::cmd_run(&config),
        Cmd::Verify { suite, seed, grid, out } => verifycmd::cmd_verify(&suite, seed, grid, out),
        Cmd::Classify { alpha, beta, gamma, n, g_family } => {
            let family = parse_family(&g_family)?;
            let report = diag::regime_classify(alpha, beta, family, gamma, n)?;
            println!("{}", serde_json::to_string_pretty(&report)?);
            Ok(0)
        }
        Cmd::Exponents { k, n, lambda } => {
            let set = diag::exponents(k, n, lambda)?;
            println!("{}", serde_json::to_string_pretty(&set)?);
            Ok(0)
        }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    match dispatch(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(1);
        }
    }
}
