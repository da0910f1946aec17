use clap::{Args, Parser, Subcommand};
use qsdc_cli::scenario::Scenario;
use qsdc_cli::{cmd_bounds, cmd_codes, cmd_codes_enumerator, cmd_codes_of, cmd_simulate, cmd_verify, CliError};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "qsdc", version, about = "Key-length bounds and block-protocol simulation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// JSON scenario file.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Seed overriding the scenario seed.
    #[arg(long)]
    seed: Option<u64>,
    /// Worker threads for grid sweeps (0 = all cores).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Output file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the key-length bounds over the scenario grid (CSV).
    Bounds(Common),
    /// Run a protocol session and emit its transcript (CSV).
    Simulate(Common),
    /// Run the randomized identity and oracle checks.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Random instances per suite.
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// Added to the single-letter variance to exercise the failure path.
        #[arg(long, default_value_t = 0.0, hide = true)]
        perturb_v: f64,
    },
    /// Weight statistics of a code (built-in name or generator file).
    Codes {
        #[command(flatten)]
        common: Common,
        /// Code name or generator file; defaults to the scenario's code.
        code: Option<String>,
        /// Weight-enumerator file with `weight count` lines.
        #[arg(long, conflicts_with = "code")]
        enumerator: Option<PathBuf>,
    },
}

fn scenario(common: &Common) -> Result<Scenario, CliError> {
    match &common.config {
        Some(path) => Scenario::load(path),
        None => Ok(Scenario::default()),
    }
}

fn emit(common: &Common, text: &str) -> Result<(), CliError> {
    match &common.out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Bounds(common) => {
            let mut sc = scenario(&common)?;
            sc.seed = common.seed.or(sc.seed);
            emit(&common, &cmd_bounds(&sc, common.jobs)?)?;
            Ok(true)
        }
        Command::Simulate(common) => {
            let sc = scenario(&common)?;
            emit(&common, &cmd_simulate(&sc, common.seed)?)?;
            Ok(true)
        }
        Command::Verify { common, trials, perturb_v } => {
            let seed = common.seed.or(scenario(&common)?.seed).unwrap_or(0);
            let (report, ok) = cmd_verify(trials, seed, perturb_v)?;
            emit(&common, &report)?;
            Ok(ok)
        }
        Command::Codes { common, code, enumerator } => {
            let text = match (enumerator, code) {
                (Some(path), _) => cmd_codes_enumerator(&path)?,
                (None, Some(spec)) => cmd_codes(&spec)?,
                (None, None) => cmd_codes_of(&scenario(&common)?.code()?)?,
            };
            emit(&common, &text)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("qsdc: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
