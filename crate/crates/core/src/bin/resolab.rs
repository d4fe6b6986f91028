use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use resolab::lab::{self, Experiment, ExperimentConfig, Report};
use resolab::Error;

/// Resonance laboratory: oracle tables, contour solves and deformation experiments.
#[derive(Parser)]
#[command(version, about)]
struct Cli {
    experiment: Experiment,
    /// Experiment configuration (JSON).
    #[arg(long)]
    config: PathBuf,
    /// Output directory; overrides `output_dir` of the config.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Overrides `seed` of the config.
    #[arg(long)]
    seed: Option<u64>,
}

fn init_threads() -> Result<(), String> {
    let Ok(value) = std::env::var("RESOLAB_THREADS") else { return Ok(()) };
    let n: usize = value.parse().map_err(|_| format!("RESOLAB_THREADS must be a positive integer, got `{value}`"))?;
    if n == 0 {
        return Err("RESOLAB_THREADS must be positive".into());
    }
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(msg) = init_threads() {
        eprintln!("resolab: {msg}");
        return ExitCode::from(1);
    }
    let mut config = match ExperimentConfig::from_file(&cli.config) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("resolab: {}: {e}", cli.config.display());
            return ExitCode::from(1);
        }
    };
    if config.experiment != cli.experiment {
        eprintln!(
            "resolab: config is for `{}`, not `{}`",
            config.experiment.as_str(),
            cli.experiment.as_str()
        );
        return ExitCode::from(1);
    }
    if let Some(seed) = cli.seed {
        config.seed = seed;
    }
    if let Some(out) = cli.out {
        config.output_dir = out;
    }
    let report = match lab::run(&config) {
        Ok(r) => r,
        Err(e @ Error::PreFlight(_)) => {
            eprintln!("resolab: {e}");
            return ExitCode::from(2);
        }
        Err(e) => {
            eprintln!("resolab: {e}");
            return ExitCode::from(1);
        }
    };
    match lab::write_outputs(&config, &report, &config.output_dir) {
        Ok(paths) => {
            for p in paths {
                println!("{}", p.display());
            }
        }
        Err(e) => {
            eprintln!("resolab: writing outputs: {e}");
            return ExitCode::from(1);
        }
    }
    if let Report::Split(s) = &report {
        if !s.stable {
            eprintln!("resolab: FAILED-STABILITY: total multiplicity inside the contour changed along t");
            return ExitCode::from(3);
        }
    }
    ExitCode::SUCCESS
}
