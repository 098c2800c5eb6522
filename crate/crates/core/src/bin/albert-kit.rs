use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use albert_kit::cli::{exit_code, run, Command, Lemma, EXIT_CONFIG};
use albert_kit::config::RunConfig;
use albert_kit::scalars::GroundField;
use albert_kit::{Error, Result};

/// Exact verification of cubic Jordan algebra identities and constructions.
#[derive(Parser)]
#[command(name = "albert-kit", version)]
struct Args {
    #[command(subcommand)]
    command: Cmd,
    /// Ground field: `Q` or `Fp:<p>` (overrides the config).
    #[arg(long, global = true)]
    field: Option<String>,
    /// JSON run configuration.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[arg(long, global = true)]
    trials: Option<usize>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Write the report here as well as to stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Quadratic and cubic axiom suites on the configured model.
    VerifyAxioms,
    /// Replay one of the lemmas.
    Lemma {
        #[arg(value_enum)]
        which: Which,
    },
    /// Isotopes, structure words and the autotopy test.
    Isotopy,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Trans,
    Springer,
    Discr,
}

fn load(args: &Args) -> Result<RunConfig> {
    let mut config = match &args.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
            RunConfig::from_json(&text)?
        }
        None => RunConfig::from_json("{}")?,
    };
    if let Some(f) = &args.field {
        config.field = Some(f.parse::<GroundField>()?);
    }
    if args.trials.is_some() {
        config.trials = args.trials;
    }
    if let Some(s) = args.seed {
        config.seed = s;
    }
    Ok(config)
}

fn main() -> ExitCode {
    let args = Args::parse();
    let command = match args.command {
        Cmd::VerifyAxioms => Command::VerifyAxioms,
        Cmd::Lemma { which } => Command::Lemma(match which {
            Which::Trans => Lemma::Trans,
            Which::Springer => Lemma::Springer,
            Which::Discr => Lemma::Discr,
        }),
        Cmd::Isotopy => Command::Isotopy,
    };
    let outcome = load(&args).and_then(|config| run(command, &config));
    let code = exit_code(&outcome);
    match &outcome {
        Ok(report) => {
            let text = report.to_json();
            println!("{text}");
            if let Some(path) = &args.out {
                if let Err(e) = std::fs::write(path, text + "\n") {
                    eprintln!("error: {}: {e}", path.display());
                    return ExitCode::from(EXIT_CONFIG as u8);
                }
            }
        }
        Err(e) => eprintln!("error: {e}"),
    }
    ExitCode::from(code as u8)
}
