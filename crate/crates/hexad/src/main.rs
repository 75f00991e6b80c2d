use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hexad::commands::{cmd_catalog, cmd_compute, cmd_verify, cmd_witness, CliError, Format, Outcome, RunConfig};

#[derive(Parser)]
#[command(name = "hexad", version, about = "Exact differential cocycles and their hexagon on simplicial complexes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the built-in complexes and those in $HEXAD_CATALOG_DIR
    Catalog {
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Cohomology and period tables
    Compute(Common),
    /// Run the verification suite
    Verify(Common),
    /// Preimages under R and I, or a summary of a character
    Witness {
        #[command(flatten)]
        common: Common,
        /// Form, cochain or differential cochain files
        files: Vec<PathBuf>,
    },
}

#[derive(Args)]
struct Common {
    /// Catalog name, name in $HEXAD_CATALOG_DIR, or path to a complex file
    #[arg(long)]
    complex: String,
    /// Degree k; repeat for several. Defaults to 1..=dim+1
    #[arg(long)]
    degree: Vec<isize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 25, value_parser = clap::value_parser!(u64).range(1..))]
    trials: u64,
    /// Write the output here instead of stdout
    #[arg(long)]
    report: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: FormatArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Text,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Text => Format::Text,
        }
    }
}

impl Common {
    fn config(&self) -> RunConfig {
        RunConfig {
            complex: self.complex.clone(),
            degrees: self.degree.clone(),
            seed: self.seed,
            trials: self.trials as usize,
            format: self.format.into(),
        }
    }
}

fn emit(outcome: Outcome, report: Option<&PathBuf>) -> ExitCode {
    match report {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &outcome.output) {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{}", outcome.output),
    }
    if outcome.failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let (result, report): (Result<Outcome, CliError>, Option<&PathBuf>) = match &cli.command {
        Command::Catalog { format, report } => (cmd_catalog((*format).into()), report.as_ref()),
        Command::Compute(c) => (cmd_compute(&c.config()), c.report.as_ref()),
        Command::Verify(c) => (cmd_verify(&c.config()), c.report.as_ref()),
        Command::Witness { common, files } => (cmd_witness(&common.config(), files), common.report.as_ref()),
    };
    match result {
        Ok(outcome) => emit(outcome, report),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
