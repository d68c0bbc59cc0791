mod commands;
mod report;

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use serde_json::Value;

use report::{Report, EXIT_INPUT};

#[derive(Parser, Debug)]
#[command(name = "superquad", version, about = "Exact checks for quadratic Lie superalgebras and cubic Dirac operators")]
struct Cli {
    /// Emit canonical JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Number of worker threads used across input files.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Also print bracket tables and intermediate elements.
    #[arg(long, short, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate the form and super Jacobi identity of algebra files.
    Check {
        #[arg(required = true)]
        files: Vec<String>,
    },
    /// Extract φ from an algebra, or test whether a given φ defines a Lie superbracket.
    Cubic {
        #[arg(required = true)]
        files: Vec<String>,
        /// Cubic element (list of terms) on the space of an algebra file.
        #[arg(long)]
        phi: Option<String>,
    },
    /// Decide whether a pair (r, p, ν, φ_p) assembles into a Lie superalgebra.
    Kostant {
        #[arg(required = true)]
        files: Vec<String>,
    },
    /// Build the cubic Dirac operator and check its square.
    Dirac {
        #[arg(required = true)]
        files: Vec<String>,
        /// Comma-separated basis labels spanning r.
        #[arg(long, value_delimiter = ',')]
        r: Option<Vec<String>>,
    },
}

fn run_one(command: &Command, file: &str) -> Report {
    match command {
        Command::Check { .. } => commands::check(file),
        Command::Cubic { phi, .. } => commands::cubic(file, phi.as_deref()),
        Command::Kostant { .. } => commands::kostant(file),
        Command::Dirac { r, .. } => commands::dirac(file, r.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let files = match &cli.command {
        Command::Check { files } | Command::Cubic { files, .. } | Command::Kostant { files } | Command::Dirac { files, .. } => files,
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs.max(1)).build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INPUT as u8);
        }
    };
    let reports: Vec<Report> = pool.install(|| files.par_iter().map(|f| run_one(&cli.command, f)).collect());
    let code = reports.iter().map(|r| r.exit_code).max().unwrap_or(0);

    if cli.json {
        let values: Vec<Value> = reports.iter().map(Report::to_json_value).collect();
        let out = if values.len() == 1 {
            values.into_iter().next().unwrap()
        } else {
            Value::Array(values)
        };
        println!("{}", serde_json::to_string_pretty(&out).expect("json output"));
    } else {
        for r in &reports {
            print!("{}", r.render_text(cli.verbose));
        }
    }
    ExitCode::from(code as u8)
}
