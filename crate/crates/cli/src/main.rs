use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;
mod verify;

use commands::Format;
use verify::Suite;

/// Snakes of type B_n, labeled ballot paths and their triangles.
#[derive(Debug, Parser)]
#[command(name = "snakes", version)]
struct Cli {
    /// Write output to this file instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List every snake of type B_n.
    Snakes {
        #[arg(long)]
        n: usize,
        /// plain, json or csv (default from SNAKES_FORMAT, else plain).
        #[arg(long)]
        format: Option<Format>,
        #[command(flatten)]
        cap: CapArgs,
    },
    /// Apply phi or psi to a single object.
    Map {
        #[command(subcommand)]
        direction: Direction,
    },
    /// Print the B, E or T triangle.
    Triangle {
        #[arg(long)]
        kind: ballot_snakes::TriangleKind,
        /// Largest row index.
        #[arg(long)]
        rows: usize,
        /// csv or json (default from SNAKES_FORMAT, else csv).
        #[arg(long)]
        format: Option<Format>,
    },
    /// Print the coefficients of a named series.
    Series {
        /// sin, cos, sec, tan, sec2x_cosx, sec2x_sinx or springer_egf.
        #[arg(long)]
        name: ballot_snakes::TrigName,
        #[arg(long)]
        order: usize,
        /// json (raw coefficients) or egf (n! a_n per line).
        #[arg(long)]
        format: Option<Format>,
    },
    /// Run a verification suite and report one line per claim.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Bound for exhaustive and series claims (defaults 8 and 12).
        #[arg(long)]
        max_n: Option<usize>,
        #[command(flatten)]
        cap: CapArgs,
    },
}

#[derive(Debug, Subcommand)]
enum Direction {
    /// Snake to labeled ballot path.
    Phi {
        #[arg(long, allow_hyphen_values = true)]
        snake: String,
        /// Print every contraction stage as JSON.
        #[arg(long)]
        trace: bool,
    },
    /// Labeled ballot path to snake.
    Psi {
        #[arg(long)]
        path: String,
        #[arg(long)]
        labels: String,
        /// Print every contraction stage as JSON.
        #[arg(long)]
        trace: bool,
    },
}

#[derive(Debug, Clone, Copy, Args)]
struct CapArgs {
    /// Raise the enumeration cap (requires --i-know above the default).
    #[arg(long)]
    cap: Option<usize>,
    /// Acknowledge that a raised cap may take very long.
    #[arg(long)]
    i_know: bool,
}

impl CapArgs {
    fn resolve(self) -> Result<usize, String> {
        let default = ballot_snakes::snake::DEFAULT_ENUMERATION_CAP;
        match self.cap {
            Some(cap) if cap > default && !self.i_know => Err(format!(
                "--cap {cap} exceeds the default {default}; pass --i-know to confirm"
            )),
            Some(cap) => Ok(cap),
            None => Ok(default),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Status {
    Ok,
    Failed,
}

fn run(command: Command) -> Result<(String, Status), String> {
    match command {
        Command::Snakes { n, format, cap } => {
            let cap = cap.resolve()?;
            commands::snakes(n, format, cap).map(|s| (s, Status::Ok))
        }
        Command::Map { direction } => match direction {
            Direction::Phi { snake, trace } => commands::map_phi(&snake, trace),
            Direction::Psi {
                path,
                labels,
                trace,
            } => commands::map_psi(&path, &labels, trace),
        }
        .map(|s| (s, Status::Ok)),
        Command::Triangle { kind, rows, format } => {
            commands::triangle(kind, rows, format).map(|s| (s, Status::Ok))
        }
        Command::Series {
            name,
            order,
            format,
        } => commands::series(name, order, format).map(|s| (s, Status::Ok)),
        Command::Verify { suite, max_n, cap } => {
            let cap = cap.resolve()?;
            let report = verify::run(suite, max_n, cap)?;
            let status = if report.passed() {
                Status::Ok
            } else {
                Status::Failed
            };
            Ok((report.render(), status))
        }
    }
}

fn emit(out: Option<&PathBuf>, text: &str) -> io::Result<()> {
    match out {
        Some(path) => fs::write(path, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((text, status)) => {
            if let Err(e) = emit(cli.out.as_ref(), &text) {
                eprintln!("snakes: cannot write output: {e}");
                return ExitCode::from(2);
            }
            match status {
                Status::Ok => ExitCode::SUCCESS,
                Status::Failed => ExitCode::from(1),
            }
        }
        Err(message) => {
            eprintln!("snakes: {message}");
            ExitCode::from(2)
        }
    }
}
