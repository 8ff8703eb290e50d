//! `fincat` — checks for finite categories: factorization systems,
//! fibrations, injective replacements, fiberwise duals, lens categories,
//! and double categories of squares.
//!
//! Exit codes: `0` every check passed, `1` at least one check failed,
//! `2` the inputs could not be used (usage error, unreadable file, parse
//! failure, or a file violating its declared format).
//!
//! Report output on stdout depends only on the inputs — two runs over
//! the same files are byte-identical. Wall-clock time goes to stderr in
//! text mode.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use fincat_cli::commands;
use fincat_cli::report::{all_pass, render_structured, render_text, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Indented listing, one block per check.
    Text,
    /// JSON: a fixed-order object with the overall verdict and reports.
    Structured,
}

#[derive(Parser)]
#[command(name = "fincat", version, about = "checks for finite categories")]
struct Cli {
    /// Output format for reports.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Directory holding the fixture bundle for `check-all`.
    #[arg(long, global = true, default_value = "fixtures")]
    fixtures: PathBuf,

    /// Accepted for compatibility: nothing in the engine is randomized,
    /// so every run is seedless already. Takes no value.
    #[arg(long, global = true)]
    seedless: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the category axioms of a file (and its classes, if present).
    Validate { file: PathBuf },
    /// Validate an orthogonal factorization system and list factorizations.
    Factorize { file: PathBuf },
    /// Validate a cartesian factorization system; mixed squares must be pullbacks.
    Cartesian { file: PathBuf },
    /// Injective objects, replacements, and reflectivity of a system.
    Injectives { file: PathBuf },
    /// Certify a functor file a fibration (optionally with its section).
    Fibration { file: PathBuf },
    /// The cartesian system a fibration induces on its total category.
    Phi { file: PathBuf },
    /// The injective-replacement fibration of a cartesian system.
    Xi { file: PathBuf },
    /// Rebuild a system (or fibration) through the other side and compare.
    Roundtrip { file: PathBuf },
    /// Build the fiberwise dual of a system; re-validate its emission.
    Dual {
        file: PathBuf,
        /// Also write the dual as a system file to this path.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Compare the double dual with the original system.
    DoubleDual { file: PathBuf },
    /// The lens category of an indexed-category file.
    Lens { file: PathBuf },
    /// Compare the lens category with the fiberwise dual of the total system.
    OpSquare { file: PathBuf },
    /// Build a double category of squares and report its sizes.
    Double {
        /// Indexed-category file: lens/transport squares, with interchange.
        file: Option<PathBuf>,
        /// System file: span-filled carrier squares.
        #[arg(long)]
        span: Option<PathBuf>,
    },
    /// Compare the two double categories of an indexed-category file.
    DoubleEquiv { file: PathBuf },
    /// Run the full battery over the fixture bundle.
    CheckAll {
        /// Bundle directory; defaults to the global --fixtures path.
        dir: Option<PathBuf>,
    },
}

fn run(cli: &Cli) -> anyhow::Result<Vec<Report>> {
    match &cli.command {
        Command::Validate { file } => commands::cmd_validate(file),
        Command::Factorize { file } => commands::cmd_factorize(file),
        Command::Cartesian { file } => commands::cmd_cartesian(file),
        Command::Injectives { file } => commands::cmd_injectives(file),
        Command::Fibration { file } => commands::cmd_fibration(file),
        Command::Phi { file } => commands::cmd_phi(file),
        Command::Xi { file } => commands::cmd_xi(file),
        Command::Roundtrip { file } => commands::cmd_roundtrip(file),
        Command::Dual { file, emit } => commands::cmd_dual(file, emit.as_deref()),
        Command::DoubleDual { file } => commands::cmd_double_dual(file),
        Command::Lens { file } => commands::cmd_lens(file),
        Command::OpSquare { file } => commands::cmd_op_square(file),
        Command::Double { file, span } => commands::cmd_double(file.as_deref(), span.as_deref()),
        Command::DoubleEquiv { file } => commands::cmd_double_equiv(file),
        Command::CheckAll { dir } => {
            commands::cmd_check_all(dir.as_deref().unwrap_or(&cli.fixtures))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match run(&cli) {
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Ok(reports) => {
            match cli.format {
                Format::Text => {
                    print!("{}", render_text(&reports));
                    eprintln!("elapsed: {:?}", start.elapsed());
                }
                Format::Structured => {
                    print!("{}", render_structured(&reports));
                }
            }
            if all_pass(&reports) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}
