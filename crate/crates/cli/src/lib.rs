//! Command-line front end for `monideal`.
//!
//! [`run`] is the whole program; the binary only wires it to the process
//! streams. Exit codes: 0 success, 1 usage or input error, 2 a witness or
//! cross-check did not verify.

pub mod commands;
pub mod parse;
pub mod problem;
mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use problem::{Construct, ProblemFile};
pub use report::Report;

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 1;
pub const EXIT_UNVERIFIED: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "monideal", version, about = "Witnesses for associated primes of monomial ideals")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct Input {
    /// Problem file, or `-` for standard input.
    pub file: PathBuf,
    /// Construct to use; defaults to the first one in the file.
    #[arg(long)]
    pub name: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Irredundant irreducible decomposition.
    Decompose {
        #[command(flatten)]
        input: Input,
    },
    /// Associated primes, indexed P0, P1, ...
    Assprimes {
        #[command(flatten)]
        input: Input,
    },
    /// Build and verify a witness v with (I : v) = P.
    Witness {
        #[command(flatten)]
        input: Input,
        /// Prime index (as listed by `assprimes`) or a variable list such as `x1,x2`.
        #[arg(long)]
        prime: Option<String>,
        /// Component index among the P-primary components.
        #[arg(long)]
        component: Option<usize>,
        /// Offset for a variable outside P, as `var=k`. Repeatable.
        #[arg(long = "offset", value_name = "VAR=K")]
        offsets: Vec<String>,
        /// Draw offsets for the remaining variables from this seed.
        #[arg(long)]
        seed: Option<u64>,
        /// Largest offset drawn with `--seed`.
        #[arg(long, default_value_t = 8)]
        max_offset: u32,
        /// Print the primes and their components, then exit.
        #[arg(long)]
        list: bool,
    },
    /// Check whether (I : v) = P.
    Verify {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        prime: String,
        #[arg(long)]
        v: String,
    },
    /// Compute (I : v).
    Colon {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        v: String,
    },
    /// Decide Borel type and give single-extra-variable witnesses.
    Borel {
        #[command(flatten)]
        input: Input,
        /// Recompute the verdict from saturations.
        #[arg(long)]
        cross_check: bool,
    },
    /// Decide whether each associated prime has a unique witness.
    Uniqueness {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        prime: Option<String>,
    },
    /// Squarefree witnesses t_A of a clutter's edge ideal.
    ClutterBase {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        prime: Option<String>,
    },
    /// Generators of a symmetric pattern ideal, optionally with a witness.
    Symgen {
        #[command(flatten)]
        input: Input,
        /// Break index j (1-based) selecting the prime size n - k + k_j.
        #[arg(long = "break")]
        break_index: Option<usize>,
        /// Prime variables; defaults to the first n - k + k_j variables.
        #[arg(long)]
        prime: Option<String>,
        /// Exponents for the remaining variables; defaults to their floors.
        #[arg(long, value_delimiter = ',')]
        b: Option<Vec<u32>>,
    },
}

/// Parses `args`, runs the command and writes its report. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(rendered.as_bytes()) } else { out.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match commands::execute(&cli.command) {
        Ok(report) => {
            let _ = out.write_all(report.render(cli.command.format()).as_bytes());
            if report.verified() == Some(false) {
                EXIT_UNVERIFIED
            } else {
                EXIT_OK
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

impl Command {
    pub fn input(&self) -> &Input {
        match self {
            Command::Decompose { input }
            | Command::Assprimes { input }
            | Command::Witness { input, .. }
            | Command::Verify { input, .. }
            | Command::Colon { input, .. }
            | Command::Borel { input, .. }
            | Command::Uniqueness { input, .. }
            | Command::ClutterBase { input, .. }
            | Command::Symgen { input, .. } => input,
        }
    }

    pub fn format(&self) -> Format {
        self.input().format
    }
}
