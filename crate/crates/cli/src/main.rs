use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use lpsem::lang::{Limits, Program};
use lpsem::metatheory::{GeneratorConfig, Mode, Property};

mod commands;
mod report;

/// Answer sets, static analysis and metatheory checks for normal logic programs.
#[derive(Debug, Parser)]
#[command(name = "lpsem", version)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Largest number of atoms the brute-force enumerator accepts.
    #[arg(long, global = true, default_value_t = lpsem::lang::DEFAULT_CAP)]
    cap: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List every answer set.
    AnswerSets { file: PathBuf },
    /// Print the atoms true in the well-founded model.
    Wf { file: PathBuf },
    /// Print the atoms true in every answer set.
    Consequences { file: PathBuf },
    /// Report positivity, signing, call- and order-consistency, stratification.
    Classify { file: PathBuf },
    /// Print a splitting sequence and its components.
    Split { file: PathBuf },
    /// List the solutions with respect to the splitting sequence of `split`.
    Solutions { file: PathBuf },
    /// Check one property on one program.
    Check {
        #[arg(value_parser = parse_property)]
        property: Property,
        file: PathBuf,
    },
    /// Check a property on randomly generated programs.
    Fuzz {
        #[arg(value_parser = parse_property)]
        property: Property,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[command(flatten)]
        generator: GeneratorArgs,
    },
    /// Print one randomly generated program.
    Generate {
        #[command(flatten)]
        generator: GeneratorArgs,
    },
}

#[derive(Debug, Args)]
struct GeneratorArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Size of the atom universe a0 … a{K-1}.
    #[arg(long, default_value_t = 8)]
    atoms: usize,
    /// Maximum number of rules per program.
    #[arg(long, default_value_t = 14)]
    rules: usize,
    #[arg(long, default_value_t = 2)]
    max_pos: usize,
    #[arg(long, default_value_t = 2)]
    max_neg: usize,
    /// any, positive, signed, call-consistent or stratified.
    #[arg(long, default_value = "any")]
    mode: Mode,
    #[arg(long, default_value_t = 100_000)]
    max_rejections: usize,
}

impl From<&GeneratorArgs> for GeneratorConfig {
    fn from(a: &GeneratorArgs) -> Self {
        GeneratorConfig {
            atom_count: a.atoms,
            rule_count: a.rules,
            max_pos: a.max_pos,
            max_neg: a.max_neg,
            mode: a.mode,
            seed: a.seed,
            max_rejections: a.max_rejections,
        }
    }
}

fn parse_property(s: &str) -> Result<Property, String> {
    s.parse().map_err(|e: lpsem::Error| e.to_string())
}

/// Process exit statuses.
pub mod exit {
    pub const OK: u8 = 0;
    pub const PROPERTY_FAILS: u8 = 1;
    pub const USAGE: u8 = 2;
    pub const LIMIT: u8 = 3;
}

/// A failure carrying the exit status to report.
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl From<lpsem::Error> for Failure {
    fn from(e: lpsem::Error) -> Self {
        use lpsem::Error::*;
        let code = match e {
            Parse(_) | UnknownProperty(_) | InvalidConfig(_) => exit::USAGE,
            _ => exit::LIMIT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn load(path: &PathBuf) -> Result<Program, Failure> {
    let text = if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(path)
    }
    .map_err(|e| Failure {
        code: exit::USAGE,
        message: format!("{}: {e}", path.display()),
    })?;
    Program::parse(&text).map_err(|e| Failure {
        code: exit::USAGE,
        message: format!("{}:{e}", path.display()),
    })
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    let limits = Limits::with_cap(cli.cap);
    let out = report::Output { json: cli.json };
    match &cli.command {
        Command::AnswerSets { file } => commands::answer_sets(&out, &load(file)?, &limits),
        Command::Wf { file } => commands::well_founded(&out, &load(file)?),
        Command::Consequences { file } => commands::consequences(&out, &load(file)?, &limits),
        Command::Classify { file } => commands::classify(&out, &load(file)?),
        Command::Split { file } => commands::split(&out, &load(file)?),
        Command::Solutions { file } => commands::solutions(&out, &load(file)?, &limits),
        Command::Check { property, file } => {
            commands::check(&out, *property, &load(file)?, &limits)
        }
        Command::Fuzz {
            property,
            trials,
            generator,
        } => commands::fuzz(&out, *property, &generator.into(), *trials, &limits),
        Command::Generate { generator } => commands::generate(&out, &generator.into()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
