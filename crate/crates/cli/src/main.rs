/// `println!` that tolerates a closed stdout (e.g. piping into `head`).
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout(), $($arg)*);
    }};
}

mod commands;
mod demo;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use motionfact::exactalg::Mode;
use motionfact::Error;

/// Exact factorization of motion polynomials and straight-line linkage synthesis.
#[derive(Parser, Debug)]
#[command(name = "motionfact", version)]
struct Cli {
    /// Arithmetic mode.
    #[arg(long, value_enum, default_value_t = ModeArg::Exact, global = true)]
    mode: ModeArg,
    /// Tolerance for float mode (required there, rejected in exact mode).
    #[arg(long, global = true)]
    eps: Option<f64>,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Output::Pretty, global = true)]
    output: Output,
    /// Fractional digits for decimal rendering in float mode.
    #[arg(long, default_value_t = 6, global = true)]
    digits: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Exact,
    Float,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Json,
    Csv,
    Pretty,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Factor a motion polynomial given as a JSON list of 8-arrays.
    Factor {
        file: PathBuf,
        /// Comma-separated one-based norm factor indices, consumed right to left.
        #[arg(long, value_delimiter = ',')]
        order: Option<Vec<usize>>,
        /// Report every ordering of the norm factors.
        #[arg(long)]
        all: bool,
    },
    /// Run the straight-line synthesis pipeline on a constraint file.
    Synth { file: PathBuf },
    /// Classify a constraint file.
    Classify { file: PathBuf },
    /// Check closure and report axis geometry of a linkage file.
    Verify {
        file: PathBuf,
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
    /// Sample the trajectory of a point under a motion polynomial.
    Traj {
        file: PathBuf,
        /// Point as x,y,z (rationals allowed).
        #[arg(long, default_value = "0,0,0")]
        point: String,
        /// Parameter range lo:hi.
        #[arg(long, default_value = "-2:2", allow_hyphen_values = true)]
        range: String,
        #[arg(long, default_value_t = 4)]
        steps: usize,
    },
    /// Reproduce a built-in worked example.
    Demo {
        #[arg(value_enum)]
        example: DemoName,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum DemoName {
    #[value(name = "darboux7r")]
    Darboux7r,
}

/// Settings shared by all commands.
#[derive(Copy, Clone, Debug)]
pub struct Config {
    pub mode: Mode,
    pub output: Output,
    pub digits: usize,
}

/// Failure of a command: an error from the library or a failed check.
#[derive(Debug)]
pub enum Failure {
    Lib(Error),
    /// Input that did not parse or violated a precondition.
    Usage(String),
    /// Proven non-existence of the requested object; output already printed.
    NonExistence,
    /// A verification did not pass; output already printed.
    Check,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_)
        | Error::Precondition(_)
        | Error::ConstraintViolation(_)
        | Error::NotMotionPolynomial
        | Error::MalformedTranslational(_)
        | Error::DanglingLink(_)
        | Error::NotSameMotion => 2,
        Error::NoFactorization(_)
        | Error::NoSolution(_)
        | Error::NotCircular
        | Error::VerticalInput
        | Error::NonGeneric(_)
        | Error::DegenerateP => 3,
        Error::ExactModeIrrationalSplit | Error::ExactModeIrrationalRoot => 4,
        _ => 1,
    }
}

fn config(cli: &Cli) -> Result<Config, Failure> {
    let mode = match (cli.mode, cli.eps) {
        (ModeArg::Exact, None) => Mode::Exact,
        (ModeArg::Float, Some(eps)) if eps > 0.0 => Mode::Float(eps),
        (ModeArg::Exact, Some(_)) => {
            return Err(Failure::Usage(
                "--eps is only valid with --mode float".into(),
            ))
        }
        (ModeArg::Float, _) => {
            return Err(Failure::Usage(
                "--mode float requires a positive --eps".into(),
            ))
        }
    };
    Ok(Config {
        mode,
        output: cli.output,
        digits: cli.digits,
    })
}

fn run(cli: Cli) -> Result<(), Failure> {
    let cfg = config(&cli)?;
    match cli.command {
        Command::Factor { file, order, all } => commands::factor(&cfg, &file, order, all),
        Command::Synth { file } => commands::synth(&cfg, &file),
        Command::Classify { file } => commands::classify(&cfg, &file),
        Command::Verify { file, samples } => commands::verify(&cfg, &file, samples),
        Command::Traj {
            file,
            point,
            range,
            steps,
        } => commands::traj(&cfg, &file, &point, &range, steps),
        Command::Demo {
            example: DemoName::Darboux7r,
        } => demo::darboux7r(&cfg),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::NonExistence) => ExitCode::from(3),
        Err(Failure::Check) => ExitCode::from(1),
    }
}
