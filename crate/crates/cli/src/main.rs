//! Scenario-driven verification tool.
//!
//! `regcat <command> <scenario.json> [--report json|text]
//! [--stop-on-first-failure]`
//!
//! Exit codes: 0 when every check passes, 1 when a verification check
//! fails (a counterexample is printed), 2 on input or schema errors.

mod commands;
mod report;
mod scenario;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::report::Verdict;
use crate::scenario::CliError;

#[derive(Parser)]
#[command(
    name = "regcat",
    version,
    about = "Exact checks for generalized inverses, regular cocycles, and obstructed structures"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Args)]
struct RunArgs {
    /// Scenario file (JSON)
    scenario: PathBuf,

    /// Report format
    #[arg(long, value_enum, default_value = "text")]
    report: ReportFormat,

    /// Stop recording checks after the first failure
    #[arg(long)]
    stop_on_first_failure: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Construct the generalized inverse and verify both regularity laws
    Ginverse(RunArgs),
    /// Verify star-chain regularity and the higher projector laws
    CheckChain(RunArgs),
    /// Verify cocycle laws and report the obstruction structure
    VerifyCocycle(RunArgs),
    /// Minimum cocycle length with a nontrivial obstruction at an object
    ObstructionDegree(RunArgs),
    /// Build a cocycle from retract data and verify it
    Lift(RunArgs),
    /// Classify a componentwise map between two cocycles
    CocycleMorphism(RunArgs),
    /// Tensor two cocycles and check obstruction multiplicativity
    Tensor(RunArgs),
    /// Dualize a cocycle and check the transpose laws
    Dual(RunArgs),
    /// Check the evaluation pairing laws on a cocycle
    Pairing(RunArgs),
    /// Check functor laws (and naturality, when components are supplied)
    FunctorCheck(RunArgs),
    /// Check algebra/coalgebra obstruction laws
    AlgebraCheck(RunArgs),
    /// Check the weak antipode laws on an almost bialgebra
    HopfCheck(RunArgs),
    /// Check module or comodule regularity laws
    ModuleCheck(RunArgs),
    /// Evaluate an interaction cycle and check its regularity
    TqftCheck(RunArgs),
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Ginverse(_) => "ginverse",
            Command::CheckChain(_) => "check-chain",
            Command::VerifyCocycle(_) => "verify-cocycle",
            Command::ObstructionDegree(_) => "obstruction-degree",
            Command::Lift(_) => "lift",
            Command::CocycleMorphism(_) => "cocycle-morphism",
            Command::Tensor(_) => "tensor",
            Command::Dual(_) => "dual",
            Command::Pairing(_) => "pairing",
            Command::FunctorCheck(_) => "functor-check",
            Command::AlgebraCheck(_) => "algebra-check",
            Command::HopfCheck(_) => "hopf-check",
            Command::ModuleCheck(_) => "module-check",
            Command::TqftCheck(_) => "tqft-check",
        }
    }

    fn args(&self) -> &RunArgs {
        match self {
            Command::Ginverse(a)
            | Command::CheckChain(a)
            | Command::VerifyCocycle(a)
            | Command::ObstructionDegree(a)
            | Command::Lift(a)
            | Command::CocycleMorphism(a)
            | Command::Tensor(a)
            | Command::Dual(a)
            | Command::Pairing(a)
            | Command::FunctorCheck(a)
            | Command::AlgebraCheck(a)
            | Command::HopfCheck(a)
            | Command::ModuleCheck(a)
            | Command::TqftCheck(a) => a,
        }
    }
}

fn run(command: &Command) -> Result<Verdict, CliError> {
    let args = command.args();
    let scenario = scenario::load(&args.scenario)?;
    commands::dispatch(command.name(), scenario, args.stop_on_first_failure)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let args = cli.command.args();
    match run(&cli.command) {
        Ok(verdict) => {
            let rendered = match args.report {
                ReportFormat::Text => report::render_text(&verdict),
                ReportFormat::Json => report::render_json(&verdict),
            };
            print!("{rendered}");
            if verdict.passed {
                ExitCode::from(0)
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
