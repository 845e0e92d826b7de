//! Fixture format, built-in fixtures, commands and reports for the `coring-lab` binary.

pub mod builtin;
pub mod commands;
pub mod export;
pub mod load;
pub mod report;
pub mod schema;

use std::path::PathBuf;

use clap::Parser;
use coring_core::comodule::TestModule;
use coring_core::{Fp, Rational, Scalar};

use crate::commands::{Command, Options};
use crate::load::{Field, InputError};
use crate::report::Report;
use crate::schema::FixtureFile;

#[derive(Debug, Parser)]
#[command(name = "coring-lab", version, about = "Exact checks for corings, comodules and comatrix constructions")]
pub struct Cli {
    pub command: Command,
    pub fixture: PathBuf,
    /// Seed for randomized searches.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Emit the report as JSON.
    #[arg(long)]
    pub json: bool,
    /// With `can`: report whether the comodule is Galois.
    #[arg(long)]
    pub galois: bool,
    /// Comma-separated right T-modules, e.g. `T,T2,T/J`.
    #[arg(long, value_name = "LIST")]
    pub test_modules: Option<String>,
}

/// Exit status and the text written to stdout or stderr.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn input_error(e: &InputError) -> Self {
        Outcome { code: 2, stdout: String::new(), stderr: format!("error: {e}\n") }
    }
}

fn run_typed<F: Scalar>(cmd: Command, file: &FixtureFile, opts: &Options) -> Result<Report, InputError> {
    let fx = load::resolve::<F>(file)?;
    let mut report = Report::new(&cmd.name(), &file.name, &file.field, opts.seed);
    commands::run(cmd, &fx, opts, &mut report)?;
    Ok(report)
}

macro_rules! dispatch_prime {
    ($p:expr, $cmd:expr, $file:expr, $opts:expr; $($q:literal)*) => {
        match $p {
            $($q => run_typed::<Fp<$q>>($cmd, $file, $opts),)*
            other => Err(InputError(format!("GF:{other} is not a supported prime field (primes up to 97)"))),
        }
    };
}

/// Runs one command on an already parsed fixture.
pub fn run_fixture(cmd: Command, file: &FixtureFile, opts: &Options) -> Result<Report, InputError> {
    match Field::parse(&file.field)? {
        Field::Rational => run_typed::<Rational>(cmd, file, opts),
        Field::Prime(p) => dispatch_prime!(p, cmd, file, opts;
            2 3 5 7 11 13 17 19 23 29 31 37 41 43 47 53 59 61 67 71 73 79 83 89 97),
    }
}

pub fn execute(cli: &Cli) -> Outcome {
    let test_modules = match cli.test_modules.as_deref().map(TestModule::parse_list).transpose() {
        Ok(t) => t,
        Err(e) => return Outcome::input_error(&InputError(format!("--test-modules: {e}"))),
    };
    let opts = Options { seed: cli.seed, galois: cli.galois, test_modules };
    let report = load::read_file(&cli.fixture).and_then(|file| run_fixture(cli.command, &file, &opts));
    match report {
        Ok(r) => Outcome { code: r.exit_code(), stdout: if cli.json { r.to_json() } else { r.to_text() }, stderr: String::new() },
        Err(e) => Outcome::input_error(&e),
    }
}
