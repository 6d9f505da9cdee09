//! Command-line driver. [`run`] parses arguments, dispatches to the library
//! and returns the rendered output with an exit code: 0 on success, 1 when a
//! verification check fails, 2 on usage or input errors.

pub mod args;
mod commands;
pub mod input;
pub mod output;
pub mod verify_all;

use std::ffi::OsString;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::Parser;
use clifford_quartic::Error;

use args::{Cli, Command, QuarticCmd, RepCmd, SymCmd, ZetaCmd};
use output::{render, Report};

pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Rep(RepCmd::Build { .. }) => "rep build",
        Command::Rep(RepCmd::Verify { .. }) => "rep verify",
        Command::Rep(RepCmd::Canonical { .. }) => "rep canonical",
        Command::Quartic(QuarticCmd::Coeffs { .. }) => "quartic coeffs",
        Command::Quartic(QuarticCmd::Eval { .. }) => "quartic eval",
        Command::Quartic(QuarticCmd::Grad { .. }) => "quartic grad",
        Command::Quartic(QuarticCmd::Homaloidal { .. }) => "quartic homaloidal",
        Command::Quartic(QuarticCmd::SquareDetect { .. }) => "quartic square-detect",
        Command::Quartic(QuarticCmd::Check32 { .. }) => "quartic check-32",
        Command::Sym(SymCmd::H { .. }) => "sym h",
        Command::Sym(SymCmd::G { .. }) => "sym g",
        Command::Sym(SymCmd::Sharp { .. }) => "sym sharp",
        Command::Sym(SymCmd::Predict { .. }) => "sym predict",
        Command::Zeta(ZetaCmd::Gamma { .. }) => "zeta gamma",
        Command::Zeta(ZetaCmd::CheckInvolution { .. }) => "zeta check-involution",
        Command::Zeta(ZetaCmd::CheckPullback { .. }) => "zeta check-pullback",
        Command::Zeta(ZetaCmd::CheckFeQuadratic { .. }) => "zeta check-fe-quadratic",
        Command::Zeta(ZetaCmd::Mc { .. }) => "zeta mc",
        Command::Classify(_) => "classify",
        Command::VerifyAll(_) => "verify-all",
    }
}

fn dispatch(cli: &Cli) -> clifford_quartic::Result<Report> {
    let seed = cli.seed;
    match &cli.command {
        Command::Rep(c) => commands::rep(c),
        Command::Quartic(c) => commands::quartic(c, seed),
        Command::Sym(c) => commands::sym(c, seed),
        Command::Zeta(c) => commands::zeta(c, seed),
        Command::Classify(a) => commands::classify_cmd(a),
        Command::VerifyAll(a) => {
            let suite = verify_all::verify_all(a, seed, !cli.no_timestamp)?;
            let csv = verify_all::suite_csv(&suite);
            Ok(Report::check(&suite, suite.failed == 0).with_csv(csv))
        }
    }
}

fn error_code(e: &Error) -> i32 {
    match e {
        Error::UnstableDimension(_) | Error::Numerical(_) => 1,
        _ => 2,
    }
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let report = match dispatch(&cli) {
        Ok(r) => r,
        Err(e) => {
            return Outcome {
                code: error_code(&e),
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            }
        }
    };
    let config = serde_json::to_value(&cli).expect("arguments serialize");
    let timestamp =
        (!cli.no_timestamp).then(|| SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs()));
    let text = render(&report, command_name(&cli.command), &config, cli.format, timestamp);
    let code = if report.passed == Some(false) { 1 } else { 0 };
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, &text) {
            return Outcome {
                code: 2,
                stdout: String::new(),
                stderr: format!("error: writing {}: {e}\n", path.display()),
            };
        }
        return Outcome {
            code,
            stdout: String::new(),
            stderr: String::new(),
        };
    }
    Outcome {
        code,
        stdout: text,
        stderr: String::new(),
    }
}
