//! Command-line front end for `biorth-core`.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 invalid input
//! (arguments or family file), 3 singular or degenerate problem.

pub mod args;
mod commands;
mod emit;
pub mod verify;

use biorth_core::family::FamilyConfig;
use biorth_core::{Error, Rational};

pub use args::RunConfig;
use args::{Command, Mode};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_DEGENERATE: i32 = 3;

#[derive(Debug)]
pub(crate) enum Failure {
    Core(Error),
    Usage(String),
    Degenerate(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

/// Variant name of a core error, e.g. `DegenerateMu`.
pub fn error_kind(e: &Error) -> String {
    let dbg = format!("{e:?}");
    dbg.split(|c: char| !c.is_alphanumeric()).next().unwrap_or_default().to_string()
}

/// Exit code for a core error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Config(_) | Error::NotRepresentable(_) | Error::OutOfRange { .. } | Error::InvalidLowerParameter(_) => {
            EXIT_INVALID
        }
        _ => EXIT_DEGENERATE,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn failure(f: Failure) -> Self {
        let (code, kind, message) = match f {
            Failure::Core(e) => (exit_code(&e), error_kind(&e), e.to_string()),
            Failure::Usage(m) => (EXIT_INVALID, "InvalidArgument".to_string(), m),
            Failure::Degenerate(m) => (EXIT_DEGENERATE, "NoAdmissibleTheta".to_string(), m),
        };
        let body = serde_json::json!({ "error": kind, "message": message });
        Self { code, stdout: emit::json(&body), stderr: format!("error: {kind}: {message}\n") }
    }
}

pub fn run(cfg: &RunConfig) -> Outcome {
    match dispatch(cfg) {
        Ok(o) => o,
        Err(f) => Outcome::failure(f),
    }
}

fn dispatch(cfg: &RunConfig) -> Result<Outcome, Failure> {
    let family = FamilyConfig::load(&cfg.family_path)?.to_family()?;
    let exact = cfg.mode == Mode::Exact;
    let text = match cfg.command {
        Command::Moments if exact => commands::moments::<Rational>(&family, cfg)?,
        Command::Moments => commands::moments::<f64>(&family, cfg)?,
        Command::Poly if exact => commands::poly::<Rational>(&family, cfg)?,
        Command::Poly => commands::poly::<f64>(&family, cfg)?,
        Command::Ode if exact => commands::ode::<Rational>(&family, cfg)?,
        Command::Ode => commands::ode::<f64>(&family, cfg)?,
        Command::Hyper if exact => commands::hyper::<Rational>(&family, cfg)?,
        Command::Hyper => commands::hyper::<f64>(&family, cfg)?,
        Command::Sweep => {
            let (text, any_error) = if exact {
                commands::sweep::<Rational>(&family, cfg)?
            } else {
                commands::sweep::<f64>(&family, cfg)?
            };
            let code = if any_error { EXIT_DEGENERATE } else { EXIT_OK };
            return Ok(Outcome { code, stdout: text, stderr: String::new() });
        }
        Command::Verify => {
            if cfg.output != args::Output::Json {
                return Err(Failure::Usage("verify reports are JSON only".into()));
            }
            let report = verify::run(&family, cfg.n.unwrap_or(6), cfg.seed);
            let code = if report.summary.failed > 0 { EXIT_VERIFY } else { EXIT_OK };
            return Ok(Outcome { code, stdout: emit::json(&report), stderr: String::new() });
        }
    };
    Ok(Outcome::ok(text))
}
