use std::io::Write;
use std::process::ExitCode;

use biorth_cli::{run, RunConfig};
use clap::Parser;

fn main() -> ExitCode {
    let cfg = RunConfig::parse();
    let out = run(&cfg);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(out.code as u8)
}
