use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, ValueEnum};
use unrep_cli::{exit_code, parse_input, render, run, to_json, Command, ErrorDoc, Options};
use unrep_core::Error;

#[derive(Parser)]
#[command(
    name = "unrep",
    version,
    about = "Unrepresentations of finite transformation semigroups"
)]
struct Cli {
    #[arg(value_enum)]
    command: Cmd,
    /// JSON input file; reads standard input when omitted or `-`.
    input: Option<PathBuf>,
    /// Enumerate by checking every bijection.
    #[arg(long)]
    oracle: bool,
    /// Human-readable output with tables and timing.
    #[arg(long)]
    pretty: bool,
    /// Worker threads for the backtracking search.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Heap element used as the group identity.
    #[arg(long, default_value_t = 0)]
    identity: usize,
    /// Maximum closure size.
    #[arg(long, default_value_t = unrep_core::DEFAULT_CLOSURE_CAP)]
    cap: usize,
    /// Seed for sampled Theorem C sweeps.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Cmd {
    Analyze,
    Unreps,
    Heap,
    Centralizer,
    Pseudounits,
    Clifford,
    CheckAll,
}

impl From<Cmd> for Command {
    fn from(c: Cmd) -> Self {
        match c {
            Cmd::Analyze => Command::Analyze,
            Cmd::Unreps => Command::Unreps,
            Cmd::Heap => Command::Heap,
            Cmd::Centralizer => Command::Centralizer,
            Cmd::Pseudounits => Command::Pseudounits,
            Cmd::Clifford => Command::Clifford,
            Cmd::CheckAll => Command::CheckAll,
        }
    }
}

fn read_input(path: Option<&PathBuf>) -> Result<String, Error> {
    let mut text = String::new();
    match path {
        Some(p) if p.as_os_str() != "-" => {
            text = std::fs::read_to_string(p)
                .map_err(|e| Error::Input(format!("cannot read {}: {e}", p.display())))?;
        }
        _ => {
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Error::Input(format!("cannot read standard input: {e}")))?;
        }
    }
    Ok(text)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = Options {
        oracle: cli.oracle,
        jobs: cli.jobs.max(1),
        identity: cli.identity,
        cap: cli.cap,
        seed: cli.seed,
    };
    let start = Instant::now();
    let result = read_input(cli.input.as_ref())
        .and_then(|text| parse_input(&text))
        .and_then(|doc| run(cli.command.into(), &doc, &opts));

    match result {
        Ok(mut report) => {
            if cli.pretty {
                report.timing_ms = Some(start.elapsed().as_secs_f64() * 1e3);
                print!("{}", render::render(&report));
            } else {
                print!("{}", to_json(&report));
            }
            if report.all_verdicts_hold() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(3)
            }
        }
        Err(e) => {
            if cli.pretty {
                eprintln!("error [{}]: {e}", e.code());
            } else {
                print!("{}", to_json(&ErrorDoc::from(&e)));
            }
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
