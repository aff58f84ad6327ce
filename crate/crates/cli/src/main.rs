//! `nearcentral`: command-line front end.
//!
//! Exit codes: 0 success, 1 domain error or failed check, 2 enumeration guard
//! exceeded, 64 usage error.

mod args;
mod commands;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use serde_json::{json, Map, Value};

use nearcentral::oracle::{Guard, MAX_N_ENV};

use args::Cli;
use commands::Outcome;

const EXIT_DOMAIN: u8 = 1;
const EXIT_GUARD: u8 = 2;
const EXIT_USAGE: u8 = 64;

fn emit(status: &str, mut fields: Map<String, Value>) {
    fields.insert("status".into(), Value::String(status.into()));
    let doc = serde_json::to_string(&Value::Object(fields)).expect("JSON values always serialize");
    let mut stdout = std::io::stdout().lock();
    // A closed pipe is not worth a panic.
    let _ = writeln!(stdout, "{doc}");
}

fn error_doc(kind: &str, message: &str) -> Map<String, Value> {
    match json!({ "error": { "kind": kind, "message": message } }) {
        Value::Object(m) => m,
        _ => unreachable!(),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let _ = e.print();
            emit("error", error_doc("usage", &e.kind().to_string()));
            return ExitCode::from(EXIT_USAGE);
        }
    };

    let mut guard = Guard::from_env();
    if let Some(n) = cli.guard.guard_n {
        guard.max_n = n;
        // Library entry points without an explicit guard read the environment.
        std::env::set_var(MAX_N_ENV, n.to_string());
    }
    if let Some(s) = cli.guard.guard_sequences {
        guard.max_sequences = s;
    }

    match commands::run(&cli.command, &guard) {
        Ok(Outcome::Json(fields)) => {
            emit("ok", fields);
            ExitCode::SUCCESS
        }
        Ok(Outcome::Failed(fields)) => {
            emit("error", fields);
            ExitCode::from(EXIT_DOMAIN)
        }
        Ok(Outcome::Text(text)) => {
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            let (kind, code) = if e.is_guard() {
                ("guard", EXIT_GUARD)
            } else {
                ("domain", EXIT_DOMAIN)
            };
            emit("error", error_doc(kind, &e.to_string()));
            ExitCode::from(code)
        }
    }
}
