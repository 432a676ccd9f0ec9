//! Command-line front end: flag parsing, suites and JSON reports.

pub mod args;
pub mod config;
pub mod corpus;
pub mod report;
pub mod suites;

use std::io::Write;
use std::time::Instant;

use clap::Parser;

use args::{Cli, Command};
use report::VerificationReport;
use suites::InputError;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

/// Rayon pool capped by `YBE_FORGE_THREADS` when set.
pub fn thread_pool() -> rayon::ThreadPool {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(k) = std::env::var("YBE_FORGE_THREADS").ok().and_then(|v| v.trim().parse::<usize>().ok()) {
        builder = builder.num_threads(k.max(1));
    }
    builder.build().expect("thread pool")
}

pub fn run_command(cmd: &Command) -> Result<VerificationReport, InputError> {
    let start = Instant::now();
    let mut report = thread_pool().install(|| match cmd {
        Command::VerifyAybe(a) => suites::verify_aybe(a),
        Command::GeometricCompare(a) => suites::geometric_compare(a),
        Command::VerifyCybe(a) => suites::verify_cybe(a),
        Command::ManinAudit(a) => suites::manin_audit_suite(a),
    })?;
    if cmd.output().timing {
        report.timing_ms = start.elapsed().as_millis() as u64;
    }
    Ok(report)
}

/// Full entry point: returns the process exit code.
pub fn run(argv: Vec<String>) -> i32 {
    let argv = match config::expand_config_args(argv) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INPUT;
        }
    };
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_PASS };
        }
    };
    let report = match run_command(&cli.command) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INPUT;
        }
    };
    print!("{}", report.summary());
    if let Some(path) = &cli.command.output().json {
        let text = report.to_json();
        let written = if path.as_os_str() == "-" {
            std::io::stdout().write_all(text.as_bytes())
        } else {
            std::fs::write(path, text)
        };
        if let Err(e) = written {
            eprintln!("error: cannot write {}: {e}", path.display());
            return EXIT_INPUT;
        }
    }
    if report.passed() {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}
