use std::collections::BTreeSet;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use adapted_pairs::cascade::kostant_cascade;
use adapted_pairs::certificate::{self, render_report, Certificate, ReportFormat};
use adapted_pairs::{CaseId, Error, Family, RootSystem};
use clap::{Parser, Subcommand};

/// Certify adapted pairs for truncated maximal parabolic subalgebras.
#[derive(Parser)]
#[command(name = "adapted-pairs", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct and verify one case.
    Verify {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        s: usize,
        /// Write the JSON certificate here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify every in-scope case up to a rank.
    Sweep {
        #[arg(long)]
        max_rank: usize,
        /// Directory for the per-case certificates and the summary.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the Kostant cascade of a root system.
    Cascade {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        rank: usize,
    },
    /// Render a certificate file.
    Report {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value = "md")]
        format: ReportFormat,
    },
}

const PASS: u8 = 0;
const FAIL: u8 = 1;
const USAGE: u8 = 2;

fn fail(e: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(USAGE)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE } else { PASS });
        }
    };
    match cli.command {
        Command::Verify { family, rank, s, out } => verify(CaseId::new(family, rank, s), out),
        Command::Sweep { max_rank, out } => sweep(max_rank, out),
        Command::Cascade { family, rank } => cascade(family, rank),
        Command::Report { input, format } => report(input, format),
    }
}

fn verify(case: CaseId, out: Option<PathBuf>) -> ExitCode {
    let start = Instant::now();
    let cert = match certificate::verify_case(case) {
        Ok(c) => c,
        Err(e) => return fail(e),
    };
    let json = match cert.to_json() {
        Ok(j) => j,
        Err(e) => return fail(e),
    };
    match out {
        Some(path) => {
            if let Err(e) = fs::write(&path, json) {
                return fail(format!("{}: {e}", path.display()));
            }
            println!("{case}: {} ({:.2?})", verdict(&cert), start.elapsed());
        }
        None => print!("{json}"),
    }
    if cert.verdict.pass {
        ExitCode::from(PASS)
    } else {
        eprintln!("{case}: {}", verdict(&cert));
        ExitCode::from(FAIL)
    }
}

fn verdict(c: &Certificate) -> String {
    match &c.verdict.first_failure {
        None => "pass".into(),
        Some(f) => format!("FAIL at {f}"),
    }
}

fn sweep(max_rank: usize, out: Option<PathBuf>) -> ExitCode {
    if let Some(dir) = &out {
        if let Err(e) = fs::create_dir_all(dir) {
            return fail(format!("{}: {e}", dir.display()));
        }
    }
    let start = Instant::now();
    let results = certificate::sweep(max_rank);
    let mut all_pass = true;
    let mut summary = Vec::new();
    for (case, res) in &results {
        let cert = match res {
            Ok(c) => c,
            Err(e) => {
                all_pass = false;
                println!("{case:<12} error: {e}");
                continue;
            }
        };
        all_pass &= cert.verdict.pass;
        let degrees: Vec<String> =
            cert.degree_values().map(|d| d.iter().map(|q| q.to_string()).collect()).unwrap_or_default();
        println!("{:<12} {:<22} degrees {{{}}}", case.to_string(), verdict(cert), degrees.join(", "));
        summary.push(serde_json::json!({
            "case": cert.case,
            "slug": case.slug(),
            "pass": cert.verdict.pass,
            "first_failure": cert.verdict.first_failure,
            "degrees": cert.degrees,
        }));
        if let Some(dir) = &out {
            let path = dir.join(format!("{}.json", case.slug()));
            let written =
                cert.to_json().map_err(|e| e.to_string()).and_then(|j| fs::write(&path, j).map_err(|e| e.to_string()));
            if let Err(e) = written {
                return fail(format!("{}: {e}", path.display()));
            }
        }
    }
    if let Some(dir) = &out {
        let doc = serde_json::json!({ "schema": certificate::SCHEMA, "max_rank": max_rank, "cases": summary });
        let path = dir.join("summary.json");
        let text = serde_json::to_string_pretty(&doc).expect("summary serialises") + "\n";
        if let Err(e) = fs::write(&path, text) {
            return fail(format!("{}: {e}", path.display()));
        }
    }
    println!("{} cases in {:.2?}", results.len(), start.elapsed());
    ExitCode::from(if all_pass { PASS } else { FAIL })
}

fn cascade(family: Family, rank: usize) -> ExitCode {
    let sys = match RootSystem::new(family, rank) {
        Ok(s) => s,
        Err(e) => return fail(e),
    };
    let pos: BTreeSet<_> = sys.positive_roots().into_iter().collect();
    let c = kostant_cascade(&sys, &pos);
    for item in &c.items {
        let label: Vec<String> = item.label.iter().map(|k| k.to_string()).collect();
        println!(
            "β{:<8} {:<28} |H| = {:<3} subsystem roots {}",
            label.join(""),
            sys.format_root(item.root),
            item.heisenberg.len(),
            item.subsystem.len()
        );
    }
    ExitCode::from(PASS)
}

fn report(input: PathBuf, format: ReportFormat) -> ExitCode {
    let text = match fs::read_to_string(&input) {
        Ok(t) => t,
        Err(e) => return fail(format!("{}: {e}", input.display())),
    };
    let cert = match Certificate::from_json(&text) {
        Ok(c) => c,
        Err(e @ (Error::Json(_) | Error::Malformed(_))) => return fail(format!("malformed certificate: {e}")),
        Err(e) => return fail(e),
    };
    match render_report(&cert, format) {
        Ok(r) => {
            print!("{r}");
            ExitCode::from(PASS)
        }
        Err(e) => fail(e),
    }
}
