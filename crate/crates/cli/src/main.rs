//! `hooklab` command-line front end.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hooklab::harness::{self, Bounds};
use hooklab::report::{now_iso8601, Report};
use hooklab::Error;

const SYNOPSIS: &str = "usage:
  hooklab list
  hooklab run --id <ID> [--bound k=v]... [--format json|csv|text] [--out PATH] [--budget-seconds S]
  hooklab run --all [--budget-seconds S] [--jobs J] [--format json|csv|text] [--out PATH]";

const EXIT_INTERNAL: u8 = 2;
const EXIT_USAGE: u8 = 3;

#[derive(Parser)]
#[command(name = "hooklab", version, about = "Exhaustive checks of partition, permutation and q-series identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every check with its topic and statement.
    List,
    /// Run one check or the whole registry.
    Run(RunArgs),
}

#[derive(Args)]
struct RunArgs {
    /// Check id, e.g. C2.1 or T9.5iii.
    #[arg(long, conflicts_with = "all", required_unless_present = "all")]
    id: Option<String>,
    /// Every registered check at its default bounds.
    #[arg(long)]
    all: bool,
    /// Override one bound of the selected check.
    #[arg(long = "bound", value_name = "K=V", value_parser = parse_bound, conflicts_with = "all")]
    bounds: Vec<(String, i64)>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Wall-clock budget; HOOKLAB_BUDGET_SECONDS caps it further.
    #[arg(long)]
    budget_seconds: Option<u64>,
    /// Worker threads for --all; 0 uses every core.
    #[arg(long, default_value_t = 0, requires = "all")]
    jobs: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

fn parse_bound(s: &str) -> Result<(String, i64), String> {
    let (k, v) = s.split_once('=').ok_or_else(|| format!("expected K=V, got {s:?}"))?;
    let k = k.trim();
    if k.is_empty() {
        return Err(format!("empty bound name in {s:?}"));
    }
    let v = v.trim().parse::<i64>().map_err(|e| format!("bound {k}: {e}"))?;
    Ok((k.to_string(), v))
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}\n\n{SYNOPSIS}");
    ExitCode::from(EXIT_USAGE)
}

fn list() -> ExitCode {
    for c in harness::registry() {
        println!("{:<8} {:<36} {}", c.id, c.location, c.description);
    }
    ExitCode::SUCCESS
}

fn render(report: &Report, format: Format) -> hooklab::Result<String> {
    match format {
        Format::Json => report.to_json().map(|s| s + "\n"),
        Format::Csv => report.to_csv(),
        Format::Text => Ok(report.to_text()),
    }
}

fn run(args: RunArgs) -> ExitCode {
    let report = if args.all {
        harness::run_all(args.budget_seconds, args.jobs)
    } else {
        let id = args.id.as_deref().unwrap_or_default();
        let overrides: Bounds = args.bounds.into_iter().collect();
        let started_at = now_iso8601();
        harness::run_check_with_budget(id, &overrides, args.budget_seconds).map(|r| Report::new(started_at, vec![r]))
    };
    let report = match report {
        Ok(r) => r,
        Err(e @ (Error::UnknownCheck(_) | Error::UnknownBound { .. })) => return usage_error(e),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INTERNAL);
        }
    };
    let text = match render(&report, args.format) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INTERNAL);
        }
    };
    match &args.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(EXIT_INTERNAL);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(report.exit_code() as u8)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let rendered = e.render().to_string();
            return usage_error(rendered.trim_start_matches("error: ").trim_end());
        }
    };
    match cli.command {
        Command::List => list(),
        Command::Run(args) => run(args),
    }
}
