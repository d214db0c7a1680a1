use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use scrollcalc::audit::{audit_examples, discrepancy_flags, gold_case_matches};
use scrollcalc::report::{render_json_lines, render_tsv, scan};
use scrollcalc::scroll::hilbert_polynomial;
use scrollcalc::splitting::specialization_check;
use scrollcalc::{analyze, Error, ScrollConfig, SplittingType};

const EXIT_INCONSISTENT: u8 = 1;
const EXIT_BAD_INPUT: u8 = 2;
const EXIT_NOT_SPECIALIZATION: u8 = 3;

#[derive(Parser)]
#[command(
    name = "scrollcalc",
    version,
    about = "Invariants of threefold scrolls over Hirzebruch surfaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScanFormat {
    Tsv,
    JsonLines,
}

#[derive(clap::Args)]
struct ConfigArgs {
    /// Index of the Hirzebruch surface F_e
    #[arg(long, allow_hyphen_values = true)]
    e: i64,
    /// Fiber coefficient of c1 = 3C + bf
    #[arg(long, allow_hyphen_values = true)]
    b: i64,
    /// Second Chern class
    #[arg(long, allow_hyphen_values = true)]
    k: i64,
}

#[derive(Subcommand)]
enum Command {
    /// Full report for one configuration
    Analyze {
        #[command(flatten)]
        cfg: ConfigArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: ReportFormat,
        /// Add flags where a worked example prints a different value
        #[arg(long)]
        audit_mode: bool,
    },
    /// One row per admissible configuration with b in [b-min, b-max]
    Scan {
        #[arg(long)]
        e: i64,
        #[arg(long)]
        b_min: i64,
        #[arg(long)]
        b_max: i64,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value = "tsv")]
        format: ScanFormat,
        /// Worker threads (default: all cores)
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Recompute the worked examples and compare with the printed values
    AuditExamples {
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
    },
    /// Whether the split bundle TO is a flat specialization of FROM
    Specialize {
        #[arg(long, allow_hyphen_values = true)]
        from: String,
        #[arg(long, allow_hyphen_values = true)]
        to: String,
    },
    /// Hilbert polynomial of the scroll
    HilbertPoly {
        #[command(flatten)]
        cfg: ConfigArgs,
        /// Also print P(m)
        #[arg(long, allow_hyphen_values = true)]
        eval: Vec<i64>,
    },
}

fn config(args: &ConfigArgs) -> Result<ScrollConfig, Error> {
    ScrollConfig::new(args.e, args.b, args.k)
}

/// Maps library errors onto the exit-code contract.
fn fail(err: &Error) -> ExitCode {
    match err {
        Error::Inadmissible(labels) => {
            for l in labels {
                eprintln!("{l} violated");
            }
            ExitCode::from(EXIT_BAD_INPUT)
        }
        Error::Internal(_) => {
            eprintln!("error: {err}");
            ExitCode::from(EXIT_INCONSISTENT)
        }
        _ => {
            eprintln!("error: {err}");
            ExitCode::from(EXIT_BAD_INPUT)
        }
    }
}

fn run_analyze(args: &ConfigArgs, format: ReportFormat, audit_mode: bool) -> ExitCode {
    let result = config(args).and_then(|cfg| {
        let mut report = analyze(&cfg)?;
        if audit_mode {
            for flag in discrepancy_flags(&cfg)? {
                report.push_flag(flag);
            }
        }
        Ok(report)
    });
    let report = match result {
        Ok(r) => r,
        Err(err) => return fail(&err),
    };
    match format {
        ReportFormat::Json => println!("{}", report.to_json_pretty()),
        ReportFormat::Text => print!("{}", report.to_text()),
    }
    if report.consistent {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_INCONSISTENT)
    }
}

fn run_scan(
    e: i64,
    b_min: i64,
    b_max: i64,
    out: &PathBuf,
    format: ScanFormat,
    threads: Option<usize>,
) -> anyhow::Result<ExitCode> {
    let rows = match scan(e, b_min, b_max, threads) {
        Ok(rows) => rows,
        Err(err) => return Ok(fail(&err)),
    };
    let body = match format {
        ScanFormat::Tsv => render_tsv(&rows),
        ScanFormat::JsonLines => render_json_lines(&rows),
    };
    fs::write(out, body).with_context(|| format!("writing {}", out.display()))?;
    eprintln!("{} rows written to {}", rows.len(), out.display());
    Ok(ExitCode::SUCCESS)
}

fn run_audit(format: ReportFormat) -> ExitCode {
    let findings = match audit_examples() {
        Ok(f) => f,
        Err(err) => return fail(&err),
    };
    match format {
        ReportFormat::Json => {
            let v = serde_json::to_value(&findings).expect("findings serialize");
            println!(
                "{}",
                serde_json::to_string_pretty(&v).expect("findings serialize")
            );
        }
        ReportFormat::Text => {
            for f in &findings {
                print!(
                    "example {}\t{}\tprinted {}\tcomputed {}\t{}",
                    f.example_id, f.checked_claim, f.paper_value, f.computed_value, f.verdict
                );
                if let Some(note) = &f.note {
                    print!("\t{note}");
                }
                println!();
            }
        }
    }
    if gold_case_matches(&findings) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_INCONSISTENT)
    }
}

fn run_specialize(from: &str, to: &str) -> ExitCode {
    let parsed = from
        .parse::<SplittingType>()
        .and_then(|g| Ok((g, to.parse::<SplittingType>()?)));
    let (general, special) = match parsed {
        Ok(p) => p,
        Err(err) => return fail(&err),
    };
    match specialization_check(&general, &special) {
        Ok(()) => {
            println!("true");
            ExitCode::SUCCESS
        }
        Err(reason) => {
            println!("false: {reason}");
            ExitCode::from(EXIT_NOT_SPECIALIZATION)
        }
    }
}

fn run_hilbert(args: &ConfigArgs, eval: &[i64]) -> ExitCode {
    let poly = match config(args).and_then(|cfg| hilbert_polynomial(&cfg)) {
        Ok(p) => p,
        Err(err) => return fail(&err),
    };
    println!("P(m) = {poly}");
    for (i, c) in poly.coeffs.iter().enumerate() {
        println!("c{i} = {c}");
    }
    for &m in eval {
        println!("P({m}) = {}", poly.eval(m));
    }
    ExitCode::SUCCESS
}

fn main() -> anyhow::Result<ExitCode> {
    let cli = Cli::parse();
    Ok(match &cli.command {
        Command::Analyze {
            cfg,
            format,
            audit_mode,
        } => run_analyze(cfg, *format, *audit_mode),
        Command::Scan {
            e,
            b_min,
            b_max,
            out,
            format,
            threads,
        } => run_scan(*e, *b_min, *b_max, out, *format, *threads)?,
        Command::AuditExamples { format } => run_audit(*format),
        Command::Specialize { from, to } => run_specialize(from, to),
        Command::HilbertPoly { cfg, eval } => run_hilbert(cfg, eval),
    })
}
