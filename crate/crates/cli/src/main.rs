use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lieinv::{
    cmd_export_table, cmd_invariants, cmd_verify, parse_suites, read_report, render, CliError, Format, RunConfig,
};

#[derive(Parser)]
#[command(name = "lieinv", version, about = "Exact invariants of Borel subalgebras of G2, F4 and C_n")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites; exit 1 if any claim fails.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Comma-separated suites (default: all that apply).
        #[arg(long)]
        suites: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Print the invariant family, optionally with oracle dimensions.
    Invariants {
        #[command(flatten)]
        common: Common,
        /// Compare brute-force invariant spaces with the generated span.
        #[arg(long)]
        oracle: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: InvFormat,
    },
    /// Re-render a json report.
    Report {
        /// A report written by `verify --format json`.
        input: PathBuf,
        #[arg(long, value_enum, default_value = "markdown")]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write a built-in table in the table file format.
    ExportTable {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Common {
    /// g2-borel, g2-nil, f4-borel, f4-nil, cn-borel, cn-nil or a table file.
    #[arg(long)]
    algebra: String,
    /// Rank for the cn algebras.
    #[arg(long)]
    n: Option<usize>,
    /// 0 or an odd prime.
    #[arg(long = "char", default_value_t = 0)]
    characteristic: u32,
    #[arg(long)]
    max_degree: Option<u32>,
    /// Corrections overlay (default: the built-in one).
    #[arg(long)]
    corrections: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Markdown,
}

#[derive(Clone, Copy, ValueEnum)]
enum InvFormat {
    Text,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Markdown => Format::Markdown,
        }
    }
}

impl Common {
    fn config(self) -> RunConfig {
        RunConfig {
            algebra: self.algebra,
            n: self.n,
            characteristic: self.characteristic,
            max_degree: self.max_degree,
            corrections: self.corrections,
            ..RunConfig::default()
        }
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), CliError> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::Io(p.clone(), e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Verify { common, suites, format, out, jobs } => {
            let mut cfg = common.config();
            cfg.jobs = jobs;
            cfg.suites = suites.as_deref().map(parse_suites).transpose()?;
            let report = cmd_verify(&cfg)?;
            emit(&render(&report, format.into()), out.as_ref())?;
            let s = &report.summary;
            eprintln!(
                "{} verified, {} derived with note, {} asserted, {} failed",
                s.verified, s.derived_with_note, s.asserted_not_verified, s.fail
            );
            Ok(report.passed())
        }
        Command::Invariants { common, oracle, format } => {
            let out = cmd_invariants(&common.config(), oracle)?;
            match format {
                InvFormat::Text => print!("{}", out.to_text()),
                InvFormat::Json => println!("{}", serde_json::to_string_pretty(&out).expect("serializes")),
            }
            Ok(out.consistent())
        }
        Command::Report { input, format, out } => {
            let report = read_report(&input)?;
            emit(&render(&report, format.into()), out.as_ref())?;
            Ok(true)
        }
        Command::ExportTable { common, out } => {
            let table = cmd_export_table(&common.config())?;
            let mut text = serde_json::to_string_pretty(&table).expect("serializes");
            text.push('\n');
            emit(&text, out.as_ref())?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
