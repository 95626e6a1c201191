//! `hybrid-horadam`: terms, hybrid terms, the family table and identity sweeps.
//!
//! Exit status: 0 success, 1 at least one identity check failed, 2 usage or
//! configuration error.

mod config;
mod error;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hybrid_horadam::rational::parse_rational;
use hybrid_horadam::sweep::{self, SweepPlan};
use hybrid_horadam::{Family, HybridSeq, Params, Rational, Recurrence, Sequence, FAMILIES};
use serde::Deserialize;

use config::SweepConfig;
use error::CliError;
use output::{Cell, Row, Sink};

#[derive(Parser)]
#[command(name = "hybrid-horadam", version, about = "Exact bi-periodic Horadam hybrid numbers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sequence terms w_n, optionally with hybrid components and the closed form.
    Term {
        #[command(flatten)]
        seq: SeqArgs,
        /// Add K_n components and its character.
        #[arg(long)]
        hybrid: bool,
    },
    /// Hybrid terms K_n with their characters.
    Hybrid {
        #[command(flatten)]
        seq: SeqArgs,
    },
    /// The named special families.
    Families {
        #[command(flatten)]
        out: OutArgs,
    },
    /// Run identity checks and report every check.
    Verify {
        /// JSON sweep configuration; without it every identity runs on the standard grid.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Per-identity summary CSV; printed to stdout when omitted.
        #[arg(long)]
        summary: Option<PathBuf>,
        #[command(flatten)]
        out: OutArgs,
    },
}

#[derive(Args)]
struct OutArgs {
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write records here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Args)]
struct SeqArgs {
    /// Named family; see `families`.
    #[arg(long, conflicts_with_all = ["a", "b", "c", "w0", "w1"])]
    family: Option<String>,
    /// Free parameter of the family, in order; repeat as needed.
    #[arg(long = "param", value_parser = rational, allow_hyphen_values = true)]
    params: Vec<Rational>,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    a: Option<Rational>,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    b: Option<Rational>,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    c: Option<Rational>,
    #[arg(long, value_parser = rational, allow_hyphen_values = true, default_value = "0")]
    w0: Rational,
    #[arg(long, value_parser = rational, allow_hyphen_values = true, default_value = "1")]
    w1: Rational,
    /// Single index.
    #[arg(long, conflicts_with_all = ["from", "to"], allow_hyphen_values = true)]
    n: Option<i64>,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    from: i64,
    #[arg(long, default_value_t = 10, allow_hyphen_values = true)]
    to: i64,
    /// Add the closed form, evaluated in Q(√Δ²); needs Δ² ≠ 0 and n ≥ 0.
    #[arg(long)]
    binet: bool,
    #[command(flatten)]
    out: OutArgs,
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

impl SeqArgs {
    fn recurrence(&self) -> Result<Recurrence<Rational>, CliError> {
        let [w0, w1, a, b, c] = match &self.family {
            Some(name) => Family::by_name(name)?.resolve(&self.params)?,
            None => {
                if !self.params.is_empty() {
                    return Err(CliError::Usage("--param needs --family".into()));
                }
                let need = |x: &Option<Rational>, flag: &str| {
                    x.clone().ok_or_else(|| CliError::Usage(format!("missing --{flag} (or use --family)")))
                };
                [
                    self.w0.clone(),
                    self.w1.clone(),
                    need(&self.a, "a")?,
                    need(&self.b, "b")?,
                    need(&self.c, "c")?,
                ]
            }
        };
        Ok(Recurrence::new(a, b, c, w0, w1)?)
    }

    fn indices(&self) -> Result<std::ops::RangeInclusive<i64>, CliError> {
        let range = match self.n {
            Some(n) => n..=n,
            None => self.from..=self.to,
        };
        if range.is_empty() {
            return Err(CliError::Usage(format!("empty range {}..={}", self.from, self.to)));
        }
        if self.binet && *range.start() < 0 {
            return Err(CliError::Usage("--binet is defined for n >= 0 only".into()));
        }
        Ok(range)
    }
}

fn cmd_term(args: &SeqArgs, hybrid: bool, columns_w: bool) -> Result<ExitCode, CliError> {
    let rec = args.recurrence()?;
    let range = args.indices()?;
    let seq = Sequence::new(rec.clone());
    let closed = if args.binet {
        let p = Params::from_recurrence(rec)?;
        Some(HybridSeq::new(p))
    } else {
        None
    };
    let mut rows = Vec::new();
    for n in range {
        let mut row = Row::new();
        row.push("n", Cell::Int(n));
        if columns_w {
            row.push("w", Cell::Rat(seq.term(n)));
        }
        if hybrid {
            let k = seq.hybrid_term(n);
            let character = k.character_closed_form();
            for (name, x) in ["re", "i", "eps", "h"].into_iter().zip(k.components()) {
                row.push(name, Cell::Rat(x.clone()));
            }
            row.push("character", Cell::Rat(character));
        }
        if let Some(hs) = &closed {
            if hybrid && !columns_w {
                let kb = hs.term_binet(n);
                for (name, x) in ["binet_re", "binet_i", "binet_eps", "binet_h"].into_iter().zip(kb.components()) {
                    row.push(name, Cell::Quad(x.clone()));
                }
            } else {
                row.push("binet", Cell::Quad(hs.params().term_binet(n)));
            }
        }
        rows.push(row);
    }
    let mut sink = Sink::open(args.out.out.as_deref())?;
    sink.rows(&rows, args.out.format.unwrap_or_default())?;
    sink.finish()?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_families(out: &OutArgs) -> Result<ExitCode, CliError> {
    let rows: Vec<Row> = FAMILIES
        .iter()
        .map(|f| {
            let mut row = Row::new();
            row.push("name", Cell::Text(f.name.into()));
            row.push("symbol", Cell::Text(f.symbol.into()));
            row.push("tuple", Cell::Text(f.tuple_text()));
            row.push("free", Cell::Text(f.free.join(" ")));
            row.push("description", Cell::Text(f.description.into()));
            row
        })
        .collect();
    let mut sink = Sink::open(out.out.as_deref())?;
    sink.rows(&rows, out.format.unwrap_or_default())?;
    sink.finish()?;
    Ok(ExitCode::SUCCESS)
}

/// How many failing checks are echoed to stderr.
const DIAGNOSTIC_LIMIT: usize = 20;

fn cmd_verify(config: Option<&PathBuf>, summary: Option<PathBuf>, out: &OutArgs) -> Result<ExitCode, CliError> {
    let (plan, cfg) = match config {
        Some(path) => {
            let cfg = SweepConfig::load(path)?;
            (cfg.plan()?, Some(cfg))
        }
        None => (SweepPlan::standard(), None),
    };
    let format = out.format.or(cfg.as_ref().and_then(|c| c.format)).unwrap_or_default();
    let records_path = out.out.clone().or_else(|| cfg.as_ref().and_then(|c| c.out.clone()));
    let summary_path = summary.or_else(|| cfg.as_ref().and_then(|c| c.summary.clone()));

    let result = sweep::run(&plan);

    if let Some(path) = &records_path {
        let mut sink = Sink::open(Some(path))?;
        sink.records(&result, format)?;
        sink.finish()?;
    }
    let mut sink = Sink::open(summary_path.as_deref())?;
    sink.text(&result.summary_csv())?;
    sink.finish()?;

    let bad: Vec<_> = result.records.iter().filter(|r| !r.is_ok()).collect();
    for r in bad.iter().take(DIAGNOSTIC_LIMIT) {
        eprintln!("{}", output::diagnostic(r, result.params_of(r)));
    }
    if bad.len() > DIAGNOSTIC_LIMIT {
        eprintln!("... {} more", bad.len() - DIAGNOSTIC_LIMIT);
    }
    Ok(if bad.is_empty() {
        ExitCode::SUCCESS
    } else {
        eprintln!("{} of {} checks failed", bad.len(), result.records.len());
        ExitCode::from(1)
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Term { seq, hybrid } => cmd_term(seq, *hybrid, true),
        Command::Hybrid { seq } => cmd_term(seq, true, false),
        Command::Families { out } => cmd_families(out),
        Command::Verify { config, summary, out } => cmd_verify(config.as_ref(), summary.clone(), out),
    };
    outcome.unwrap_or_else(|e| {
        eprintln!("error: {e}");
        ExitCode::from(2)
    })
}
