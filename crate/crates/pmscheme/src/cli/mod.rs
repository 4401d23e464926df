//! The `pms` command line: cohomology dimensions, verification suites,
//! obstruction reports for scheme descriptions, and the dimension table.
//!
//! Exit codes: 0 pass, 1 verification failure, 2 input error.

pub mod suites;

use crate::cech::cohomology_dim;
use crate::pms::{obstruction_report, SchemeJson, Witness};
use crate::projbundle::{table, Grid};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::ffi::OsString;
use std::io::Write;
pub use suites::{Check, SuiteReport};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

pub const DEFAULT_SEED: u64 = 1;

#[derive(Parser, Debug)]
#[command(name = "pms", version, about = "Exact computations for primitive multiple schemes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// h^q(P^m, O(k)).
    Cohomology {
        #[arg(long)]
        m: usize,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long)]
        q: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run a verification suite.
    Verify {
        suite: Suite,
        /// Seed for the randomized suites; PM_SEED overrides it.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Obstruction report for a scheme description (JSON file, or - for stdin).
    Obstruction { input: String },
    /// Dimension table over a parameter grid.
    Table {
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Inclusive ranges a:b.
        #[arg(long, default_value = "0:3")]
        g: String,
        #[arg(long = "deg-e", value_delimiter = ',', allow_hyphen_values = true, default_value = "-1,0")]
        deg_e: Vec<i64>,
        #[arg(long, default_value = "3:6")]
        k: String,
        #[arg(long, default_value = "0:10")]
        d: String,
        #[arg(long, default_value = "1:6")]
        n: String,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    #[value(name = "p2-x2")]
    P2X2,
    #[value(name = "p2-x4")]
    P2X4,
    #[value(name = "prop8-oracle")]
    Prop8Oracle,
    #[value(name = "lemmas-2-3")]
    Lemmas23,
    GroupLaws,
    SerreDuality,
    DimFormulas,
    All,
}

impl Suite {
    pub const EACH: [Suite; 7] = [
        Suite::P2X2,
        Suite::P2X4,
        Suite::Prop8Oracle,
        Suite::Lemmas23,
        Suite::GroupLaws,
        Suite::SerreDuality,
        Suite::DimFormulas,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::P2X2 => "p2-x2",
            Suite::P2X4 => "p2-x4",
            Suite::Prop8Oracle => "prop8-oracle",
            Suite::Lemmas23 => "lemmas-2-3",
            Suite::GroupLaws => "group-laws",
            Suite::SerreDuality => "serre-duality",
            Suite::DimFormulas => "dim-formulas",
            Suite::All => "all",
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// A parsed invocation with the seed resolved.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    pub seed: u64,
}

impl RunConfig {
    /// PM_SEED, when set, wins over --seed.
    pub fn from_cli(cli: Cli, env_seed: Option<&str>) -> Result<RunConfig, String> {
        let flag = match &cli.command {
            Command::Verify { seed, .. } => *seed,
            _ => None,
        };
        let seed = match env_seed {
            Some(s) => s.trim().parse::<u64>().map_err(|_| format!("PM_SEED is not an unsigned integer: '{s}'"))?,
            None => flag.unwrap_or(DEFAULT_SEED),
        };
        Ok(RunConfig { command: cli.command, seed })
    }
}

pub fn run_suite(suite: Suite, seed: u64) -> Vec<SuiteReport> {
    let one = |s: Suite| {
        let checks = match s {
            Suite::P2X2 => suites::p2_x2_suite(),
            Suite::P2X4 => suites::p2_x4_suite(),
            Suite::Prop8Oracle => suites::prop8_suite(seed),
            Suite::Lemmas23 => suites::lemmas_suite(seed),
            Suite::GroupLaws => suites::group_laws_suite(seed),
            Suite::SerreDuality => suites::serre_duality_suite(),
            Suite::DimFormulas => suites::dim_formulas_suite(),
            Suite::All => unreachable!(),
        };
        SuiteReport { suite: s.name().into(), seed, checks }
    };
    match suite {
        Suite::All => Suite::EACH.iter().map(|&s| one(s)).collect(),
        s => vec![one(s)],
    }
}

fn parse_range(name: &str, s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s.split_once(':').ok_or_else(|| format!("--{name}: expected a:b, found '{s}'"))?;
    let a = a.trim().parse().map_err(|_| format!("--{name}: bad bound '{a}'"))?;
    let b = b.trim().parse().map_err(|_| format!("--{name}: bad bound '{b}'"))?;
    if a > b {
        return Err(format!("--{name}: empty range {s}"));
    }
    Ok((a, b))
}

fn json_line<T: Serialize>(out: &mut dyn Write, v: &T) -> std::io::Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(v).expect("serializable"))
}

/// Runs one invocation and returns the exit code.
pub fn execute(cfg: RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<i32> {
    match cfg.command {
        Command::Cohomology { m, k, q, format } => match cohomology_dim(m, k, q) {
            Ok(h) => {
                match format {
                    Format::Json => json_line(out, &serde_json::json!({ "m": m, "k": k, "q": q, "dim": h }))?,
                    _ => writeln!(out, "{h}")?,
                }
                Ok(EXIT_PASS)
            }
            Err(e) => {
                writeln!(err, "error: {e}")?;
                Ok(EXIT_INPUT)
            }
        },
        Command::Verify { suite, format, .. } => {
            let reports = run_suite(suite, cfg.seed);
            let passed = reports.iter().all(SuiteReport::passed);
            match format {
                Format::Json => json_line(out, &reports)?,
                _ => {
                    for r in &reports {
                        writeln!(out, "suite {} (seed {})", r.suite, r.seed)?;
                        for c in &r.checks {
                            writeln!(out, "  {} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail)?;
                        }
                        let n = r.checks.iter().filter(|c| c.passed).count();
                        writeln!(out, "{} {} ({}/{} checks)", if r.passed() { "PASS" } else { "FAIL" }, r.suite, n, r.checks.len())?;
                    }
                }
            }
            Ok(if passed { EXIT_PASS } else { EXIT_FAIL })
        }
        Command::Obstruction { input } => {
            let text = if input == "-" {
                std::io::read_to_string(std::io::stdin())
            } else {
                std::fs::read_to_string(&input)
            };
            let text = match text {
                Ok(t) => t,
                Err(e) => {
                    writeln!(err, "error: cannot read {input}: {e}")?;
                    return Ok(EXIT_INPUT);
                }
            };
            let desc: SchemeJson = match serde_json::from_str(&text) {
                Ok(d) => d,
                Err(e) => {
                    writeln!(err, "error: {e}")?;
                    return Ok(EXIT_INPUT);
                }
            };
            match obstruction_report(&desc) {
                Ok(report) => {
                    json_line(out, &report)?;
                    if let Witness::FailingTriple(t) = &report.witness {
                        writeln!(err, "error: transitions fail the cocycle relation on {t:?}")?;
                        return Ok(EXIT_INPUT);
                    }
                    Ok(EXIT_PASS)
                }
                Err(e) => {
                    writeln!(err, "error: {e}")?;
                    Ok(EXIT_INPUT)
                }
            }
        }
        Command::Table { format, g, deg_e, k, d, n } => {
            let grid = match (|| {
                Ok::<_, String>(Grid {
                    g: parse_range("g", &g)?,
                    deg_e,
                    k: parse_range("k", &k)?,
                    d: parse_range("d", &d)?,
                    n: parse_range("n", &n)?,
                })
            })() {
                Ok(grid) => grid,
                Err(e) => {
                    writeln!(err, "error: {e}")?;
                    return Ok(EXIT_INPUT);
                }
            };
            let rows = match table(&grid) {
                Ok(r) => r,
                Err(e) => {
                    writeln!(err, "error: {e}")?;
                    return Ok(EXIT_INPUT);
                }
            };
            match format {
                Format::Json => json_line(out, &rows)?,
                _ => {
                    let mut w = csv::Writer::from_writer(out);
                    for r in &rows {
                        w.serialize(r).map_err(std::io::Error::other)?;
                    }
                    w.flush()?;
                }
            }
            Ok(EXIT_PASS)
        }
    }
}

/// Parses arguments, applies PM_SEED and runs.
pub fn run<I, T>(args: I, env_seed: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_PASS };
            let _ = if e.use_stderr() { write!(err, "{}", e.render()) } else { write!(out, "{}", e.render()) };
            return code;
        }
    };
    let cfg = match RunConfig::from_cli(cli, env_seed) {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_INPUT;
        }
    };
    execute(cfg, out, err).unwrap_or(EXIT_INPUT)
}

/// Entry point of the `pms` binary.
pub fn main_entry() -> i32 {
    let env_seed = std::env::var("PM_SEED").ok();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), env_seed.as_deref(), &mut stdout.lock(), &mut stderr.lock())
}
