//! Command-line front end.
//!
//! Exit codes: 0 for an affirmative answer, 2 for a well-formed query whose
//! answer is negative, 1 for bad input.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::admissibility::{
    construct_admissible, criterion, discrepancy, discrepancy_bound, is_admissible,
    window_weight_profile, AdmissibilityQuery, Configuration,
};
use crate::error::Error;
use crate::euclid::{arrange_traced, cf_expansion, smith_ladder};
use crate::rotation::canonical_rotation;
use crate::sweep::{balance_sweep, equivalence_sweep, oracle_grid, SweepReport};
use crate::words::{gcd, mechanical_word, Alphabet, BinaryWord, Slope};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT_ERROR: i32 = 1;
pub const EXIT_NEGATIVE: i32 = 2;

/// Largest `n` accepted by `verify`.
pub const VERIFY_CAP: usize = 200;
/// `verify` runs the exhaustive search only up to this `n`.
pub const ORACLE_GRID_MAX: usize = 12;

#[derive(Debug, Parser)]
#[command(name = "christoffel", version, about = "Balanced circular arrangements of two kinds of players")]
struct Cli {
    /// Output format
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    /// Letters used to read and print words
    #[arg(long, value_enum, global = true, default_value_t = AlphabetArg::Letters)]
    alphabet: AlphabetArg,
    /// Print intermediate stages and full window profiles
    #[arg(long, global = true)]
    verbose: bool,
    /// Print the lexicographically least rotation of generated words
    #[arg(long, global = true)]
    canonical: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AlphabetArg {
    #[value(name = "AB")]
    Letters,
    #[value(name = "01")]
    Digits,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Mechanical,
    Euclid,
    Smith,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Mechanical => "mechanical",
            Method::Euclid => "euclid",
            Method::Smith => "smith",
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether n players with k marked can rotate so every s on court include t marked
    Plan { n: usize, k: usize, s: usize, t: usize },
    /// Build a balanced word with k letters A among n
    Generate {
        n: usize,
        k: usize,
        #[arg(long, value_enum, default_value_t = Method::Mechanical)]
        method: Method,
    },
    /// Check a given circular word against window size s and threshold t
    Check { word: String, s: usize, t: usize },
    /// Run the exhaustive cross-checks up to n_max
    Verify {
        #[arg(value_name = "N_MAX")]
        n_max_arg: Option<usize>,
        #[arg(long = "n-max", value_name = "N_MAX")]
        n_max: Option<usize>,
    },
    /// Window discrepancy of the mechanical word of slope k/n
    Discrepancy { n: usize, k: usize, m: usize },
}

/// One machine-readable record. Field names are stable.
#[derive(Debug, Default, Serialize)]
pub struct Record {
    pub command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub method: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub word: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nt: Option<u128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ks: Option<u128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_start: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_weight: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub profile: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub discrepancy: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound_applies: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quotients: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub remainders: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gcd: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stages: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ladder: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_max: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equivalence_pairs: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_cells: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub balance_cases: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failures: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// Everything one invocation produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Settings {
    format: Format,
    alphabet: Alphabet,
    verbose: bool,
    canonical: bool,
}

impl Settings {
    fn render(&self, w: &BinaryWord) -> String {
        w.render(self.alphabet)
    }

    fn present(&self, w: BinaryWord) -> BinaryWord {
        if self.canonical && !w.is_empty() {
            canonical_rotation(&w).expect("non-empty").0
        } else {
            w
        }
    }
}

/// A finished command: exit code, machine record, and human text.
struct Report {
    code: i32,
    record: Record,
    text: String,
}

struct InputError {
    command: &'static str,
    message: String,
}

impl InputError {
    fn new(command: &'static str, message: impl ToString) -> Self {
        InputError {
            command,
            message: message.to_string(),
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: EXIT_OK,
                    stdout: rendered,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: EXIT_INPUT_ERROR,
                    stdout: String::new(),
                    stderr: rendered,
                },
            };
        }
    };
    let settings = Settings {
        format: cli.format,
        alphabet: match cli.alphabet {
            AlphabetArg::Letters => Alphabet::Letters,
            AlphabetArg::Digits => Alphabet::Digits,
        },
        verbose: cli.verbose,
        canonical: cli.canonical,
    };
    let result = match cli.command {
        Command::Plan { n, k, s, t } => cmd_plan(&settings, n, k, s, t),
        Command::Generate { n, k, method } => cmd_generate(&settings, n, k, method),
        Command::Check { word, s, t } => cmd_check(&settings, &word, s, t),
        Command::Verify { n_max_arg, n_max } => cmd_verify(n_max_arg.or(n_max)),
        Command::Discrepancy { n, k, m } => cmd_discrepancy(&settings, n, k, m),
    };
    match (result, settings.format) {
        (Ok(report), Format::Text) => Outcome {
            code: report.code,
            stdout: report.text,
            stderr: String::new(),
        },
        (Ok(report), Format::Machine) => Outcome {
            code: report.code,
            stdout: to_line(&report.record),
            stderr: String::new(),
        },
        (Err(e), Format::Text) => Outcome {
            code: EXIT_INPUT_ERROR,
            stdout: String::new(),
            stderr: format!("error: {}\n", e.message),
        },
        (Err(e), Format::Machine) => Outcome {
            code: EXIT_INPUT_ERROR,
            stdout: to_line(&Record {
                command: e.command,
                verdict: Some("error"),
                error: Some(e.message),
                ..Default::default()
            }),
            stderr: String::new(),
        },
    }
}

fn to_line(record: &Record) -> String {
    let mut line = serde_json::to_string(record).expect("record serializes");
    line.push('\n');
    line
}

fn join(values: &[usize]) -> String {
    values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn cmd_plan(cfg: &Settings, n: usize, k: usize, s: usize, t: usize) -> Result<Report, InputError> {
    let q = AdmissibilityQuery::new(n, k, s, t).map_err(|e| InputError::new("plan", e))?;
    let mut record = Record {
        command: "plan",
        n: Some(n),
        k: Some(k),
        s: Some(s),
        t: Some(t),
        nt: Some(q.nt()),
        ks: Some(q.ks()),
        ..Default::default()
    };
    let mut text = String::new();
    let Some(c) = construct_admissible(&q) else {
        record.verdict = Some("impossible");
        writeln!(text, "IMPOSSIBLE: nt = {} > ks = {}", q.nt(), q.ks()).unwrap();
        return Ok(Report {
            code: EXIT_NEGATIVE,
            record,
            text,
        });
    };
    debug_assert!(criterion(&q));
    let word = cfg.present(c.into_spots());
    let c = Configuration::new(word).expect("n >= 2");
    let verdict = is_admissible(&c, s, t).expect("s < n");
    let profile: Vec<usize> = window_weight_profile(&c, s)
        .expect("s < n")
        .iter()
        .map(|w| w.weight)
        .collect();
    let trivially = if t == 0 { " (trivially, t = 0)" } else { "" };
    writeln!(text, "ADMISSIBLE{trivially}: nt = {} <= ks = {}", q.nt(), q.ks()).unwrap();
    writeln!(text, "arrangement: {}", cfg.render(c.spots())).unwrap();
    writeln!(text, "profile: {}", join(&profile)).unwrap();
    writeln!(
        text,
        "min window weight: {} (start {})",
        verdict.min_window.weight, verdict.min_window.start
    )
    .unwrap();
    record.verdict = Some("admissible");
    record.word = Some(cfg.render(c.spots()));
    record.profile = Some(profile);
    record.witness_start = Some(verdict.min_window.start);
    record.witness_weight = Some(verdict.min_window.weight);
    Ok(Report {
        code: EXIT_OK,
        record,
        text,
    })
}

fn cmd_generate(cfg: &Settings, n: usize, k: usize, method: Method) -> Result<Report, InputError> {
    let err = |e: Error| InputError::new("generate", e);
    if k == 0 || k >= n {
        return Err(err(Error::InvalidPair { n, k }));
    }
    let mut record = Record {
        command: "generate",
        n: Some(n),
        k: Some(k),
        method: Some(method.name()),
        ..Default::default()
    };
    let mut text = String::new();
    let word = match method {
        Method::Mechanical => mechanical_word(Slope::new(k, n).map_err(err)?),
        Method::Euclid => {
            let a = arrange_traced(n, k).map_err(err)?;
            record.quotients = Some(a.trace.quotients());
            record.remainders = Some(a.trace.remainders());
            record.gcd = Some(a.trace.gcd());
            if cfg.verbose {
                write!(text, "{}", a.trace).unwrap();
                for stage in &a.stages {
                    writeln!(text, "stage: {stage}").unwrap();
                }
                record.stages = Some(a.stages.iter().map(|s| s.to_string()).collect());
            }
            a.configuration.into_spots()
        }
        Method::Smith => {
            let d = gcd(n, k);
            if d != 1 {
                return Err(err(Error::NotCoprime { gcd: d }));
            }
            let cf = cf_expansion(n, k).map_err(err)?;
            let quotients = cf.decremented();
            let mut ladder = smith_ladder(&quotients).map_err(err)?;
            record.quotients = Some(quotients.clone());
            if cfg.verbose {
                writeln!(text, "quotients: {}", join(&quotients)).unwrap();
                for (i, s) in ladder.iter().enumerate() {
                    writeln!(text, "S{} = {}", i + 1, cfg.render(s)).unwrap();
                }
                record.ladder = Some(ladder.iter().map(|s| cfg.render(s)).collect());
            }
            ladder.pop().expect("non-empty ladder")
        }
    };
    let word = cfg.present(word);
    let rendered = cfg.render(&word);
    writeln!(text, "{rendered}").unwrap();
    record.word = Some(rendered);
    Ok(Report {
        code: EXIT_OK,
        record,
        text,
    })
}

fn cmd_check(cfg: &Settings, word: &str, s: usize, t: usize) -> Result<Report, InputError> {
    let err = |e: Error| InputError::new("check", e);
    let c = Configuration::new(BinaryWord::parse(word, cfg.alphabet).map_err(err)?).map_err(err)?;
    let verdict = is_admissible(&c, s, t).map_err(err)?;
    let w = verdict.min_window;
    let mut text = String::new();
    let mut record = Record {
        command: "check",
        n: Some(c.n()),
        k: Some(c.k()),
        s: Some(s),
        t: Some(t),
        word: Some(cfg.render(c.spots())),
        witness_start: Some(w.start),
        witness_weight: Some(w.weight),
        ..Default::default()
    };
    let code = if verdict.admissible {
        record.verdict = Some("admissible");
        writeln!(
            text,
            "ADMISSIBLE: every window of {s} spots holds at least {t} A (min {} at start {})",
            w.weight, w.start
        )
        .unwrap();
        EXIT_OK
    } else {
        record.verdict = Some("not_admissible");
        writeln!(
            text,
            "NOT ADMISSIBLE: window at start {} holds {} < {t} A",
            w.start, w.weight
        )
        .unwrap();
        EXIT_NEGATIVE
    };
    if cfg.verbose {
        let profile: Vec<usize> = window_weight_profile(&c, s)
            .map_err(err)?
            .iter()
            .map(|w| w.weight)
            .collect();
        writeln!(text, "profile: {}", join(&profile)).unwrap();
        record.profile = Some(profile);
    }
    Ok(Report { code, record, text })
}

fn sweep_status(report: &SweepReport, ok: &str) -> String {
    if report.passed() {
        ok.to_owned()
    } else {
        format!("FAILED ({} of {})", report.failures.len(), report.checked)
    }
}

fn cmd_verify(n_max: Option<usize>) -> Result<Report, InputError> {
    let n_max = n_max.ok_or_else(|| InputError::new("verify", "missing N_MAX"))?;
    if !(2..=VERIFY_CAP).contains(&n_max) {
        return Err(InputError::new(
            "verify",
            format!("n_max {n_max} out of range 2..={VERIFY_CAP}"),
        ));
    }
    let equivalence = equivalence_sweep(n_max);
    let grid = oracle_grid(n_max.min(ORACLE_GRID_MAX));
    let balance = balance_sweep(n_max);

    let mut text = String::new();
    writeln!(
        text,
        "equivalence: {} coprime pairs {}; oracle grid: {}; balance: {}",
        equivalence.checked,
        sweep_status(&equivalence, "OK"),
        sweep_status(&grid, "all cells OK"),
        sweep_status(&balance, "OK"),
    )
    .unwrap();
    writeln!(
        text,
        "checked: {} coprime pairs, {} oracle cells (n <= {}), {} balance cases (n <= {})",
        equivalence.checked,
        grid.checked,
        n_max.min(ORACLE_GRID_MAX),
        balance.checked,
        n_max
    )
    .unwrap();
    let failures: Vec<String> = [&equivalence, &grid, &balance]
        .iter()
        .flat_map(|r| r.failures.iter().cloned())
        .collect();
    for f in &failures {
        writeln!(text, "counterexample: {f}").unwrap();
    }
    let passed = failures.is_empty();
    let record = Record {
        command: "verify",
        n_max: Some(n_max),
        verdict: Some(if passed { "pass" } else { "fail" }),
        equivalence_pairs: Some(equivalence.checked),
        oracle_cells: Some(grid.checked),
        balance_cases: Some(balance.checked),
        failures: Some(failures),
        ..Default::default()
    };
    Ok(Report {
        code: if passed { EXIT_OK } else { EXIT_NEGATIVE },
        record,
        text,
    })
}

fn cmd_discrepancy(cfg: &Settings, n: usize, k: usize, m: usize) -> Result<Report, InputError> {
    let err = |e: Error| InputError::new("discrepancy", e);
    if k == 0 || k >= n {
        return Err(err(Error::InvalidPair { n, k }));
    }
    let c = Configuration::new(mechanical_word(Slope::new(k, n).map_err(err)?)).map_err(err)?;
    let value = discrepancy(&c, m).map_err(err)?;
    let bound = discrepancy_bound(n, k, m);
    let applies = 2 * k <= n;
    let mut text = String::new();
    writeln!(text, "word: {}", cfg.render(c.spots())).unwrap();
    writeln!(text, "discrepancy: {value}").unwrap();
    let (verdict, code) = if !applies {
        writeln!(text, "bound: {bound} (bound not asserted for k > n/2)").unwrap();
        ("not_asserted", EXIT_OK)
    } else if value as i64 <= bound {
        writeln!(text, "bound: {bound} (applies, holds)").unwrap();
        ("within_bound", EXIT_OK)
    } else {
        writeln!(text, "bound: {bound} (applies, VIOLATED)").unwrap();
        ("exceeds_bound", EXIT_NEGATIVE)
    };
    let record = Record {
        command: "discrepancy",
        n: Some(n),
        k: Some(k),
        m: Some(m),
        word: Some(cfg.render(c.spots())),
        discrepancy: Some(value),
        bound: Some(bound),
        bound_applies: Some(applies),
        verdict: Some(verdict),
        ..Default::default()
    };
    Ok(Report { code, record, text })
}
