use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use hurwitz_cf::cfengine::{expand_value, Algorithm, Expansion, Status};
use hurwitz_cf::classify::{classify, PurePeriodicityReport};
use hurwitz_cf::expr::parse_expr;
use hurwitz_cf::notation::{format_expansion, Style};
use hurwitz_cf::tables::{run_row, rows};
use hurwitz_cf::verify::{run_suite, Suite};
use hurwitz_cf::Error;

const SCHEMA: &str = "hurwitz-cf/1";

#[derive(Parser)]
#[command(name = "hurwitz-cf", version, about = "Exact complex continued fractions over Q(i) and its quadratic extensions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Expand a value with the H, T or dual algorithm.
    Expand {
        /// Exact value, e.g. "sqrt(2+i)-2" or "(2+i)/(9+8i)".
        expr: String,
        #[arg(long, value_enum, default_value_t = Algo::H)]
        algo: Algo,
        #[arg(long, default_value_t = hurwitz_cf::cfengine::DEFAULT_MAX_STEPS)]
        max_steps: usize,
        #[arg(long)]
        json: bool,
        /// Bracket notation with TeX overline, as used in the tables.
        #[arg(long)]
        paper_style: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide pure periodicity by the region criterion and by the orbit.
    Classify {
        expr: String,
        #[arg(long, value_enum, default_value_t = ClassifyAlgo::H)]
        algo: ClassifyAlgo,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recompute the tables of sqrt(m+ni) - floor_H expansions.
    Tables {
        #[arg(long, default_value = "all", value_parser = ["1", "2", "all"])]
        table: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run seeded verification suites.
    Verify {
        #[arg(long, default_value = "all", value_parser = ["tilings", "lemmas", "periodicity", "dual", "natext", "sqrt-sweep", "all"])]
        suite: String,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Sample size; each suite has its own default.
        #[arg(long)]
        count: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Algo {
    H,
    T,
    D,
}

impl From<Algo> for Algorithm {
    fn from(a: Algo) -> Self {
        match a {
            Algo::H => Algorithm::H,
            Algo::T => Algorithm::T,
            Algo::D => Algorithm::D,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassifyAlgo {
    H,
    T,
}

impl From<ClassifyAlgo> for Algorithm {
    fn from(a: ClassifyAlgo) -> Self {
        match a {
            ClassifyAlgo::H => Algorithm::H,
            ClassifyAlgo::T => Algorithm::T,
        }
    }
}

#[derive(Serialize)]
struct OutputRecord {
    schema: &'static str,
    input: String,
    algorithm: String,
    initial: String,
    preperiod: Vec<String>,
    period: Vec<String>,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    classification: Option<ClassificationRecord>,
}

impl OutputRecord {
    fn new(input: &str, e: &Expansion) -> Self {
        OutputRecord {
            schema: SCHEMA,
            input: input.to_string(),
            algorithm: e.algorithm.to_string(),
            initial: e.initial.to_string(),
            preperiod: e.preperiod.iter().map(|q| q.value.to_string()).collect(),
            period: e.period.iter().map(|q| q.value.to_string()).collect(),
            status: e.status.as_str(),
            classification: None,
        }
    }
}

#[derive(Serialize)]
struct ClassificationRecord {
    predicate: bool,
    oracle: bool,
    period_length: Option<usize>,
    witness: Vec<WitnessRecord>,
}

#[derive(Serialize)]
struct WitnessRecord {
    role: &'static str,
    region: String,
    member: bool,
}

impl From<&PurePeriodicityReport> for ClassificationRecord {
    fn from(r: &PurePeriodicityReport) -> Self {
        ClassificationRecord {
            predicate: r.predicate_result,
            oracle: r.oracle_result,
            period_length: r.period_length,
            witness: r
                .witness
                .iter()
                .map(|&(role, region, member)| WitnessRecord { role, region: region.to_string(), member })
                .collect(),
        }
    }
}

/// Text to emit and the exit code.
struct Outcome {
    text: String,
    code: u8,
}

fn error_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. }
        | Error::Domain(_)
        | Error::NotQuadratic(_)
        | Error::NoConjugate
        | Error::SquareRadicand(_)
        | Error::FieldMismatch(..)
        | Error::DivisionByZero
        | Error::NotEven(_) => 2,
        Error::Inconclusive(_) => 3,
        _ => 1,
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("records serialize") + "\n"
}

fn cmd_expand(expr: &str, algo: Algorithm, max_steps: usize, json: bool, bracket: bool) -> Result<Outcome, Error> {
    let value = parse_expr(expr)?;
    let e = expand_value(&value, algo, max_steps)?;
    let code = if e.status == Status::Truncated { 3 } else { 0 };
    let text = if json {
        to_json(&OutputRecord::new(expr, &e))
    } else {
        let style = if bracket { Style::Bracket } else { Style::Plain };
        format!("{}\n", format_expansion(&e, style))
    };
    Ok(Outcome { text, code })
}

fn cmd_classify(expr: &str, algo: Algorithm, json: bool) -> Result<Outcome, Error> {
    let value = parse_expr(expr)?;
    let report = classify(&value, algo)?;
    let e = expand_value(&value, algo, hurwitz_cf::cfengine::DEFAULT_MAX_STEPS)?;
    let code = if report.agrees() { 0 } else { 1 };
    let text = if json {
        let mut rec = OutputRecord::new(expr, &e);
        rec.classification = Some((&report).into());
        to_json(&rec)
    } else {
        let mut s = format!(
            "algorithm: {algo}\nexpansion: {}\ncriterion: {}\norbit: {}\n",
            format_expansion(&e, Style::Plain),
            report.predicate_result,
            report.oracle_result
        );
        match report.period_length {
            Some(m) => s += &format!("period length: {m}\n"),
            None => s += "period length: none\n",
        }
        for (role, region, member) in &report.witness {
            s += &format!("{role} in {region}: {member}\n");
        }
        if !report.agrees() {
            s += "criterion and orbit disagree\n";
        }
        s
    };
    Ok(Outcome { text, code })
}

fn cmd_tables(table: &str) -> Result<Outcome, Error> {
    let which = table.parse::<u8>().ok();
    let mut text = String::new();
    let mut bad = 0;
    let all = rows(which);
    for (label, expected) in &all {
        let row = run_row(label, expected)?;
        if row.matches() {
            text += &format!("ok {}  {}\n", row.label, row.computed);
        } else {
            bad += 1;
            text += &format!(
                "MISMATCH {}\n  expected: {} {}\n  computed: {} {}\n",
                label, row.expected_label, row.expected, row.label, row.computed
            );
        }
    }
    text += &format!("{} of {} rows match\n", all.len() - bad, all.len());
    Ok(Outcome { text, code: if bad == 0 { 0 } else { 1 } })
}

fn cmd_verify(suite: &str, seed: u64, count: Option<usize>) -> Outcome {
    let suites: Vec<Suite> = match Suite::from_name(suite) {
        Some(s) => vec![s],
        None => Suite::ALL.to_vec(),
    };
    let mut text = String::new();
    let (mut passed, mut failed) = (0, 0);
    for s in suites {
        let report = run_suite(s, seed, count);
        passed += report.passed();
        failed += report.failed();
        text += &report.to_string();
    }
    text += &format!("total: {passed} passed, {failed} failed (seed {seed})\n");
    Outcome { text, code: if failed == 0 { 0 } else { 1 } }
}

fn emit(outcome: Outcome, out: Option<PathBuf>) -> ExitCode {
    match out {
        Some(path) => {
            if let Err(e) = fs::write(&path, &outcome.text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(1);
            }
        }
        None => print!("{}", outcome.text),
    }
    ExitCode::from(outcome.code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (result, out) = match cli.command {
        Command::Expand { expr, algo, max_steps, json, paper_style, out } => {
            (cmd_expand(&expr, algo.into(), max_steps, json, paper_style), out)
        }
        Command::Classify { expr, algo, json, out } => (cmd_classify(&expr, algo.into(), json), out),
        Command::Tables { table, out } => (cmd_tables(&table), out),
        Command::Verify { suite, seed, count, out } => (Ok(cmd_verify(&suite, seed, count)), out),
    };
    match result {
        Ok(outcome) => {
            if outcome.code == 3 {
                eprintln!("warning: expansion truncated before the orbit closed");
            }
            emit(outcome, out)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(error_code(&e))
        }
    }
}
