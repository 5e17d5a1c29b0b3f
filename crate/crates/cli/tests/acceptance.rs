//! Acceptance run: one PASS/FAIL line per criterion, with timings.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use hurwitz_cf::cfengine::{expand_value, Algorithm, Status, DEFAULT_MAX_STEPS};
use hurwitz_cf::exactnum::FieldType;
use hurwitz_cf::expr::parse_expr;
use hurwitz_cf::notation::{format_expansion, Style};
use hurwitz_cf::sampling::{quadratic_population, Origin, Sample};
use hurwitz_cf::verify::{self, Check};

const SEED: u64 = 7;

struct Outcome {
    ok: bool,
    detail: String,
}

fn from_checks(checks: &[Check]) -> Outcome {
    let failed: usize = checks.iter().map(|c| c.failed).sum();
    let passed: usize = checks.iter().map(|c| c.passed).sum();
    let mut detail = format!("{passed} passed, {failed} failed");
    for c in checks.iter().filter(|c| !c.ok()) {
        detail += &format!("\n    {c}");
        for f in c.failures.iter().take(3) {
            detail += &format!("\n      {f}");
        }
    }
    Outcome { ok: failed == 0 && passed > 0, detail }
}

fn run(id: &str, title: &str, limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let mut o = f();
    let took = start.elapsed();
    if let Some(limit) = limit {
        if took > limit {
            o.ok = false;
            o.detail += &format!(", over the {}s limit", limit.as_secs());
        }
    }
    let verdict = if o.ok { "PASS" } else { "FAIL" };
    println!("{verdict} {id} {title}: {} ({:.2}s)", o.detail, took.as_secs_f64());
    o.ok
}

fn examples() -> Outcome {
    let cases = [
        ("2/5", Algorithm::H, "[0;2,2]", Status::Finite),
        ("(2+i)/(9+8i)", Algorithm::H, "[0;5+i,1-2i]", Status::Finite),
        ("sqrt(2+i)-2", Algorithm::H, "[0;\\overline{-1-i,-3-i,1+i,3+i}]", Status::Periodic),
        ("1-sqrt(2)+(-2+sqrt(2))*i", Algorithm::H, "[0;\\overline{-1+i,3-3i,1-i,-3+3i}]", Status::Periodic),
        ("2/5", Algorithm::T, "[0;2,2]", Status::Finite),
        ("(2+i)/(9+8i)", Algorithm::T, "[0;5+i,2-2i,\\overline{0}]", Status::MinusOneTail),
        ("sqrt(2+i)-2", Algorithm::T, "[0;\\overline{-1-i,-3-i,1+i,3+i}]", Status::Periodic),
        ("1-sqrt(2)+(-2+sqrt(2))*i", Algorithm::T, "[0;\\overline{-1+i,4-2i,-1+i,-2+4i}]", Status::Periodic),
    ];
    let mut bad = Vec::new();
    for (input, algo, expected, status) in cases {
        let got = parse_expr(input).and_then(|a| expand_value(&a, algo, DEFAULT_MAX_STEPS));
        match got {
            Ok(e) => {
                let s = format_expansion(&e, Style::Bracket);
                if s != expected || e.status != status {
                    bad.push(format!("{algo} {input}: {s} ({})", e.status.as_str()));
                }
            }
            Err(e) => bad.push(format!("{algo} {input}: {e}")),
        }
    }
    let mut detail = format!("{} of {} match", cases.len() - bad.len(), cases.len());
    for b in &bad {
        detail += &format!("\n    {b}");
    }
    Outcome { ok: bad.is_empty(), detail }
}

fn tables() -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_hurwitz-cf"))
        .args(["tables", "--table", "all"])
        .env("NO_COLOR", "1")
        .output()
        .expect("binary runs");
    let stdout = String::from_utf8_lossy(&out.stdout);
    let summary = stdout.lines().last().unwrap_or("").to_string();
    let mut detail = summary.clone();
    for line in stdout.lines().filter(|l| !l.starts_with("ok ")) {
        if line != summary {
            detail += &format!("\n    {line}");
        }
    }
    Outcome { ok: out.status.success() && summary == "44 of 44 rows match", detail }
}

fn equivalence(pop: &[Sample]) -> (Outcome, Vec<hurwitz_cf::exactnum::FieldElement>) {
    let (checks, periodic) = verify::periodicity(pop);
    let mut o = from_checks(&checks);
    let type_b = pop
        .iter()
        .filter(|s| s.alpha.field().is_some_and(|f| f.field_type() == FieldType::B))
        .count();
    let boundary = pop.iter().filter(|s| matches!(s.origin, Origin::KArc(_) | Origin::YSegment(_))).count();
    o.ok &= pop.len() >= 300 && type_b > 0 && type_b < pop.len() && boundary > 0;
    o.detail += &format!(
        "; {} inputs, {} of type A, {type_b} of type B, {boundary} on K or Y",
        pop.len(),
        pop.len() - type_b
    );
    (o, periodic)
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let mut all = true;
    all &= run("A1", "example expansions", Some(secs(1)), examples);
    all &= run("A2", "table reproduction", Some(secs(10)), tables);

    let mut pop = Vec::new();
    let mut periodic = Vec::new();
    all &= run("A3", "criterion and orbit oracle agree", Some(secs(60)), || {
        pop = quadratic_population(SEED, 300);
        let (o, p) = equivalence(&pop);
        periodic = p;
        o
    });
    all &= run("A4", "dual reversal on purely periodic inputs", None, || {
        let mut o = from_checks(&[verify::dual_reversal(&periodic)]);
        o.detail += &format!(" over {} periodic inputs", periodic.len());
        o
    });
    all &= run("A5", "rational inputs", None, || from_checks(&verify::rational_behaviour(SEED, 200)));
    all &= run("A6", "tilings", None, || from_checks(&verify::tilings(SEED, 1000)));
    all &= run("A7", "arc and segment lemmas", None, || from_checks(&verify::arc_lemmas(SEED, 50)));
    all &= run("A8", "natural extension", Some(secs(60)), || {
        let mut checks = verify::pair_maps(SEED, 10_000);
        checks.push(verify::injectivity(SEED, &pop, 500));
        from_checks(&checks)
    });
    all &= run("A9", "square root sweep", Some(secs(60)), || from_checks(&verify::sqrt_sweep(6, 3)));
    all &= run("A10", "negation symmetry", None, || from_checks(&[verify::negation_symmetry(&pop, 50)]));

    println!("{}", if all { "acceptance: all criteria pass" } else { "acceptance: FAILED" });
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
