use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read};
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use serde_json::{json, Value};

use schubert_sem::lpr::{enumerate_path_systems_with, proper_rep, LatticeRep, PathBudget, Step};
use schubert_sem::perm::{avoids_thirteen, classify, factorize, first_violation, q_set, THIRTEEN_PATTERNS};
use schubert_sem::poly::{schubert_expand, sem_expand};
use schubert_sem::schubert::{quantum_schubert, schubert};
use schubert_sem::verify::{Check, Config, Report};
use schubert_sem::{Integer, Permutation, Poly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Command {
    /// The Schubert polynomial of --perm.
    Schubert,
    /// SEM expansion of the Schubert polynomial of --perm, or of --poly.
    Sem,
    /// Expansion of --poly in the Schubert basis.
    ExpandSchubert,
    /// A proper lattice path representation of --perm.
    Rep,
    /// The e-matrix and determinant of a representation.
    Det,
    /// Nonintersecting path systems of a representation.
    Paths,
    /// The quantum Schubert polynomial of --perm.
    Quantum,
    /// Pattern classes, Q-set and factorization of --perm.
    Classify,
    /// Run verification sweeps.
    Verify,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
    Svg,
}

/// Schubert polynomials, SEM expansions and lattice path determinants.
#[derive(Debug, Parser)]
#[command(name = "semdet", version)]
struct Cli {
    #[arg(value_enum)]
    command: Command,
    /// Permutation in one-line notation, e.g. "4 1 3 2" or 4132.
    #[arg(long, value_parser = parse_perm)]
    perm: Option<Permutation>,
    /// Polynomial such as "x1^2*x2 - 3*x3".
    #[arg(long, value_parser = parse_poly)]
    poly: Option<Poly>,
    /// Representation as JSON, read from a file or from stdin with "-".
    #[arg(long)]
    input: Option<String>,
    /// Variable bound for sem and expand-schubert; permutation size for verify.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// A single verify check; all of them when omitted.
    #[arg(long, value_parser = parse_check)]
    check: Option<Check>,
    /// Maximum number of path systems to enumerate.
    #[arg(long)]
    budget: Option<usize>,
    /// Seed for randomized verify checks.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random trials per randomized verify check.
    #[arg(long, default_value_t = 100)]
    trials: usize,
    /// Extra sampled permutations from S_{n+1} for rep-correct.
    #[arg(long, default_value_t = 0)]
    samples: usize,
}

fn parse_perm(s: &str) -> Result<Permutation, String> {
    s.parse().map_err(|e: schubert_sem::perm::PermError| e.to_string())
}

fn parse_poly(s: &str) -> Result<Poly, String> {
    s.parse().map_err(|e: schubert_sem::poly::PolyError| e.to_string())
}

fn parse_check(s: &str) -> Result<Check, String> {
    s.parse()
}

enum Failure {
    Usage(String),
    Domain(String),
}

fn domain(e: impl std::fmt::Display) -> Failure {
    Failure::Domain(e.to_string())
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            if !out.ends_with('\n') {
                println!();
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    match cli.command {
        Command::Schubert => emit_poly(&schubert(require_perm(cli)?), cli.format),
        Command::Quantum => {
            let q: Poly = quantum_schubert(require_perm(cli)?).map_err(domain)?;
            emit_poly(&q, cli.format)
        }
        Command::Sem => sem(cli),
        Command::ExpandSchubert => expand(cli),
        Command::Rep => rep(cli),
        Command::Det => det(cli),
        Command::Paths => paths(cli),
        Command::Classify => classify_cmd(cli),
        Command::Verify => verify(cli),
    }
}

fn require_perm(cli: &Cli) -> Result<&Permutation, Failure> {
    cli.perm
        .as_ref()
        .ok_or_else(|| Failure::Usage("--perm is required for this command".into()))
}

fn unsupported(format: Format) -> Failure {
    let name = format.to_possible_value().expect("no skipped variants").get_name().to_string();
    Failure::Usage(format!("--format {name} is not available for this command"))
}

fn pretty(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("serializable output")
}

fn emit_poly(p: &Poly, format: Format) -> Outcome {
    match format {
        Format::Text => Ok(p.to_string()),
        Format::Json => Ok(pretty(p)),
        Format::Latex => Ok(p.to_latex()),
        Format::Svg => Err(unsupported(format)),
    }
}

/// Smallest `m` with every monomial inside the staircase `a_i ≤ m + 1 - i`.
fn staircase_bound(p: &Poly) -> usize {
    p.terms()
        .flat_map(|(m, _)| {
            m.x_exps()
                .iter()
                .enumerate()
                .filter(|(_, &a)| a > 0)
                .map(|(i, &a)| a as usize + i)
                .collect::<Vec<_>>()
        })
        .max()
        .unwrap_or(1)
        .max(1)
}

fn poly_input(cli: &Cli) -> Result<(Poly, usize), Failure> {
    match (&cli.poly, &cli.perm) {
        (Some(p), _) => Ok((p.clone(), staircase_bound(p))),
        (None, Some(w)) => Ok((schubert(w), w.len().saturating_sub(1).max(1))),
        (None, None) => Err(Failure::Usage("--perm or --poly is required for this command".into())),
    }
}

fn sem(cli: &Cli) -> Outcome {
    let (f, bound) = poly_input(cli)?;
    let sem = sem_expand(&f, cli.n.unwrap_or(bound)).map_err(domain)?;
    match cli.format {
        Format::Text => Ok(sem.to_string()),
        Format::Json => Ok(pretty(&sem)),
        Format::Latex => Ok(sem.to_latex()),
        Format::Svg => Err(unsupported(cli.format)),
    }
}

fn expand(cli: &Cli) -> Outcome {
    let (f, bound) = poly_input(cli)?;
    let n = cli.n.unwrap_or(bound + 1);
    let terms: BTreeMap<Permutation, Integer> = schubert_expand(&f, n).map_err(domain)?;
    let body = |w: &Permutation, latex: bool| {
        if latex {
            format!("\\mathfrak{{S}}_{{{w}}}")
        } else {
            format!("S_{w}")
        }
    };
    let signed = |latex: bool| {
        if terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (w, c)) in terms.iter().rev().enumerate() {
            let neg = *c < Integer::from(0);
            match (i, neg) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            let abs = if neg { -c.clone() } else { c.clone() };
            if abs != Integer::from(1) {
                let _ = write!(s, "{abs}{}", if latex { "" } else { "*" });
            }
            s.push_str(&body(w, latex));
        }
        s
    };
    match cli.format {
        Format::Text => Ok(signed(false)),
        Format::Latex => Ok(signed(true)),
        Format::Json => {
            let list: Vec<Value> = terms
                .iter()
                .rev()
                .map(|(w, c)| json!({ "perm": w, "coeff": c.to_string() }))
                .collect();
            Ok(pretty(&list))
        }
        Format::Svg => Err(unsupported(cli.format)),
    }
}

fn rep_input(cli: &Cli) -> Result<LatticeRep, Failure> {
    if let Some(path) = &cli.input {
        let text = if path == "-" {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).map_err(domain)?;
            s
        } else {
            fs::read_to_string(path).map_err(|e| Failure::Usage(format!("--input {path}: {e}")))?
        };
        return serde_json::from_str(&text).map_err(|e| Failure::Domain(format!("invalid representation: {e}")));
    }
    let w = cli
        .perm
        .as_ref()
        .ok_or_else(|| Failure::Usage("--perm or --input is required for this command".into()))?;
    proper_rep(w).map_err(domain)
}

fn rep(cli: &Cli) -> Outcome {
    let r = proper_rep(require_perm(cli)?).map_err(domain)?;
    match cli.format {
        Format::Text => Ok(r.to_string()),
        Format::Json => Ok(pretty(&r)),
        Format::Latex => Ok(r.matrix_latex()),
        Format::Svg => Ok(r.to_svg()),
    }
}

fn entry(a: i64, b: i64, c: u32) -> String {
    let d = c as i64 + b - a;
    if (0..=c as i64).contains(&d) {
        format!("e_{d}^({c})")
    } else {
        "0".to_string()
    }
}

fn matrix_text(r: &LatticeRep) -> Vec<Vec<String>> {
    r.starts()
        .iter()
        .map(|&a| r.ends().iter().map(|&(b, c)| entry(a, b, c)).collect())
        .collect()
}

fn det(cli: &Cli) -> Outcome {
    let r = rep_input(cli)?;
    let d: Poly = r.determinant();
    match cli.format {
        Format::Text => {
            let rows = matrix_text(&r);
            let width = rows.iter().flatten().map(String::len).max().unwrap_or(0);
            let mut s = String::new();
            let _ = writeln!(s, "sign {}", if r.sign() > 0 { "+1" } else { "-1" });
            for row in rows {
                let cells: Vec<String> = row.iter().map(|c| format!("{c:<width$}")).collect();
                let _ = writeln!(s, "| {} |", cells.join("  "));
            }
            let _ = write!(s, "det = {d}");
            Ok(s)
        }
        Format::Json => Ok(pretty(&json!({
            "rep": r,
            "matrix": matrix_text(&r),
            "determinant": d,
        }))),
        Format::Latex => Ok(format!("{} = {}", r.matrix_latex(), d.to_latex())),
        Format::Svg => Ok(r.to_svg()),
    }
}

fn step_word(steps: &[Step]) -> String {
    steps.iter().map(|s| if *s == Step::Up { 'U' } else { 'D' }).collect()
}

fn paths(cli: &Cli) -> Outcome {
    let r = rep_input(cli)?;
    let mut budget = PathBudget::default();
    if let Some(b) = cli.budget {
        budget.max_systems = b;
    }
    let systems = enumerate_path_systems_with(&r, budget).map_err(domain)?;
    match cli.format {
        Format::Text => {
            let mut s = format!("{} nonintersecting path systems\n", systems.len());
            for p in &systems {
                let words: Vec<String> = p.steps.iter().map(|w| step_word(w)).collect();
                let _ = writeln!(
                    s,
                    "sigma {}  sign {:+}  weight {}  paths {}",
                    p.sigma,
                    p.sign(),
                    Poly::monomial(p.weight(&r)),
                    words.join(" ")
                );
            }
            Ok(s)
        }
        Format::Json => {
            let list: Vec<Value> = systems
                .iter()
                .map(|p| {
                    json!({
                        "sigma": p.sigma,
                        "sign": p.sign(),
                        "weight": Poly::monomial(p.weight(&r)),
                        "steps": p.steps,
                    })
                })
                .collect();
            Ok(pretty(&json!({ "count": systems.len(), "systems": list })))
        }
        Format::Svg => Ok(r.to_svg()),
        Format::Latex => Err(unsupported(cli.format)),
    }
}

fn classify_cmd(cli: &Cli) -> Outcome {
    let w = require_perm(cli)?;
    let labels: Vec<&str> = classify(w).into_iter().map(|l| l.name()).collect();
    let fact = if avoids_thirteen(w) { Some(factorize(w).map_err(domain)?) } else { None };
    let q = q_set(w).ok();
    let violation = if fact.is_none() {
        let pats: Vec<Permutation> = THIRTEEN_PATTERNS.iter().map(|p| p.parse().expect("valid pattern")).collect();
        first_violation(w, &pats)
    } else {
        None
    };
    match cli.format {
        Format::Text => {
            let mut s = format!("labels: {}\n", labels.join(", "));
            match (&q, &fact) {
                (Some(q), Some(f)) => {
                    let q: Vec<String> = q.iter().map(|v| v.to_string()).collect();
                    let _ = writeln!(s, "Q = {{{}}}", q.join(","));
                    let _ = writeln!(s, "u = {}", f.u);
                    let _ = write!(s, "v = {}", f.v.base());
                }
                _ => {
                    if let Some(occ) = &violation {
                        let _ = write!(s, "contains {} at positions {:?}", occ.pattern, occ.positions);
                    }
                }
            }
            Ok(s)
        }
        Format::Json => Ok(pretty(&json!({
            "perm": w,
            "labels": labels,
            "q": q,
            "factorization": fact.as_ref().map(|f| json!({ "u": f.u, "v": f.v.base() })),
            "violation": violation.map(|o| json!({ "pattern": o.pattern, "positions": o.positions })),
        }))),
        Format::Latex | Format::Svg => Err(unsupported(cli.format)),
    }
}

fn verify(cli: &Cli) -> Outcome {
    let cfg = Config {
        n: cli.n.unwrap_or(6),
        trials: cli.trials,
        samples: cli.samples,
        seed: cli.seed,
        ..Config::default()
    };
    let checks: Vec<Check> = match cli.check {
        Some(c) => vec![c],
        None => Check::ALL.to_vec(),
    };
    let reports: Vec<Report> = checks.iter().map(|c| c.run(&cfg)).collect();
    let out = match cli.format {
        Format::Text => reports.iter().map(|r| r.to_string()).collect::<Vec<_>>().join("\n"),
        Format::Json => pretty(
            &reports
                .iter()
                .map(|r| {
                    json!({
                        "check": r.check.name(),
                        "pass": r.ok(),
                        "passed": r.passed,
                        "failed": r.failed,
                        "failures": r.failures,
                    })
                })
                .collect::<Vec<_>>(),
        ),
        Format::Latex | Format::Svg => return Err(unsupported(cli.format)),
    };
    if reports.iter().all(Report::ok) {
        Ok(out)
    } else {
        Err(Failure::Domain(out))
    }
}
