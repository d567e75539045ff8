//! Exhaustive and seeded randomized checks shared by the command line
//! `verify` command and the acceptance suite.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::lpr::{
    self, compact_rep, enumerate_path_systems, proper_rep, rep_321, rep_413625,
    rep_determinant_quantum, rep_grassmannian, sem_of_proper, signed_path_sum, LatticeRep,
};
use crate::oracle::{leibniz_determinant, quantum_elementary_by_determinant, schur_by_tableaux};
use crate::perm::{avoids_all, avoids_thirteen, factorize, patterns, q_set, LoweringPermutation};
use crate::poly::schur::partitions_in_box;
use crate::poly::{divided_difference, divided_difference_word, sem_expand};
use crate::schubert::{
    quantum_elementary, quantum_schubert, schubert, schubert_table, schubert_via_pipedreams,
};
use crate::{Integer, Permutation, Poly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    PipeOracle,
    SemBound,
    RepCorrect,
    Converse,
    Fixtures,
    LgvOracle,
    Operations,
    QuantumConsistency,
    Families,
}

impl Check {
    pub const ALL: [Check; 9] = [
        Check::PipeOracle,
        Check::SemBound,
        Check::RepCorrect,
        Check::Converse,
        Check::Fixtures,
        Check::LgvOracle,
        Check::Operations,
        Check::QuantumConsistency,
        Check::Families,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::PipeOracle => "pipe-oracle",
            Check::SemBound => "sem-bound",
            Check::RepCorrect => "rep-correct",
            Check::Converse => "converse",
            Check::Fixtures => "fixtures",
            Check::LgvOracle => "lgv-oracle",
            Check::Operations => "operations",
            Check::QuantumConsistency => "quantum-consistency",
            Check::Families => "families",
        }
    }

    pub fn run(self, cfg: &Config) -> Report {
        match self {
            Check::PipeOracle => pipe_oracle(cfg.n),
            Check::SemBound => sem_bound(cfg.n),
            Check::RepCorrect => rep_correct(cfg.n, cfg.samples, cfg.seed),
            Check::Converse => converse(cfg.n),
            Check::Fixtures => fixtures(),
            Check::LgvOracle => lgv_oracle(cfg.trials, cfg.seed),
            Check::Operations => operations(cfg.trials, cfg.seed),
            Check::QuantumConsistency => quantum_consistency(cfg.n),
            Check::Families => families(cfg.n, cfg.box_size),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Check::ALL.iter().map(|c| c.name()).collect();
                format!("unknown check `{s}`, expected one of {}", names.join(", "))
            })
    }
}

/// Parameters shared by the checks; each check reads the fields it needs.
#[derive(Debug, Clone)]
pub struct Config {
    /// Permutations are drawn from `S_n`.
    pub n: usize,
    /// Randomized trials per property.
    pub trials: usize,
    /// Extra sampled permutations from `S_{n+1}` for `rep-correct`.
    pub samples: usize,
    pub seed: u64,
    /// Partitions come from a `box_size × box_size` box, in at most
    /// `box_size` variables.
    pub box_size: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config { n: 5, trials: 100, samples: 0, seed: 0, box_size: 3 }
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub check: Check,
    pub passed: usize,
    pub failed: usize,
    /// The first few failure descriptions.
    pub failures: Vec<String>,
}

const KEEP_FAILURES: usize = 10;

impl Report {
    fn from_results(check: Check, results: Vec<Result<(), String>>) -> Report {
        let mut report = Report { check, passed: 0, failed: 0, failures: Vec::new() };
        for r in results {
            match r {
                Ok(()) => report.passed += 1,
                Err(msg) => {
                    report.failed += 1;
                    if report.failures.len() < KEEP_FAILURES {
                        report.failures.push(msg);
                    }
                }
            }
        }
        report
    }

    fn merge(mut self, other: Report) -> Report {
        self.passed += other.passed;
        self.failed += other.failed;
        let room = KEEP_FAILURES.saturating_sub(self.failures.len());
        self.failures.extend(other.failures.into_iter().take(room));
        self
    }

    pub fn ok(&self) -> bool {
        self.failed == 0 && self.passed > 0
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.ok() { "PASS" } else { "FAIL" };
        write!(f, "{status} {}: {} passed, {} failed", self.check, self.passed, self.failed)?;
        for msg in &self.failures {
            write!(f, "\n  {msg}")?;
        }
        Ok(())
    }
}

fn expect_eq<T: PartialEq + fmt::Display>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got}, expected {want}"))
    }
}

/// `schubert(w)` against the pipe-dream sum for every `w ∈ S_n`.
pub fn pipe_oracle(n: usize) -> Report {
    let table: Vec<(Permutation, Poly)> = schubert_table(n).into_iter().collect();
    let results = table
        .par_iter()
        .map(|(w, s)| match schubert_via_pipedreams::<Integer>(w) {
            Ok(pd) => expect_eq(&format!("pipe dreams for {w}"), pd, s.clone()),
            Err(e) => Err(format!("{w}: {e}")),
        })
        .collect();
    Report::from_results(Check::PipeOracle, results)
}

/// `|α| ≤ 1` for every SEM coefficient of every `𝔖_w`, `w ∈ S_n`.
pub fn sem_bound(n: usize) -> Report {
    let table: Vec<(Permutation, Poly)> = schubert_table(n).into_iter().collect();
    let m = n.saturating_sub(1).max(1);
    let results = table
        .par_iter()
        .map(|(w, s)| {
            let sem = sem_expand(s, m).map_err(|e| format!("{w}: {e}"))?;
            let max = sem.max_abs();
            if max <= Integer::from(1) {
                Ok(())
            } else {
                Err(format!("{w}: coefficient of size {max}"))
            }
        })
        .collect();
    Report::from_results(Check::SemBound, results)
}

fn check_proper(w: &Permutation) -> Result<(), String> {
    let rep = proper_rep(w).map_err(|e| format!("{w}: {e}"))?;
    if !rep.is_proper() {
        return Err(format!("{w}: representation has repeated heights"));
    }
    let s: Poly = schubert(w);
    expect_eq(&format!("determinant for {w}"), rep.determinant(), s.clone())?;
    let m = w.len().saturating_sub(1).max(1);
    let expected = sem_expand(&s, m).map_err(|e| format!("{w}: {e}"))?;
    let got = sem_of_proper::<Integer>(&rep).map_err(|e| format!("{w}: {e}"))?;
    expect_eq(&format!("SEM expansion for {w}"), got, expected)
}

/// For every 13-avoiding `w ∈ S_n`, plus `samples` uniformly drawn
/// 13-avoiding `w ∈ S_{n+1}`: the proper representation is proper, its
/// determinant is `𝔖_w` and its Leibniz terms give the SEM expansion.
pub fn rep_correct(n: usize, samples: usize, seed: u64) -> Report {
    let mut perms: Vec<Permutation> = Permutation::all(n).filter(avoids_thirteen).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    perms.extend((0..samples).map(|_| random_thirteen_avoiding(&mut rng, n + 1)));
    let results = perms.par_iter().map(check_proper).collect();
    Report::from_results(Check::RepCorrect, results)
}

/// Some `w = u v` with `v` lowering, `u` avoiding 1324, 2413 and 3142, and
/// `ℓ(w) = ℓ(u) - ℓ(v)`, found by trying every `v`.
pub fn find_factorization(w: &Permutation) -> Option<(Permutation, LoweringPermutation)> {
    let bad = patterns(&["1324", "2413", "3142"]);
    LoweringPermutation::all(w.len()).into_iter().find_map(|v| {
        let u = w.compose(&v.base().inverse());
        (w.length() + v.base().length() == u.length() && avoids_all(&u, &bad)).then_some((u, v))
    })
}

/// No `w ∈ S_n` containing one of the thirteen patterns factors as above.
pub fn converse(n: usize) -> Report {
    let perms: Vec<Permutation> = Permutation::all(n).filter(|w| !avoids_thirteen(w)).collect();
    let results = perms
        .par_iter()
        .map(|w| match find_factorization(w) {
            None => Ok(()),
            Some((u, v)) => Err(format!("{w} = {u} · {}", v.base())),
        })
        .collect();
    Report::from_results(Check::Converse, results)
}

fn perm(s: &str) -> Permutation {
    s.parse().expect("fixture permutation")
}

fn rep_4132() -> LatticeRep {
    LatticeRep::new(vec![0, 1, 2], vec![(0, 1), (0, 2), (1, 3)], 1).expect("fixture")
}

fn fixture_4132() -> Result<(), String> {
    let w = perm("4132");
    let s: Poly = schubert(&w);
    expect_eq("polynomial", s.to_string().as_str(), "x1^3*x2 + x1^3*x3")?;
    let sem = sem_expand(&s, 3).map_err(|e| e.to_string())?;
    expect_eq("SEM expansion", sem.to_string().as_str(), "e112 - e103 - e022")?;
    let rep = rep_4132();
    expect_eq("representation determinant", rep.determinant(), s.clone())?;
    expect_eq("proper representation", proper_rep(&w).map_err(|e| e.to_string())?.determinant(), s)?;
    expect_eq(
        "SEM from representation",
        sem_of_proper::<Integer>(&rep).map_err(|e| e.to_string())?,
        sem,
    )?;
    let systems = enumerate_path_systems(&rep).map_err(|e| e.to_string())?;
    let weights: BTreeSet<String> = systems.iter().map(|p| Poly::monomial(p.weight(&rep)).to_string()).collect();
    let identity = systems.iter().all(|p| p.sigma.is_identity());
    expect_eq("path systems", systems.len(), 2)?;
    expect_eq("path permutations are the identity", identity, true)?;
    expect_eq(
        "path weights",
        weights.into_iter().collect::<Vec<_>>().join(", ").as_str(),
        "x1^3*x2, x1^3*x3",
    )?;
    expect_eq(
        "matrix",
        rep.matrix_latex().as_str(),
        "\\left|\\begin{matrix}\n\te_1^{(1)}&e_2^{(2)}&0\\\\\n\te_0^{(1)}&e_1^{(2)}&e_3^{(3)}\\\\\n\t0&e_0^{(2)}&e_2^{(3)}\n\\end{matrix}\\right|",
    )
}

fn ends_of(w: &str) -> Result<Vec<(i64, u32)>, String> {
    compact_rep(&perm(w)).map(|r| r.ends().to_vec()).map_err(|e| e.to_string())
}

fn fixture_87321564() -> Result<(), String> {
    let fmt = |v: Vec<(i64, u32)>| format!("{v:?}");
    expect_eq("B_v", fmt(ends_of("321564")?), fmt(vec![(2, 0), (1, 1), (0, 2), (0, 3), (0, 4), (2, 5)]))?;
    expect_eq(
        "B_w",
        fmt(ends_of("87321564")?),
        fmt(vec![(7, 0), (6, 1), (2, 2), (1, 3), (0, 4), (0, 5), (0, 6), (2, 7)]),
    )?;
    let w = perm("87321564");
    expect_eq("determinant", compact_rep(&w).map_err(|e| e.to_string())?.determinant::<Integer>(), schubert(&w))
}

fn fixture_lowering() -> Result<(), String> {
    let w = perm("32157684");
    let rep = proper_rep(&w).map_err(|e| e.to_string())?;
    expect_eq("starts", format!("{:?}", rep.starts()), "[0, 1, 3, 4, 5]".to_string())?;
    expect_eq("ends", format!("{:?}", rep.ends()), "[(1, 1), (0, 2), (0, 3), (0, 5), (2, 7)]".to_string())?;
    expect_eq("determinant", rep.determinant::<Integer>(), schubert(&w))
}

fn fixture_q_set() -> Result<(), String> {
    let w = perm("32157684");
    let q = q_set(&w).map_err(|e| e.to_string())?;
    expect_eq("Q", format!("{q:?}"), "{3, 7, 8}".to_string())?;
    let f = factorize(&w).map_err(|e| e.to_string())?;
    expect_eq("u", f.u, perm("87321564"))?;
    expect_eq("v", f.v.base().clone(), perm("34562718"))
}

fn fixture_413625() -> Result<(), String> {
    let rep = rep_413625();
    let tex = "\\left|\\begin{matrix}\n\
        \te_1^{(1)}&e_2^{(2)}&0&0\\\\\n\
        \te_0^{(1)}&e_1^{(2)}&e_4^{(4)}&e_5^{(5)}\\\\\n\
        \t0&e_0^{(2)}&e_3^{(4)}&e_4^{(5)}\\\\\n\
        \t0&0&e_0^{(4)}&e_1^{(5)}\n\
        \\end{matrix}\\right|";
    expect_eq("matrix", rep.matrix_latex().as_str(), tex)?;
    expect_eq("determinant", rep.determinant::<Integer>(), schubert(&perm("413625")))?;
    for (c, target) in [(4, "413265"), (1, "143625")] {
        let r = lpr::divided_difference(&rep, c).map_err(|e| e.to_string())?.ok_or("zero")?;
        expect_eq(target, r.determinant::<Integer>(), schubert(&perm(target)))?;
        if c == 4 {
            let r = lpr::divided_difference(&r, 1).map_err(|e| e.to_string())?.ok_or("zero")?;
            expect_eq("143265", r.determinant::<Integer>(), schubert(&perm("143265")))?;
        }
    }
    Ok(())
}

/// The worked examples: `4132`, the `87321564` assembly, the lowering of
/// `32157684`, its `Q`-set and the representation of `𝔖_{413625}`.
pub fn fixtures() -> Report {
    type Fixture = fn() -> Result<(), String>;
    let cases: [(&str, Fixture); 5] = [
        ("4132", fixture_4132),
        ("87321564", fixture_87321564),
        ("lowering 32157684", fixture_lowering),
        ("Q-set 32157684", fixture_q_set),
        ("413625", fixture_413625),
    ];
    let results = cases
        .iter()
        .map(|(name, f)| f().map_err(|e| format!("{name}: {e}")))
        .collect();
    Report::from_results(Check::Fixtures, results)
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Permutation {
    let mut word: Vec<usize> = (1..=n).collect();
    word.shuffle(rng);
    Permutation::new(word).expect("shuffled identity")
}

/// Uniform among the 13-avoiding permutations of `S_n`, by rejection.
pub fn random_thirteen_avoiding(rng: &mut impl Rng, n: usize) -> Permutation {
    loop {
        let w = random_permutation(rng, n);
        if avoids_thirteen(&w) {
            return w;
        }
    }
}

/// Distinct starts in `0..width`, distinct ends in `[0, width) × [0, max_height]`
/// and a random sign, with `1 ≤ k ≤ max_k` points.
pub fn random_rep(rng: &mut impl Rng, max_k: usize, max_height: u32, width: i64) -> LatticeRep {
    let k = rng.gen_range(1..=max_k);
    random_rep_with(rng, k, max_height, width, &[], &[], |_| true)
}

/// Completes the given starts and ends to `k` points each with random
/// distinct points, drawing ends only where `allow` holds.
fn random_rep_with(
    rng: &mut impl Rng,
    k: usize,
    max_height: u32,
    width: i64,
    starts: &[i64],
    ends: &[(i64, u32)],
    allow: impl Fn((i64, u32)) -> bool,
) -> LatticeRep {
    let free_starts: Vec<i64> = (0..width).filter(|a| !starts.contains(a)).collect();
    let free_ends: Vec<(i64, u32)> = (0..width)
        .flat_map(|b| (0..=max_height).map(move |c| (b, c)))
        .filter(|e| !ends.contains(e) && allow(*e))
        .collect();
    let mut s = starts.to_vec();
    s.extend(index::sample(rng, free_starts.len(), k - starts.len()).iter().map(|i| free_starts[i]));
    let mut e = ends.to_vec();
    e.extend(index::sample(rng, free_ends.len(), k - ends.len()).iter().map(|i| free_ends[i]));
    s.shuffle(rng);
    e.shuffle(rng);
    let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
    LatticeRep::new(s, e, sign).expect("sizes agree")
}

/// Random representations with at most 3 points and heights at most 4:
/// the signed sum over nonintersecting path systems equals the Leibniz
/// determinant of the e-matrix.
pub fn lgv_oracle(trials: usize, seed: u64) -> Report {
    let results = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(t as u64));
            let rep = random_rep(&mut rng, 3, 4, 6);
            let systems = enumerate_path_systems(&rep).map_err(|e| e.to_string())?;
            let sum: Poly = signed_path_sum(&rep, &systems);
            expect_eq(&format!("path sum for {}", rep_line(&rep)), sum, leibniz_determinant(&rep.matrix()))
        })
        .collect();
    Report::from_results(Check::LgvOracle, results)
}

fn rep_line(rep: &LatticeRep) -> String {
    format!("A={:?} B={:?} sign={}", rep.starts(), rep.ends(), rep.sign())
}

/// The operations exercised by [`operations`].
pub const OPERATIONS: [&str; 7] = ["pull", "drop", "slide-a", "slide-b", "product", "delete", "lower"];

fn operation_trial(op: &str, rng: &mut ChaCha8Rng) -> Result<(), String> {
    const H: u32 = 4;
    const W: i64 = 6;
    let err = |rep: &LatticeRep, e: lpr::LprError| format!("{op} on {}: {e}", rep_line(rep));
    match op {
        "pull" => {
            let (b, c) = (rng.gen_range(0..W - 1), rng.gen_range(0..H));
            let k = rng.gen_range(2..=4);
            let rep = random_rep_with(rng, k, H, W, &[], &[(b, c), (b + 1, c)], |_| true);
            let out = lpr::pull(&rep, b, c).map_err(|e| err(&rep, e))?;
            expect_eq(&format!("pull({b},{c}) on {}", rep_line(&rep)), out.determinant::<Integer>(), rep.determinant())
        }
        "drop" => {
            let c = rng.gen_range(1..=H);
            let k = rng.gen_range(1..=4);
            if rng.gen_bool(0.2) {
                let rep = random_rep_with(rng, k, H, W, &[], &[], |e| e.1 != c);
                expect_eq("drop predicate", lpr::drop_is_zero(&rep, c), true)?;
                let d = divided_difference(&rep.determinant::<Integer>(), c as usize);
                return expect_eq(&format!("∂_{c} with no end at height {c}"), d, Poly::zero());
            }
            let b = rng.gen_range(0..W);
            let rep = random_rep_with(rng, k, H, W, &[], &[(b, c)], |e| e.1 != c);
            let out = lpr::drop(&rep, c).map_err(|e| err(&rep, e))?;
            let want = divided_difference(&rep.determinant::<Integer>(), c as usize);
            expect_eq(&format!("drop({c}) on {}", rep_line(&rep)), out.determinant(), want)
        }
        "slide-a" | "slide-b" => {
            let c = rng.gen_range(1..=H);
            let (b, partner) = if op == "slide-a" {
                let b = rng.gen_range(0..W - 1);
                (b, (b + 1, c - 1))
            } else {
                let b = rng.gen_range(1..W);
                (b, (b - 1, c - 1))
            };
            let k = rng.gen_range(2..=4);
            let rep = random_rep_with(rng, k, H, W, &[], &[(b, c), partner], |e| e.1 != c);
            let out = if op == "slide-a" {
                lpr::slide_left_below(&rep, c)
            } else {
                lpr::slide_left_at(&rep, c)
            }
            .map_err(|e| err(&rep, e))?;
            let want = divided_difference(&rep.determinant::<Integer>(), c as usize);
            if op == "slide-a" {
                expect_eq("slide-a flips the sign", out.sign(), -rep.sign())?;
            }
            expect_eq(&format!("{op}({c}) on {}", rep_line(&rep)), out.determinant(), want)
        }
        "product" => {
            let f = random_rep(rng, 3, H, W);
            let g = random_rep(rng, 3, H, W);
            let max_a = f.starts().iter().max().copied().unwrap_or(0);
            let min_b = g.ends().iter().map(|e| e.0).min().unwrap_or(0);
            let g = lpr::translate(&g, max_a + 1 - min_b + rng.gen_range(0..3));
            let fg = lpr::product(&f, &g).map_err(|e| err(&f, e))?;
            let want = &f.determinant::<Integer>() * &g.determinant::<Integer>();
            expect_eq(&format!("product of {} and {}", rep_line(&f), rep_line(&g)), fg.determinant(), want)
        }
        "delete" => {
            let s = rng.gen_range(0..=2u32);
            let a = rng.gen_range(0..W - s as i64);
            let starts: Vec<i64> = (0..=s as i64).map(|t| a + t).collect();
            let ends: Vec<(i64, u32)> = (0..=s).map(|t| (a, t)).collect();
            let k = rng.gen_range(starts.len()..=starts.len() + 2);
            let rep = random_rep_with(rng, k, H, W + 2, &starts, &ends, |_| true);
            let out = lpr::delete_staircase(&rep, a, s).map_err(|e| err(&rep, e))?;
            expect_eq(
                &format!("delete({a},{s}) on {}", rep_line(&rep)),
                out.determinant::<Integer>(),
                rep.determinant(),
            )
        }
        "lower" => {
            let bad = patterns(&["1324", "2413", "3142"]);
            loop {
                let n = rng.gen_range(2..=6);
                let u = random_permutation(rng, n);
                if !avoids_all(&u, &bad) {
                    continue;
                }
                let v = LoweringPermutation::all(n).choose(rng).expect("nonempty").clone();
                let rep = compact_rep(&u).map_err(|e| e.to_string())?;
                let Ok(out) = lpr::lower(&rep, &v) else { continue };
                let want = divided_difference_word(&rep.determinant::<Integer>(), &v.base().inverse());
                return expect_eq(&format!("lower {u} by {}", v.base()), out.determinant(), want);
            }
        }
        _ => unreachable!("unknown operation {op}"),
    }
}

/// `trials` seeded random instances of each operation in [`OPERATIONS`],
/// comparing determinants before and after.
pub fn operation_report(op: &str, trials: usize, seed: u64) -> Report {
    let salt = OPERATIONS.iter().position(|o| *o == op).expect("known operation") as u64;
    let results = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (salt << 32) ^ t as u64);
            operation_trial(op, &mut rng)
        })
        .collect();
    Report::from_results(Check::Operations, results)
}

pub fn operations(trials: usize, seed: u64) -> Report {
    OPERATIONS
        .iter()
        .map(|op| operation_report(op, trials, seed))
        .reduce(Report::merge)
        .expect("nonempty")
}

/// `E^{(k)}_j` by recurrence and by determinant for `k ≤ n + 1`;
/// `𝔖^q_w` at `q = 0` and the quantum determinant of each proper
/// representation against `𝔖^q_w` over `S_n`.
pub fn quantum_consistency(n: usize) -> Report {
    let mut results: Vec<Result<(), String>> = (1..=n + 1)
        .flat_map(|k| (0..=k as i64 + 1).map(move |j| (j, k)))
        .map(|(j, k)| {
            expect_eq(
                &format!("E_{j}^({k})"),
                quantum_elementary::<Integer>(j, k),
                quantum_elementary_by_determinant(j, k),
            )
        })
        .collect();
    let perms: Vec<Permutation> = Permutation::all(n).collect();
    results.par_extend(perms.par_iter().map(|w| {
        let q: Poly = quantum_schubert(w).map_err(|e| format!("{w}: {e}"))?;
        expect_eq(&format!("q = 0 for {w}"), q.at_q_zero(), schubert(w))?;
        if avoids_thirteen(w) {
            let rep = proper_rep(w).map_err(|e| format!("{w}: {e}"))?;
            let d: Poly = rep_determinant_quantum(&rep).map_err(|e| format!("{w}: {e}"))?;
            expect_eq(&format!("quantum determinant for {w}"), d, q)?;
        }
        Ok(())
    }));
    Report::from_results(Check::QuantumConsistency, results)
}

/// Every 321-avoiding `w ∈ S_n`, and every partition in a
/// `box_size × box_size` box in `1..=box_size` variables against the
/// tableau sum.
pub fn families(n: usize, box_size: usize) -> Report {
    let perms: Vec<Permutation> = Permutation::all(n).collect();
    let mut results: Vec<Result<(), String>> = perms
        .par_iter()
        .filter_map(|w| {
            let rep = rep_321(w).ok()?;
            Some(expect_eq(&format!("321-avoiding {w}"), rep.determinant(), schubert::<Integer>(w)))
        })
        .collect();
    for lambda in partitions_in_box(box_size, box_size) {
        for vars in 1..=box_size {
            let rep = rep_grassmannian(&lambda, vars);
            let got: Poly = rep.determinant();
            results.push(expect_eq(&format!("s_{lambda:?} in {vars} variables"), got, schur_by_tableaux(&lambda, vars)));
        }
    }
    Report::from_results(Check::Families, results)
}
