use std::time::{Duration, Instant};

use schubert_sem::verify::{self, Report, OPERATIONS};

const SEED: u64 = 20_240_611;

struct Criterion {
    id: u8,
    name: &'static str,
    budget: Duration,
    run: fn() -> Vec<Report>,
}

fn minutes(m: u64) -> Duration {
    Duration::from_secs(60 * m)
}

fn criteria() -> Vec<Criterion> {
    vec![
        Criterion {
            id: 1,
            name: "pipe-dream oracle over S_6",
            budget: minutes(2),
            run: || vec![verify::pipe_oracle(6)],
        },
        Criterion {
            id: 2,
            name: "SEM coefficients bounded by 1 over S_6",
            budget: minutes(10),
            run: || vec![verify::sem_bound(6)],
        },
        Criterion {
            id: 3,
            name: "proper representations, all of S_6 and 1000 samples from S_7",
            budget: minutes(15),
            run: || vec![verify::rep_correct(6, 1000, SEED)],
        },
        Criterion {
            id: 4,
            name: "no factorization for pattern-containing words in S_6",
            budget: minutes(10),
            run: || vec![verify::converse(6)],
        },
        Criterion {
            id: 5,
            name: "worked examples",
            budget: Duration::from_secs(1),
            run: || vec![verify::fixtures()],
        },
        Criterion {
            id: 6,
            name: "nonintersecting paths on 200 random representations",
            budget: minutes(1),
            run: || vec![verify::lgv_oracle(200, SEED)],
        },
        Criterion {
            id: 7,
            name: "operation calculus, 100 trials per operation",
            budget: minutes(2),
            run: || OPERATIONS.iter().map(|op| verify::operation_report(op, 100, SEED)).collect(),
        },
        Criterion {
            id: 8,
            name: "quantum elementary and quantum Schubert consistency over S_5",
            budget: minutes(5),
            run: || vec![verify::quantum_consistency(5)],
        },
        Criterion {
            id: 9,
            name: "321-avoiding over S_6 and Schur polynomials in a 3x3 box",
            budget: minutes(2),
            run: || vec![verify::families(6, 3)],
        },
    ]
}

fn main() {
    let mut all_ok = true;
    for c in criteria() {
        let start = Instant::now();
        let reports = (c.run)();
        let elapsed = start.elapsed();
        let passed: usize = reports.iter().map(|r| r.passed).sum();
        let failed: usize = reports.iter().map(|r| r.failed).sum();
        let in_time = elapsed <= c.budget;
        let ok = in_time && reports.iter().all(Report::ok);
        all_ok &= ok;
        println!(
            "criterion {}: {} - {} ({} checked, {} failed, {:.2?} of {:?})",
            c.id,
            if ok { "PASS" } else { "FAIL" },
            c.name,
            passed + failed,
            failed,
            elapsed,
            c.budget,
        );
        if c.id == 7 {
            for (op, r) in OPERATIONS.iter().zip(&reports) {
                println!("    {op}: {} passed, {} failed", r.passed, r.failed);
            }
        }
        for r in reports.iter().filter(|r| !r.ok()) {
            println!("    {r}");
        }
        if !in_time {
            println!("    exceeded the time budget");
        }
    }
    if !all_ok {
        eprintln!("acceptance criteria failed");
        std::process::exit(1);
    }
}
