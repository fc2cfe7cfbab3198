//! Driving the verification harness programmatically: single instances,
//! custom corpora, and the full self-test.
//!
//! ```bash
//! cargo run --release --example verify_suite
//! ```

use harmonic_tutte::verify::{run_corpus, selftest, CorpusSpec, Identity};

fn main() {
    // a focused corpus: one identity, chosen field sizes and bounds
    let spec = CorpusSpec {
        seed: 11,
        instances: 50,
        q_choices: vec![2, 3, 5],
        max_n: 8,
        max_d: 2,
    };
    let outcome = run_corpus(Identity::Greene, &spec).unwrap();
    println!(
        "greene over a custom corpus: {} instances, {} checks, {} failures",
        outcome.instances,
        outcome.checks,
        outcome.failures.len()
    );
    assert!(outcome.passed());

    // the full self-test: every identity over its own seeded corpus;
    // failures carry the complete instance for replay
    let report = selftest(11, 40).unwrap();
    println!("\nselftest with seed {}:", report.seed);
    for outcome in &report.outcomes {
        println!(
            "  {:<16} {} instances, {} checks, {} failures",
            outcome.identity.name(),
            outcome.instances,
            outcome.checks,
            outcome.failures.len()
        );
        for failure in &outcome.failures {
            println!("{failure}");
        }
    }
    println!("overall: {}", if report.passed() { "PASS" } else { "FAIL" });
    assert!(report.passed());
}
