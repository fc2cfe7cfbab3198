//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line. Every comparison is exact rational or exact polynomial equality.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the
//! per-criterion lines and timings.

mod common;

use std::time::Instant;

use harmonic_tutte::code::LinearCode;
use harmonic_tutte::harmonic::{harmonic_basis, HarmonicFunction, SetFunction};
use harmonic_tutte::linalg::{FieldMatrix, PrimeField};
use harmonic_tutte::matroid::VectorMatroid;
use harmonic_tutte::poly::BivariatePoly;
use harmonic_tutte::scalar::{binomial, rat};
use harmonic_tutte::subset::Subset;
use harmonic_tutte::verify::{
    design_check, greene_rhs, run_corpus, CorpusSpec, Identity,
};
use harmonic_tutte::EnumCaps;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn report(criterion: &str, started: Instant, ok: bool, detail: &str) {
    println!(
        "acceptance {criterion}: {} ({:.2}s){}",
        if ok { "PASS" } else { "FAIL" },
        started.elapsed().as_secs_f64(),
        if detail.is_empty() || ok {
            String::new()
        } else {
            format!(" - {detail}")
        }
    );
    assert!(ok, "{criterion} failed: {detail}");
}

fn caps() -> EnumCaps {
    EnumCaps::default()
}

fn matrix(q: u64, rows: &[&[u64]], cols: usize) -> FieldMatrix {
    let rows: Vec<Vec<u64>> = rows.iter().map(|r| r.to_vec()).collect();
    FieldMatrix::from_rows(PrimeField::new(q).unwrap(), &rows, cols).unwrap()
}

fn hamming_7_4() -> FieldMatrix {
    matrix(
        2,
        &[
            &[1, 0, 0, 0, 0, 1, 1],
            &[0, 1, 0, 0, 1, 0, 1],
            &[0, 0, 1, 0, 1, 1, 0],
            &[0, 0, 0, 1, 1, 1, 1],
        ],
        7,
    )
}

fn extended_hamming_8_4() -> FieldMatrix {
    matrix(
        2,
        &[
            &[1, 0, 0, 0, 0, 1, 1, 1],
            &[0, 1, 0, 0, 1, 0, 1, 1],
            &[0, 0, 1, 0, 1, 1, 0, 1],
            &[0, 0, 0, 1, 1, 1, 1, 0],
        ],
        8,
    )
}

fn micro_function() -> HarmonicFunction {
    let mut f = SetFunction::new(3, 1).unwrap();
    f.set(Subset::new(vec![1], 3).unwrap(), rat(1));
    f.set(Subset::new(vec![3], 3).unwrap(), rat(-1));
    HarmonicFunction::new(f).unwrap()
}

fn corpus_failures(identity: Identity, spec: &CorpusSpec) -> (usize, String) {
    let outcome = run_corpus(identity, spec).expect("corpus must run");
    let detail = outcome
        .failures
        .first()
        .map(|f| f.to_string())
        .unwrap_or_default();
    assert!(outcome.checks > 0, "corpus generated no checks");
    (outcome.failures.len(), detail)
}

#[test]
fn criterion_01_duality() {
    let started = Instant::now();
    let spec = CorpusSpec {
        seed: 1001,
        instances: 200,
        q_choices: vec![2, 3],
        max_n: 10,
        max_d: 3,
    };
    let (failures, detail) = corpus_failures(Identity::Duality, &spec);
    report("1 duality", started, failures == 0, &detail);
}

#[test]
fn criterion_02_generalized_greene() {
    let started = Instant::now();
    let binary = CorpusSpec {
        seed: 1002,
        instances: 200,
        q_choices: vec![2],
        max_n: 10,
        max_d: 3,
    };
    let (failures_binary, detail_binary) = corpus_failures(Identity::Greene, &binary);
    let nonbinary = CorpusSpec {
        seed: 1102,
        instances: 100,
        q_choices: vec![3, 5],
        max_n: 8,
        max_d: 3,
    };
    let (failures_nonbinary, detail_nonbinary) = corpus_failures(Identity::Greene, &nonbinary);
    let ok = failures_binary == 0 && failures_nonbinary == 0;
    let detail = format!("{detail_binary}{detail_nonbinary}");
    report("2 generalized greene", started, ok, &detail);
}

#[test]
fn criterion_03_classical_greene_fixture() {
    let started = Instant::now();
    let code = LinearCode::from_matrix(hamming_7_4());
    let mut expect = BivariatePoly::zero();
    expect.add_term(rat(1), 7, 0);
    expect.add_term(rat(7), 4, 3);
    expect.add_term(rat(7), 3, 4);
    expect.add_term(rat(1), 0, 7);

    let by_words = code.weight_enumerator(&caps()).unwrap();
    let by_tutte = greene_rhs(&code, &HarmonicFunction::constant_one(7), &caps()).unwrap();
    let ok = by_words == expect && by_tutte == expect;
    report(
        "3 classical greene fixture",
        started,
        ok,
        &format!("words={by_words} tutte-side={by_tutte}"),
    );
}

#[test]
fn criterion_04_harmonic_macwilliams() {
    let started = Instant::now();
    let spec = CorpusSpec {
        seed: 1004,
        instances: 200,
        q_choices: vec![2],
        max_n: 10,
        max_d: 3,
    };
    let (failures, detail) = corpus_failures(Identity::MacWilliams, &spec);
    report("4 harmonic macwilliams", started, failures == 0, &detail);
}

#[test]
fn criterion_05_b_relation_and_reinterpretation() {
    let started = Instant::now();
    let spec = CorpusSpec {
        seed: 1005,
        instances: 200,
        q_choices: vec![2, 3],
        max_n: 10,
        max_d: 3,
    };
    let (btf_failures, btf_detail) = corpus_failures(Identity::BTable, &spec);
    let (reint_failures, reint_detail) = corpus_failures(Identity::Reinterpretation, &spec);
    let ok = btf_failures == 0 && reint_failures == 0;
    report(
        "5 b-relation and reinterpretation",
        started,
        ok,
        &format!("{btf_detail}{reint_detail}"),
    );
}

#[test]
fn criterion_06_lemma_slices() {
    let started = Instant::now();
    let spec = CorpusSpec {
        seed: 1006,
        instances: 1000,
        q_choices: vec![2],
        max_n: 10,
        max_d: 3,
    };
    let outcome = run_corpus(Identity::LemmaSlices, &spec).unwrap();
    let ok = outcome.checks == 1000 && outcome.failures.is_empty();
    let detail = outcome
        .failures
        .first()
        .map(|f| f.to_string())
        .unwrap_or_else(|| format!("checks={}", outcome.checks));
    report("6 lemma slices", started, ok, &detail);
}

#[test]
fn criterion_07_harmonic_dimensions() {
    let started = Instant::now();
    let mut ok = true;
    let mut detail = String::new();
    for n in 1..=10usize {
        for d in 1..=(n + 1) / 2 {
            let got = rat(harmonic_basis(n, d).unwrap().len() as i64);
            let expect = binomial(n, d) - binomial(n, d - 1);
            if got != expect {
                ok = false;
                detail = format!("n={n} d={d}: got {got:?}, expected {expect:?}");
            }
        }
    }
    report("7 harmonic dimensions", started, ok, &detail);
}

#[test]
fn criterion_08_design_detector() {
    let started = Instant::now();

    // extended Hamming [8,4]: 3-design both ways, weight-4 class is a
    // 3-(8,4,1) Steiner system
    let good = LinearCode::from_matrix(extended_hamming_8_4());
    let good_report = design_check(&good, 3, &caps()).unwrap();
    let weight4 = good_report
        .weight_classes
        .iter()
        .find(|w| w.weight == 4)
        .expect("weight-4 class exists");
    let good_ok = good_report.harmonic_pass
        && good_report.oracle_pass
        && weight4.blocks == 14
        && weight4.lambda == Some(1);

    // {000, 110} fails t=1 with the recorded witness
    let bad = LinearCode::from_matrix(matrix(2, &[&[1, 1, 0]], 3));
    let bad_report = design_check(&bad, 1, &caps()).unwrap();
    let witness = bad_report.degrees[0].witness.as_ref();
    let bad_ok = !bad_report.harmonic_pass
        && !bad_report.oracle_pass
        && witness.map(|w| w.function == "{1} - {3}" && w.enumerator == "xy^2") == Some(true);

    report(
        "8 design detector",
        started,
        good_ok && bad_ok,
        &format!("good={good_report:?} bad={bad_report:?}"),
    );
}

#[test]
fn criterion_09_worked_micro_fixture() {
    let started = Instant::now();
    let g = matrix(2, &[&[1, 1, 0]], 3);
    let f = micro_function();
    let code = LinearCode::from_matrix(g.clone());
    let matroid = VectorMatroid::new(g);

    // T(M, f) = x + y - xy
    let mut tutte_expect = BivariatePoly::zero();
    tutte_expect.add_term(rat(1), 1, 0);
    tutte_expect.add_term(rat(1), 0, 1);
    tutte_expect.add_term(rat(-1), 1, 1);
    let tutte_ok = matroid.harmonic_tutte(&f).unwrap() == tutte_expect;

    // W_{C,f} = x y^2
    let w_ok = code.harmonic_weight_enumerator(&f, &caps()).unwrap()
        == BivariatePoly::monomial(rat(1), 1, 2);

    // Z_{C,f} = y
    let z_ok = code.zeta(&f, &caps()).unwrap() == BivariatePoly::monomial(rat(1), 0, 1);

    // B_{1,f} = -1
    let b_ok = code.b_table(&f, &caps()).unwrap()[1] == rat(-1);

    report(
        "9 worked micro fixture",
        started,
        tutte_ok && w_ok && z_ok && b_ok,
        &format!("tutte={tutte_ok} w={w_ok} z={z_ok} b={b_ok}"),
    );
}

#[test]
fn criterion_10_oracle_equivalence() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1010);
    let mut ok = true;
    let mut detail = String::new();
    for trial in 0..50 {
        let q = [2u64, 3, 5][rng.random_range(0..3)];
        let field = PrimeField::new(q).unwrap();
        let n = rng.random_range(2..=8usize);
        let k = rng.random_range(1..=n);
        let entries: Vec<u64> = (0..k * n).map(|_| rng.random_range(0..q)).collect();
        let m = FieldMatrix::new(field, k, n, entries).unwrap();
        let matroid = VectorMatroid::new(m.clone());

        // plain Tutte against the naive full re-ranking sum
        if matroid.tutte().unwrap() != common::naive_tutte(&m) {
            ok = false;
            detail = format!("tutte mismatch on trial {trial}");
            break;
        }

        // harmonic Tutte on a random basis element of a random degree
        let d = rng.random_range(0..=3.min(n / 2));
        let basis = harmonic_basis(n, d).unwrap();
        if basis.is_empty() {
            continue;
        }
        let f = &basis[rng.random_range(0..basis.len())];
        let fast = matroid.harmonic_tutte(f).unwrap();
        let slow = common::naive_harmonic_tutte(&m, f.as_set_function());
        if fast != slow {
            ok = false;
            detail = format!("harmonic tutte mismatch on trial {trial}");
            break;
        }
    }
    report("10 oracle equivalence", started, ok, &detail);
}
