//! Detecting combinatorial t-designs among the fixed-weight supports of a
//! code, by vanishing harmonic enumerators and by direct block counting.
//!
//! ```bash
//! cargo run --release --example design_detection
//! ```

use harmonic_tutte::code::LinearCode;
use harmonic_tutte::linalg::FieldMatrix;
use harmonic_tutte::verify::design_check;
use harmonic_tutte::EnumCaps;

fn describe(name: &str, code: &LinearCode, t: usize) {
    let report = design_check(code, t, &EnumCaps::default()).unwrap();
    println!("{name}, t = {t}:");
    for d in &report.degrees {
        print!(
            "  d={}: {} basis functions, enumerators {}",
            d.d,
            d.basis_size,
            if d.enumerators_all_zero { "all vanish" } else { "do not all vanish" }
        );
        match &d.witness {
            Some(w) => println!(" (witness {} gives {})", w.function, w.enumerator),
            None => println!(),
        }
    }
    for w in &report.weight_classes {
        match w.lambda {
            Some(l) => println!(
                "  weight {}: {} blocks, every {t}-subset lies in exactly {l}",
                w.weight, w.blocks
            ),
            None => println!(
                "  weight {}: {} blocks, containment counts are not constant",
                w.weight, w.blocks
            ),
        }
    }
    println!(
        "  harmonic criterion {} / counting oracle {}\n",
        if report.harmonic_pass { "PASS" } else { "FAIL" },
        if report.oracle_pass { "PASS" } else { "FAIL" },
    );
}

fn main() {
    // the extended Hamming [8,4] code: its 14 weight-4 supports form the
    // 3-(8,4,1) Steiner system
    let extended = LinearCode::from_matrix(
        FieldMatrix::parse(
            "2 8 4\n1 0 0 0 0 1 1 1\n0 1 0 0 1 0 1 1\n0 0 1 0 1 1 0 1\n0 0 0 1 1 1 1 0\n",
        )
        .unwrap(),
    );
    describe("extended Hamming [8,4]", &extended, 3);

    // a repetition code: the single block is the whole point set
    let repetition =
        LinearCode::from_matrix(FieldMatrix::parse("2 5 1\n1 1 1 1 1\n").unwrap());
    describe("repetition [5,1]", &repetition, 1);

    // the failing micro example: {1,2} is not a 1-design on 3 points, and
    // the witness function sees it
    let micro = LinearCode::from_matrix(FieldMatrix::parse("2 3 1\n1 1 0\n").unwrap());
    describe("C = {000, 110}", &micro, 1);
}
