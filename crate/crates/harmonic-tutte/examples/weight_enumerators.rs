//! Linear codes, weight enumerators, dual codes, and the MacWilliams
//! transform, all in exact arithmetic.
//!
//! ```bash
//! cargo run --release --example weight_enumerators
//! ```

use harmonic_tutte::code::LinearCode;
use harmonic_tutte::linalg::FieldMatrix;
use harmonic_tutte::scalar::{rat_pow, Rational};
use harmonic_tutte::EnumCaps;

use num_traits::One;

fn main() {
    let caps = EnumCaps::default();

    let hamming = LinearCode::from_matrix(
        FieldMatrix::parse(
            "2 7 4\n1 0 0 0 0 1 1\n0 1 0 0 1 0 1\n0 0 1 0 1 1 0\n0 0 0 1 1 1 1\n",
        )
        .unwrap(),
    );
    println!(
        "Hamming [{}, {}] code over F_{} with {} words",
        hamming.length(),
        hamming.dimension(),
        hamming.field().order(),
        hamming.word_count()
    );
    let w = hamming.weight_enumerator(&caps).unwrap();
    println!("  W_C = {w}");

    let simplex = hamming.dual();
    let w_dual = simplex.weight_enumerator(&caps).unwrap();
    println!("  dual (simplex [7,3]): W = {w_dual}");

    // MacWilliams: W_dual(x, y) = W(x + (q-1)y, x - y) / |C|
    let q = hamming.field().order();
    let transformed = w.substitute_linear(
        &Rational::one(),
        &rat_pow(q - 1, 1),
        &Rational::one(),
        &(-Rational::one()),
        &(Rational::one() / rat_pow(q, hamming.dimension())),
    );
    assert_eq!(transformed, w_dual);
    println!("  MacWilliams transform of W_C reproduces it exactly");

    // and the same machinery over a non-binary field
    let ternary = LinearCode::from_matrix(
        FieldMatrix::parse("3 4 2\n1 0 1 2\n0 1 2 2\n").unwrap(),
    );
    let w3 = ternary.weight_enumerator(&caps).unwrap();
    println!("\na [4,2] code over F_3:");
    println!("  W_C    = {w3}");
    println!("  W_dual = {}", ternary.dual().weight_enumerator(&caps).unwrap());

    // codewords stream in a deterministic order
    println!("  words:");
    for word in ternary.codewords(&caps).unwrap() {
        let digits: Vec<String> = word.coords().iter().map(u64::to_string).collect();
        println!("    {} (weight {})", digits.join(""), word.weight());
    }
}
