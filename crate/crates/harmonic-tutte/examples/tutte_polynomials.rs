//! Vector matroids from matrices and their Tutte polynomials.
//!
//! ```bash
//! cargo run --release --example tutte_polynomials
//! ```

use harmonic_tutte::linalg::{FieldMatrix, PrimeField};
use harmonic_tutte::matroid::VectorMatroid;
use harmonic_tutte::scalar::rat;
use harmonic_tutte::subset::Subset;

fn main() {
    let f2 = PrimeField::new(2).unwrap();

    // the matroid of the identity matrix: every subset independent
    let free = VectorMatroid::new(FieldMatrix::identity(f2, 2));
    println!("free matroid on 2 elements: T = {}", free.tutte().unwrap());

    // two parallel elements: [1 1]
    let parallel = VectorMatroid::new(FieldMatrix::from_rows(f2, &[vec![1, 1]], 2).unwrap());
    println!("two parallel elements:      T = {}", parallel.tutte().unwrap());

    // matrices can also come from the text file format
    let hamming = FieldMatrix::parse(
        "# Hamming [7,4] generator\n\
         2 7 4\n\
         1 0 0 0 0 1 1\n\
         0 1 0 0 1 0 1\n\
         0 0 1 0 1 1 0\n\
         0 0 0 1 1 1 1\n",
    )
    .unwrap();
    let m = VectorMatroid::new(hamming);
    println!();
    println!("Hamming [7,4] column matroid (the dual Fano matroid):");
    let t = m.tutte().unwrap();
    println!("  T(M; x, y) = {t}");
    println!("  T(1, 1)    = {} bases", t.evaluate(&rat(1), &rat(1)));
    println!("  T(2, 1)    = {} independent sets", t.evaluate(&rat(2), &rat(1)));
    println!("  T(1, 2)    = {} spanning sets", t.evaluate(&rat(1), &rat(2)));

    // rank queries against 1-based column subsets
    let j = Subset::new(vec![5, 6, 7], 7).unwrap();
    println!("  rank({j}) = {}", m.rank(&j).unwrap());

    // the dual matroid swaps x and y in the Tutte polynomial
    let dual = m.dual();
    println!();
    println!("dual matroid (the Fano matroid itself):");
    println!("  rank = {}", dual.full_rank());
    println!("  T(M*; x, y) = {}", dual.tutte().unwrap());
    assert_eq!(dual.tutte().unwrap(), t.swap_xy());
    println!("  == T(M; y, x), as it must be");
}
