//! Harmonic Tutte polynomials and the duality relation
//! `T(M*, f; x, y) = (-1)^d T(M, f; y, x)`.
//!
//! ```bash
//! cargo run --release --example harmonic_tutte_duality
//! ```

use harmonic_tutte::harmonic::{harmonic_basis, HarmonicFunction, SetFunction};
use harmonic_tutte::linalg::{FieldMatrix, PrimeField};
use harmonic_tutte::matroid::VectorMatroid;
use harmonic_tutte::scalar::{rat, sign};
use harmonic_tutte::subset::Subset;
use harmonic_tutte::verify::verify_duality;
use harmonic_tutte::EnumCaps;

fn main() {
    let f2 = PrimeField::new(2).unwrap();

    // the worked micro example: G = [1 1 0], f = {1} - {3}
    let m = VectorMatroid::new(FieldMatrix::from_rows(f2, &[vec![1, 1, 0]], 3).unwrap());
    let mut f = SetFunction::new(3, 1).unwrap();
    f.set(Subset::new(vec![1], 3).unwrap(), rat(1));
    f.set(Subset::new(vec![3], 3).unwrap(), rat(-1));
    let f = HarmonicFunction::new(f).unwrap();

    let t = m.harmonic_tutte(&f).unwrap();
    let t_dual = m.dual().harmonic_tutte(&f).unwrap();
    println!("G = [1 1 0], f = {f}");
    println!("  T(M,  f) = {t}");
    println!("  T(M*, f) = {t_dual}");
    println!("  (-1)^1 T(M, f; y, x) = {}", t.swap_xy().scale(&sign(1)));

    // a weighted sum with a degree-0 function is the plain Tutte polynomial
    let constant = HarmonicFunction::constant_one(3);
    assert_eq!(m.harmonic_tutte(&constant).unwrap(), m.tutte().unwrap());

    // duality as an executable check over a whole basis
    let caps = EnumCaps::default();
    let rep = FieldMatrix::from_rows(
        f2,
        &[vec![1, 0, 1, 1, 0, 1], vec![0, 1, 1, 0, 1, 1], vec![0, 0, 0, 1, 1, 1]],
        6,
    )
    .unwrap();
    let m = VectorMatroid::new(rep);
    println!("\na rank-3 matroid on 6 elements, all of Harm_2:");
    for f in harmonic_basis(6, 2).unwrap() {
        let report = verify_duality(&m, &f, &caps).unwrap();
        assert!(report.is_equal());
        println!("  f = {f}");
        println!("    T(M, f) = {}   duality: equal", report.rhs.swap_xy().scale(&sign(2)));
    }
}
