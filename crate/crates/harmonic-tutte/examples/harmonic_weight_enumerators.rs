//! The harmonic weight enumerator, its zeta form, the B-table, and the
//! reassembly identity, walked through on a fully hand-checkable example.
//!
//! ```bash
//! cargo run --release --example harmonic_weight_enumerators
//! ```
//!
//! Ground set {1,2,3}; code C = {000, 110} generated by G = [1 1 0];
//! harmonic weight f = {1} - {3} of degree 1.
//!
//! Every value printed below can be recomputed on paper:
//!
//! - extensions: f~({1}) = 1, f~({2}) = 0, f~({3}) = -1, f~({1,2}) = 1,
//!   f~({1,3}) = 0, f~({2,3}) = -1, f~({1,2,3}) = 0, f~({}) = 0.
//! - W_{C,f}: the word 000 contributes f~({}) = 0; the word 110 has
//!   support {1,2} and weight 2, contributing f~({1,2}) x^1 y^2 = x y^2.
//! - Z_{C,f} = W_{C,f} / (xy)^1 = y.
//! - shortened subcodes: C(J) keeps words vanishing on J, so
//!   l({1}) = 0, l({2}) = 0, l({3}) = 1, and B_J = 2^l - 1 gives
//!   B = 0, 0, 1 on singletons.
//! - B_{1,f} = f~({1}) B_{1} + f~({2}) B_{2} + f~({3}) B_{3}
//!           = 1*0 + 0*0 + (-1)*1 = -1, and B_{2,f} = 0.
//! - reassembly: (-1)^1 [ B_{1,f} (x-y)^0 y^1 + B_{2,f} (x-y)^1 y^0 ]
//!             = -(-1) y = y = Z_{C,f}.
//! - harmonic Tutte, summing f~(J) (x-1)^(1-rank J) (y-1)^(|J|-rank J):
//!   J={1}: +1, J={3}: -(x-1)(y-1), J={1,2}: +(y-1), J={2,3}: -(y-1),
//!   total 1 - (x-1)(y-1) = x + y - xy.

use harmonic_tutte::code::LinearCode;
use harmonic_tutte::harmonic::{HarmonicFunction, SetFunction};
use harmonic_tutte::linalg::{FieldMatrix, PrimeField};
use harmonic_tutte::scalar::{rat, rational_string};
use harmonic_tutte::subset::{k_subsets, Subset};
use harmonic_tutte::verify::{verify_btf, verify_reinterpretation};
use harmonic_tutte::EnumCaps;

fn main() {
    let caps = EnumCaps::default();
    let f2 = PrimeField::new(2).unwrap();
    let code = LinearCode::from_matrix(FieldMatrix::from_rows(f2, &[vec![1, 1, 0]], 3).unwrap());

    let mut f = SetFunction::new(3, 1).unwrap();
    f.set(Subset::new(vec![1], 3).unwrap(), rat(1));
    f.set(Subset::new(vec![3], 3).unwrap(), rat(-1));
    let f = HarmonicFunction::new(f).unwrap();

    println!("C = {{000, 110}}, f = {f}");

    println!("\nextensions over all subsets:");
    for size in 0..=3usize {
        for x in k_subsets(3, size).unwrap() {
            println!("  f~({x}) = {}", f.extended(&x));
        }
    }

    let w = code.harmonic_weight_enumerator(&f, &caps).unwrap();
    let z = code.zeta(&f, &caps).unwrap();
    println!("\nW_(C,f) = {w}");
    println!("Z_(C,f) = W / (xy)^1 = {z}");

    println!("\nshortened subcode data on singletons:");
    for x in k_subsets(3, 1).unwrap() {
        let s = code.shortening(&x).unwrap();
        println!(
            "  l({x}) = {}, nonzero words = {}",
            s.dimension,
            rational_string(&s.nonzero_count)
        );
    }

    let table = code.b_table(&f, &caps).unwrap();
    println!("\nB-table:");
    for (t, value) in table.iter().enumerate() {
        println!("  B_({t},f) = {}", rational_string(value));
    }

    let reassembled = code.zeta_from_b_table(&f, &caps).unwrap();
    println!("\nreassembled from the B-table: {reassembled}");
    assert_eq!(reassembled, z);

    let matroid = code.matroid();
    println!("harmonic Tutte: T(M_C, f) = {}", matroid.harmonic_tutte(&f).unwrap());

    // the two-sided checks, as the verification harness runs them
    println!();
    println!("{}", verify_btf(&code, &f, &caps).unwrap());
    println!();
    println!("{}", verify_reinterpretation(&code, &f, &caps).unwrap());
}
