//! Discrete harmonic functions: the differentiation operator, kernel
//! bases, subset extensions, and sliced sums.
//!
//! ```bash
//! cargo run --release --example harmonic_functions
//! ```

use harmonic_tutte::harmonic::{
    enumerate_subsets, harmonic_basis, parse_harmonic, slice_factor, SetFunction,
};
use harmonic_tutte::scalar::rat;
use harmonic_tutte::subset::Subset;

fn main() {
    // the index space: all d-subsets of {1..n} in lexicographic order
    let subsets = enumerate_subsets(4, 2).unwrap();
    let listed: Vec<String> = subsets.iter().map(|s| s.to_string()).collect();
    println!("2-subsets of {{1..4}}: {}", listed.join(" "));

    // a degree-2 function and its derivative
    let mut f = SetFunction::new(4, 2).unwrap();
    f.set(Subset::new(vec![1, 2], 4).unwrap(), rat(1));
    f.set(Subset::new(vec![1, 3], 4).unwrap(), rat(-1));
    println!("\nf = {f}");
    println!("gamma f = {}", f.differentiate().unwrap());

    // harmonic = killed by gamma; bases come from an exact rational kernel
    for (n, d) in [(3usize, 1usize), (4, 2), (5, 2)] {
        let basis = harmonic_basis(n, d).unwrap();
        println!("\nbasis of Harm_{d} on {{1..{n}}} (dim {}):", basis.len());
        for f in &basis {
            println!("  {f}");
        }
    }

    // the extension f~ sums f over contained d-subsets, and vanishes
    // outside d <= |X| <= n - d
    let basis = harmonic_basis(4, 1).unwrap();
    let f = &basis[0];
    println!("\nf = {f}");
    for mask in [0b0001u64, 0b0011, 0b0111, 0b1111] {
        let x = Subset::from_mask(mask);
        println!("  f~({x}) = {}", f.extended(&x));
    }

    // sliced sums are scalar multiples of the extension
    let j = Subset::new(vec![1, 2], 4).unwrap();
    for i in 0..=1 {
        println!(
            "  slice i={i} at {j}: {} = {} * f~({j})",
            f.slice_sum(&j, i),
            slice_factor(1, i),
        );
    }

    // functions round-trip through a JSON file format; loading validates
    // harmonicity and reports the violated derivative row otherwise
    let text = f.to_json_string();
    println!("\nserialized: {text}");
    let reloaded = parse_harmonic(&text).unwrap();
    assert_eq!(&reloaded, f);

    let bad = r#"{"n":3,"d":1,"entries":[{"subset":[1],"value":"2"}]}"#;
    println!("loading a non-harmonic file: {}", parse_harmonic(bad).unwrap_err());
}
