//! Independent reference implementations used as test oracles.
//!
//! Everything here recomputes from definitions: ranks by a fresh Gaussian
//! elimination of the chosen columns, subset extensions by enumerating
//! d-subsets, Tutte sums by walking all 2^n bitmasks. None of it shares a
//! code path with the incremental engines in the library.

// not every test binary uses every oracle
#![allow(dead_code)]

use harmonic_tutte::harmonic::SetFunction;
use harmonic_tutte::linalg::FieldMatrix;
use harmonic_tutte::poly::BivariatePoly;
use harmonic_tutte::scalar::{rat, Rational};
use harmonic_tutte::subset::Subset;

use num_traits::Zero;

/// Rank of the 1-based columns `elements` of `m`, by row-reducing the
/// submatrix from scratch.
pub fn naive_rank(m: &FieldMatrix, elements: &[usize]) -> usize {
    let q = m.field().order();
    let rows = m.rows();
    let cols = elements.len();
    // submatrix in column-major order is irrelevant; copy rows restricted
    // to the chosen columns
    let mut sub: Vec<Vec<u64>> = (0..rows)
        .map(|r| elements.iter().map(|&c| m.entry(r, c - 1)).collect())
        .collect();

    let inv = |a: u64| -> u64 {
        // Fermat inverse, written out independently of the library
        let mut result = 1u64;
        let mut base = a % q;
        let mut exp = q - 2;
        while exp > 0 {
            if exp & 1 == 1 {
                result = result * base % q;
            }
            base = base * base % q;
            exp >>= 1;
        }
        result
    };

    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| sub[r][col] != 0) else {
            continue;
        };
        sub.swap(rank, pivot);
        let scale = inv(sub[rank][col]);
        for c in 0..cols {
            sub[rank][c] = sub[rank][c] * scale % q;
        }
        for r in 0..rows {
            if r != rank && sub[r][col] != 0 {
                let factor = sub[r][col];
                for c in 0..cols {
                    sub[r][c] = (sub[r][c] + (q - factor) * sub[rank][c]) % q;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// `f~(J)` by enumerating every d-subset of `J` directly.
pub fn naive_extension(f: &SetFunction, j: &Subset) -> Rational {
    let d = f.degree();
    let elems = j.elements();
    let mut total = Rational::zero();
    let mut chosen = vec![0usize; d];
    fn rec(
        f: &SetFunction,
        elems: &[usize],
        chosen: &mut Vec<usize>,
        depth: usize,
        start: usize,
        total: &mut Rational,
    ) {
        if depth == chosen.len() {
            let z = Subset::new(chosen.clone(), f.ground_size()).unwrap();
            *total += f.value(&z);
            return;
        }
        for i in start..elems.len() {
            chosen[depth] = elems[i];
            rec(f, elems, chosen, depth + 1, i + 1, total);
        }
    }
    if d <= elems.len() {
        rec(f, elems, &mut chosen, 0, 0, &mut total);
    }
    total
}

/// The weighted corank-nullity sum over all `2^n` subsets, with every rank
/// recomputed from scratch and every extension taken from the definition.
pub fn naive_harmonic_tutte(m: &FieldMatrix, f: &SetFunction) -> BivariatePoly {
    let n = m.cols();
    assert_eq!(f.ground_size(), n);
    let all: Vec<usize> = (1..=n).collect();
    let rank_full = naive_rank(m, &all);

    let x_minus_1 = {
        let mut p = BivariatePoly::var_x();
        p.add_term(rat(-1), 0, 0);
        p
    };
    let y_minus_1 = {
        let mut p = BivariatePoly::var_y();
        p.add_term(rat(-1), 0, 0);
        p
    };
    let pow = |base: &BivariatePoly, e: usize| {
        let mut acc = BivariatePoly::one();
        for _ in 0..e {
            acc = &acc * base;
        }
        acc
    };

    let mut total = BivariatePoly::zero();
    for mask in 0u64..(1u64 << n) {
        let j = Subset::from_mask(mask);
        let weight = naive_extension(f, &j);
        if weight.is_zero() {
            continue;
        }
        let rank = naive_rank(m, j.elements());
        let term = &pow(&x_minus_1, rank_full - rank) * &pow(&y_minus_1, j.len() - rank);
        total += &term.scale(&weight);
    }
    total
}

/// The plain Tutte polynomial via [`naive_harmonic_tutte`] with the
/// constant weight.
pub fn naive_tutte(m: &FieldMatrix) -> BivariatePoly {
    naive_harmonic_tutte(m, &SetFunction::constant_one(m.cols()))
}
