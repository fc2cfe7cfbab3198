//! Exact computation of Tutte polynomials, weight enumerators, and their
//! harmonic generalizations for linear codes over prime fields and the
//! vector matroids they define.
//!
//! Everything is computed over the rationals with arbitrary precision; no
//! floating point is involved anywhere, so every identity check in
//! [`verify`] is an exact polynomial comparison.
//!
//! The main pieces:
//!
//! - [`linalg`] — row reduction, column ranks, and null spaces over a prime
//!   field, plus exact kernels over the rationals.
//! - [`poly`] — bivariate polynomials in `x`, `y` with rational coefficients.
//! - [`harmonic`] — discrete harmonic functions on `d`-subsets of the ground
//!   set: the differentiation operator, kernel bases, subset extensions.
//! - [`matroid`] — vector matroids with rank oracles, duals, and the
//!   (harmonic) Tutte polynomial as a full subset sum.
//! - [`code`] — linear codes, (harmonic) weight enumerators, shortened
//!   subcode data, and the `B`-coefficient tables.
//! - [`verify`] — executable statements of the identities relating all of
//!   the above, each recomputing both sides independently, plus a
//!   combinatorial `t`-design detector and a seeded self-test corpus.
//!
//! The `examples/` directory has one runnable program per capability; start
//! with `tutte_polynomials` and `weight_enumerators`:
//!
//! ```bash
//! cargo run --release --example tutte_polynomials
//! cargo run --release --example weight_enumerators
//! cargo run --release --example harmonic_functions
//! cargo run --release --example harmonic_tutte_duality
//! cargo run --release --example harmonic_weight_enumerators
//! cargo run --release --example greene_identity
//! cargo run --release --example design_detection
//! cargo run --release --example verify_suite
//! ```
//!
//! A thin command-line front end (`hartutte`) exposes the same operations on
//! matrix and harmonic-function files; see [`cli`].

pub mod cli;
pub mod code;
pub mod harmonic;
pub mod linalg;
pub mod matroid;
pub mod poly;
pub mod scalar;
pub mod subset;
pub mod verify;

pub(crate) mod scan;

pub use scalar::Rational;
pub use subset::Subset;

use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not a prime modulus")]
    NotPrime(u64),
    #[error("entry {value} out of range for F_{q}")]
    EntryOutOfRange { value: u64, q: u64 },
    #[error("column index {index} out of range 1..={cols}")]
    ColumnOutOfRange { index: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("ground set size mismatch: {left} vs {right}")]
    GroundSizeMismatch { left: usize, right: usize },
    #[error("subset size {d} out of range for ground set of size {n}")]
    DegreeOutOfRange { d: usize, n: usize },
    #[error("cannot differentiate a degree-0 function")]
    DifferentiateDegreeZero,
    #[error("enumeration size {required} exceeds cap {cap} ({what})")]
    CapExceeded {
        required: u128,
        cap: u128,
        what: &'static str,
    },
    #[error("not harmonic: (gamma f)({row}) = {value}")]
    NotHarmonic { row: String, value: String },
    #[error("not divisible by (xy)^{power}: term x^{x_exp} y^{y_exp}")]
    NotDivisible {
        power: usize,
        x_exp: usize,
        y_exp: usize,
    },
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Guards on the two enumeration axes: ground-set size (subset sums walk
/// `2^n` subsets) and codeword count (`q^k` words).
#[derive(Debug, Clone)]
pub struct EnumCaps {
    /// Largest ground-set size for which `2^n` subset sums are attempted.
    pub max_ground: usize,
    /// Largest number of codewords enumerated.
    pub max_words: u128,
}

impl Default for EnumCaps {
    fn default() -> Self {
        EnumCaps {
            max_ground: 20,
            max_words: 1 << 24,
        }
    }
}

impl EnumCaps {
    pub(crate) fn check_ground(&self, n: usize) -> Result<()> {
        // subset masks are u64; 62 elements is already far past what a
        // 2^n walk can finish, so treat it as a hard ceiling
        let cap = self.max_ground.min(62);
        if n > cap {
            return Err(Error::CapExceeded {
                required: n as u128,
                cap: cap as u128,
                what: "ground set size",
            });
        }
        Ok(())
    }

    pub(crate) fn check_words(&self, words: u128) -> Result<()> {
        if words > self.max_words {
            return Err(Error::CapExceeded {
                required: words,
                cap: self.max_words,
                what: "codeword count",
            });
        }
        Ok(())
    }
}
