//! Linear codes and their classical and harmonic weight enumerators.
//!
//! A code is stored through a canonical (reduced, full-row-rank) generator
//! matrix. The harmonic weight enumerator weights each codeword by the
//! subset extension of a harmonic function at its support; removing the
//! forced `(xy)^d` factor yields the homogeneous `zeta` polynomial that the
//! identities in [`crate::verify`] are stated for.

use std::collections::HashMap;

use num_traits::Zero;

use crate::harmonic::HarmonicFunction;
use crate::linalg::{FieldMatrix, PrimeField};
use crate::matroid::VectorMatroid;
use crate::poly::BivariatePoly;
use crate::scalar::{rat_pow, sign, Rational};
use crate::scan::scan_weighted_subsets;
use crate::subset::Subset;
use crate::{EnumCaps, Error, Result};

/// An `[n, k]` linear code over a prime field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCode {
    generator: FieldMatrix,
}

/// One codeword, as a length-`n` vector of field residues.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Codeword {
    coords: Vec<u64>,
}

impl Codeword {
    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    /// Number of nonzero coordinates.
    pub fn weight(&self) -> usize {
        self.coords.iter().filter(|&&c| c != 0).count()
    }

    /// The 1-based positions of the nonzero coordinates.
    pub fn support(&self) -> Subset {
        let elems: Vec<usize> = self
            .coords
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i + 1)
            .collect();
        Subset::new(elems, self.coords.len()).expect("support is a valid subset")
    }
}

impl LinearCode {
    /// Builds the code spanned by the rows of `matrix`. The generator is
    /// reduced to echelon form and zero rows are dropped, so `dimension()`
    /// is the row rank and equal generators mean equal codes.
    pub fn from_matrix(matrix: FieldMatrix) -> LinearCode {
        let r = matrix.rref();
        let rows: Vec<Vec<u64>> = (0..r.rank).map(|i| r.reduced.row(i).to_vec()).collect();
        let generator = FieldMatrix::from_rows(matrix.field(), &rows, matrix.cols())
            .expect("echelon rows are well formed");
        LinearCode { generator }
    }

    pub fn generator(&self) -> &FieldMatrix {
        &self.generator
    }

    pub fn field(&self) -> PrimeField {
        self.generator.field()
    }

    /// Code length `n`.
    pub fn length(&self) -> usize {
        self.generator.cols()
    }

    /// Code dimension `k`.
    pub fn dimension(&self) -> usize {
        self.generator.rows()
    }

    /// `q^k`, saturating at `u128::MAX` for sizes far past any cap.
    pub fn word_count(&self) -> u128 {
        let q = self.field().order() as u128;
        let mut acc = 1u128;
        for _ in 0..self.dimension() {
            acc = acc.saturating_mul(q);
        }
        acc
    }

    /// The vector matroid of (any) generator matrix of this code.
    pub fn matroid(&self) -> VectorMatroid {
        VectorMatroid::new(self.generator.clone())
    }

    /// The dual code: all vectors orthogonal to every codeword.
    pub fn dual(&self) -> LinearCode {
        LinearCode::from_matrix(self.generator.null_space())
    }

    /// Streams all `q^k` codewords, each exactly once.
    pub fn codewords(&self, caps: &EnumCaps) -> Result<CodewordIter<'_>> {
        caps.check_words(self.word_count())?;
        Ok(CodewordIter {
            code: self,
            message: vec![0; self.dimension()],
            done: false,
        })
    }

    /// The weight enumerator `sum over codewords of x^(n-w) y^w`.
    pub fn weight_enumerator(&self, caps: &EnumCaps) -> Result<BivariatePoly> {
        let n = self.length();
        let mut counts = vec![0u64; n + 1];
        for word in self.codewords(caps)? {
            counts[word.weight()] += 1;
        }
        let mut w = BivariatePoly::zero();
        for (i, &a) in counts.iter().enumerate() {
            w.add_term(Rational::from_integer(a.into()), n - i, i);
        }
        Ok(w)
    }

    /// The harmonic weight enumerator: each codeword contributes
    /// `f~(support) x^(n-w) y^w`. For a degree-0 function this is the
    /// classical weight enumerator; for `d >= 1` it is divisible by
    /// `(xy)^d`.
    pub fn harmonic_weight_enumerator(
        &self,
        f: &HarmonicFunction,
        caps: &EnumCaps,
    ) -> Result<BivariatePoly> {
        let coeffs = self.harmonic_weight_coefficients(f, caps)?;
        let n = self.length();
        let mut w = BivariatePoly::zero();
        for (i, c) in coeffs.into_iter().enumerate() {
            w.add_term(c, n - i, i);
        }
        Ok(w)
    }

    /// The coefficient list `A_{i,f}` of the harmonic weight enumerator,
    /// indexed by weight.
    pub fn harmonic_weight_coefficients(
        &self,
        f: &HarmonicFunction,
        caps: &EnumCaps,
    ) -> Result<Vec<Rational>> {
        let n = self.length();
        if f.ground_size() != n {
            return Err(Error::GroundSizeMismatch {
                left: n,
                right: f.ground_size(),
            });
        }
        let mut coeffs = vec![Rational::zero(); n + 1];
        // distinct codewords can share a support (scalar multiples for
        // q > 2), so memoize the extension per support
        let mut memo: HashMap<Vec<usize>, Rational> = HashMap::new();
        for word in self.codewords(caps)? {
            let support = word.support();
            let ext = memo
                .entry(support.elements().to_vec())
                .or_insert_with(|| f.extended(&support));
            coeffs[word.weight()] += &*ext;
        }
        Ok(coeffs)
    }

    /// `zeta = harmonic weight enumerator / (xy)^d`, homogeneous of degree
    /// `n - 2d`. Non-divisibility cannot happen for a genuinely harmonic
    /// weight and is reported as an error rather than papered over.
    pub fn zeta(&self, f: &HarmonicFunction, caps: &EnumCaps) -> Result<BivariatePoly> {
        self.harmonic_weight_enumerator(f, caps)?
            .divide_by_xy_power(f.degree())
    }

    /// Dimension of the subcode vanishing on `j`, together with its count
    /// of nonzero words `q^l - 1`.
    ///
    /// The dimension is computed as `k - rank(columns in j)`; a brute-force
    /// count over codewords is the independent oracle in the tests.
    pub fn shortening(&self, j: &Subset) -> Result<ShorteningData> {
        let rank = self.generator.column_rank(j.elements())?;
        let dimension = self.dimension() - rank;
        let nonzero_count = rat_pow(self.field().order(), dimension) - Rational::from_integer(1.into());
        Ok(ShorteningData {
            dimension,
            nonzero_count,
        })
    }

    /// The table `t -> B_{t,f}`: for each subset size `t`, the sum over
    /// size-`t` subsets `J` of `f~(J) (q^(l(J)) - 1)`, indexed `0..=n`.
    ///
    /// Entries outside `d..=n-d` vanish for harmonic `f`.
    pub fn b_table(&self, f: &HarmonicFunction, caps: &EnumCaps) -> Result<Vec<Rational>> {
        let n = self.length();
        if f.ground_size() != n {
            return Err(Error::GroundSizeMismatch {
                left: n,
                right: f.ground_size(),
            });
        }
        caps.check_ground(n)?;
        let q = self.field().order();
        let k = self.dimension();
        let mut table = vec![Rational::zero(); n + 1];
        scan_weighted_subsets(&self.generator, f, &mut |size, rank, ext| {
            if !ext.is_zero() {
                let words = rat_pow(q, k - rank) - Rational::from_integer(1.into());
                table[size] += ext * words;
            }
        });
        Ok(table)
    }

    /// Reassembles `zeta` from the `B`-table:
    /// `(-1)^d * sum over t of B_{t,f} (x-y)^(t-d) y^(n-t-d)`.
    ///
    /// The `B`-sums see only nonzero codewords, so the zero codeword's
    /// `x^(n-2d)` contribution is restored explicitly; it vanishes for
    /// `d >= 1` where the extension of the empty support is zero.
    pub fn zeta_from_b_table(&self, f: &HarmonicFunction, caps: &EnumCaps) -> Result<BivariatePoly> {
        let n = self.length();
        let d = f.degree();
        let table = self.b_table(f, caps)?;
        let mut z = BivariatePoly::zero();
        if n < 2 * d {
            return Ok(z);
        }
        for t in d..=(n - d) {
            if !table[t].is_zero() {
                let c = sign(d) * &table[t];
                z += &BivariatePoly::shifted_term(&c, t - d, n - t - d);
            }
        }
        let zero_word = f.extended(&Subset::empty());
        z.add_term(zero_word, n - 2 * d, 0);
        Ok(z)
    }
}

/// Streaming iterator over all codewords, in message-vector order.
pub struct CodewordIter<'a> {
    code: &'a LinearCode,
    message: Vec<u64>,
    done: bool,
}

impl Iterator for CodewordIter<'_> {
    type Item = Codeword;

    fn next(&mut self) -> Option<Codeword> {
        if self.done {
            return None;
        }
        let word = Codeword {
            coords: self.code.generator.encode(&self.message),
        };
        // odometer in base q
        let q = self.code.field().order();
        let mut i = 0;
        loop {
            if i == self.message.len() {
                self.done = true;
                break;
            }
            self.message[i] += 1;
            if self.message[i] < q {
                break;
            }
            self.message[i] = 0;
            i += 1;
        }
        Some(word)
    }
}

/// Shortened-subcode data for one subset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShorteningData {
    /// `dim { c in C : c vanishes on J }`.
    pub dimension: usize,
    /// `q^dimension - 1`, the number of nonzero words in that subcode.
    pub nonzero_count: Rational,
}

/// The three enumerator tables of a code/function pair: classical counts
/// `A_i`, harmonic coefficients `A_{i,f}`, and the `B_{t,f}` values.
#[derive(Debug, Clone)]
pub struct EnumeratorTable {
    pub counts: Vec<u64>,
    pub harmonic: Vec<Rational>,
    pub b_values: Vec<Rational>,
}

impl EnumeratorTable {
    pub fn compute(code: &LinearCode, f: &HarmonicFunction, caps: &EnumCaps) -> Result<Self> {
        let n = code.length();
        let mut counts = vec![0u64; n + 1];
        for word in code.codewords(caps)? {
            counts[word.weight()] += 1;
        }
        Ok(EnumeratorTable {
            counts,
            harmonic: code.harmonic_weight_coefficients(f, caps)?,
            b_values: code.b_table(f, caps)?,
        })
    }
}
