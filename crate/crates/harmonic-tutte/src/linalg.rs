//! Exact linear algebra over prime fields and over the rationals.
//!
//! Everything downstream reduces to the routines here: subset ranks feed the
//! matroid rank oracle, null spaces give dual codes, and rational kernels
//! give harmonic-function bases.

use std::fmt;
use std::path::Path;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::scalar::Rational;
use crate::{Error, Result};

/// A prime field `F_q`, `q` prime.
///
/// Only prime moduli are supported; extension fields are out of scope.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    q: u64,
}

impl PrimeField {
    pub fn new(q: u64) -> Result<Self> {
        if !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        Ok(PrimeField { q })
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.q
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.q - b % self.q) % self.q
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        // residues stay < q <= 2^32 in practice, but widen anyway
        ((a as u128 * b as u128) % self.q as u128) as u64
    }

    pub fn neg(&self, a: u64) -> u64 {
        (self.q - a % self.q) % self.q
    }

    /// Multiplicative inverse by Fermat's little theorem.
    pub fn inv(&self, a: u64) -> u64 {
        assert!(a % self.q != 0, "zero has no inverse");
        self.pow(a, self.q - 2)
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        base %= self.q;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }
}

fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    if q % 2 == 0 {
        return q == 2;
    }
    let mut d = 3;
    while d * d <= q {
        if q % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Dense row-major matrix over a prime field.
///
/// Zero-dimensional shapes (`0 x n`, `k x 0`) are legal and show up as the
/// generator of the zero code and the length-0 code respectively.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    entries: Vec<u64>,
}

/// Result of row reduction: the echelon form, its rank, and the 1-based
/// pivot columns in increasing order.
#[derive(Debug, Clone)]
pub struct Rref {
    pub reduced: FieldMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl FieldMatrix {
    pub fn new(field: PrimeField, rows: usize, cols: usize, entries: Vec<u64>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows} x {cols} matrix",
                entries.len()
            )));
        }
        for &e in &entries {
            if e >= field.order() {
                return Err(Error::EntryOutOfRange {
                    value: e,
                    q: field.order(),
                });
            }
        }
        Ok(FieldMatrix {
            field,
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(field: PrimeField, rows: &[Vec<u64>], cols: usize) -> Result<Self> {
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row of length {} in a {cols}-column matrix",
                    r.len()
                )));
            }
        }
        Self::new(field, rows.len(), cols, rows.concat())
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        FieldMatrix {
            field,
            rows: n,
            cols: n,
            entries,
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry at 0-based storage position `(row, col)`.
    pub fn entry(&self, row: usize, col: usize) -> u64 {
        self.entries[row * self.cols + col]
    }

    pub fn row(&self, row: usize) -> &[u64] {
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    /// Column at 0-based position `col`, as a length-`rows` vector.
    pub fn column(&self, col: usize) -> Vec<u64> {
        (0..self.rows).map(|r| self.entry(r, col)).collect()
    }

    /// Row-reduced echelon form with rank and 1-based pivot columns.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let f = self.field;
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row >= m.rows {
                break;
            }
            let Some(src) = (pivot_row..m.rows).find(|&r| m.entry(r, col) != 0) else {
                continue;
            };
            m.swap_rows(pivot_row, src);
            let inv = f.inv(m.entry(pivot_row, col));
            m.scale_row(pivot_row, inv);
            for r in 0..m.rows {
                if r != pivot_row {
                    let factor = m.entry(r, col);
                    if factor != 0 {
                        m.row_op(r, pivot_row, f.neg(factor));
                    }
                }
            }
            pivots.push(col + 1);
            pivot_row += 1;
        }
        Rref {
            rank: pivots.len(),
            pivots,
            reduced: m,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Rank of the submatrix formed by the 1-based columns in `cols`.
    ///
    /// Duplicates are tolerated and ignored; `cols = {}` has rank 0.
    pub fn column_rank(&self, cols: &[usize]) -> Result<usize> {
        let mut basis = ColumnBasis::new(self.field, self.rows);
        let mut seen = vec![false; self.cols];
        for &c in cols {
            if c == 0 || c > self.cols {
                return Err(Error::ColumnOutOfRange {
                    index: c,
                    cols: self.cols,
                });
            }
            if !seen[c - 1] {
                seen[c - 1] = true;
                basis.try_extend_from(self, c - 1);
            }
        }
        Ok(basis.rank())
    }

    /// Basis of `{ x : self * x^T = 0 }`, one vector per row.
    ///
    /// The result has `cols()` columns and `cols() - rank()` rows.
    pub fn null_space(&self) -> FieldMatrix {
        let f = self.field;
        let n = self.cols;
        let r = self.rref();
        let pivot_of_col: Vec<Option<usize>> = {
            let mut m = vec![None; n];
            for (row, &p) in r.pivots.iter().enumerate() {
                m[p - 1] = Some(row);
            }
            m
        };
        let mut rows = Vec::new();
        for free in 0..n {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut v = vec![0u64; n];
            v[free] = 1;
            for (col, pivot) in pivot_of_col.iter().enumerate() {
                if let Some(row) = pivot {
                    v[col] = f.neg(r.reduced.entry(*row, free));
                }
            }
            rows.push(v);
        }
        FieldMatrix::from_rows(f, &rows, n).expect("null space rows are well formed")
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, row: usize, by: u64) {
        for c in 0..self.cols {
            let i = row * self.cols + c;
            self.entries[i] = self.field.mul(self.entries[i], by);
        }
    }

    /// `row(target) += factor * row(source)`.
    fn row_op(&mut self, target: usize, source: usize, factor: u64) {
        for c in 0..self.cols {
            let s = self.entries[source * self.cols + c];
            let i = target * self.cols + c;
            self.entries[i] = self.field.add(self.entries[i], self.field.mul(s, factor));
        }
    }

    /// `message * self` for a length-`rows` message vector.
    pub fn encode(&self, message: &[u64]) -> Vec<u64> {
        assert_eq!(message.len(), self.rows);
        let mut out = vec![0u64; self.cols];
        for (r, &m) in message.iter().enumerate() {
            if m == 0 {
                continue;
            }
            for c in 0..self.cols {
                out[c] = self.field.add(out[c], self.field.mul(m, self.entry(r, c)));
            }
        }
        out
    }

    /// Reads the text format: first non-comment line `q n k`, then `k` lines
    /// of `n` entries in `[0, q)`. Lines starting with `#` are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty matrix file".into()))?;
        let head: Vec<u64> = header
            .split_whitespace()
            .map(|t| {
                t.parse::<u64>()
                    .map_err(|_| Error::Parse(format!("bad header token {t:?}")))
            })
            .collect::<Result<_>>()?;
        let [q, n, k] = head[..] else {
            return Err(Error::Parse(format!(
                "header must be `q n k`, got {header:?}"
            )));
        };
        let field = PrimeField::new(q)?;
        let (n, k) = (n as usize, k as usize);
        let mut rows = Vec::with_capacity(k);
        for _ in 0..k {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse(format!("expected {k} matrix rows")))?;
            let row: Vec<u64> = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<u64>()
                        .map_err(|_| Error::Parse(format!("bad entry {t:?}")))
                })
                .collect::<Result<_>>()?;
            rows.push(row);
        }
        if let Some(extra) = lines.next() {
            return Err(Error::Parse(format!("trailing content {extra:?}")));
        }
        FieldMatrix::from_rows(field, &rows, n)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    /// The inverse of [`FieldMatrix::parse`].
    pub fn to_file_string(&self) -> String {
        let mut out = format!("{} {} {}\n", self.field.order(), self.cols, self.rows);
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(u64::to_string).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for FieldMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} x {} over F_{}", self.rows, self.cols, self.field.q)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(u64::to_string).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// Incrementally maintained basis of a span of column vectors.
///
/// Vectors are stored with distinct, normalized pivot positions and never
/// modified after insertion, so a basis can be rolled back to any earlier
/// rank with [`ColumnBasis::truncate`]. This is what makes subset scans over
/// all `2^n` column sets cheap: along a depth-first walk of the subset tree
/// the elimination state is shared by every subset with the same prefix.
#[derive(Debug, Clone)]
pub struct ColumnBasis {
    field: PrimeField,
    height: usize,
    vectors: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl ColumnBasis {
    pub fn new(field: PrimeField, height: usize) -> Self {
        ColumnBasis {
            field,
            height,
            vectors: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.vectors.len()
    }

    /// Reduces `column` against the basis; if independent, inserts the
    /// residual (pivot normalized to 1) and returns `true`.
    pub fn try_extend(&mut self, column: &[u64]) -> bool {
        assert_eq!(column.len(), self.height);
        let f = self.field;
        let mut v = column.to_vec();
        for (vec, &p) in self.vectors.iter().zip(&self.pivots) {
            let c = v[p];
            if c != 0 {
                let factor = f.neg(c);
                for (vi, bi) in v.iter_mut().zip(vec) {
                    *vi = f.add(*vi, f.mul(factor, *bi));
                }
            }
        }
        match v.iter().position(|&x| x != 0) {
            Some(p) => {
                let inv = f.inv(v[p]);
                for vi in v.iter_mut() {
                    *vi = f.mul(*vi, inv);
                }
                self.vectors.push(v);
                self.pivots.push(p);
                true
            }
            None => false,
        }
    }

    /// Extends by the 0-based column `col` of `m`.
    pub fn try_extend_from(&mut self, m: &FieldMatrix, col: usize) -> bool {
        self.try_extend(&m.column(col))
    }

    /// Rolls back to an earlier rank (as returned by [`ColumnBasis::rank`]).
    pub fn truncate(&mut self, rank: usize) {
        self.vectors.truncate(rank);
        self.pivots.truncate(rank);
    }
}

/// Dense matrix over the rationals. Hosts the inclusion matrices whose
/// kernels are the harmonic spaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows} x {cols} matrix",
                entries.len()
            )));
        }
        Ok(RationalMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, row: usize, col: usize) -> &Rational {
        &self.entries[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Rational) {
        self.entries[row * self.cols + col] = value;
    }

    /// Exact kernel basis `{ v : self * v^T = 0 }`.
    ///
    /// Each vector is canonicalized: scaled to integer entries with gcd 1
    /// and a positive leading entry, ordered by free column. This makes
    /// harmonic bases deterministic across runs.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let n = self.cols;
        let mut m = self.entries.clone();
        let rows = self.rows;
        let at = |m: &[Rational], r: usize, c: usize| m[r * n + c].clone();

        let mut pivot_cols: Vec<usize> = Vec::new();
        let mut pivot_row = 0;
        for col in 0..n {
            if pivot_row >= rows {
                break;
            }
            let Some(src) = (pivot_row..rows).find(|&r| !m[r * n + col].is_zero()) else {
                continue;
            };
            if src != pivot_row {
                for c in 0..n {
                    m.swap(src * n + c, pivot_row * n + c);
                }
            }
            let inv = at(&m, pivot_row, col);
            for c in 0..n {
                let v = at(&m, pivot_row, c) / &inv;
                m[pivot_row * n + c] = v;
            }
            for r in 0..rows {
                if r == pivot_row || m[r * n + col].is_zero() {
                    continue;
                }
                let factor = at(&m, r, col);
                for c in 0..n {
                    let v = at(&m, r, c) - &factor * &m[pivot_row * n + c];
                    m[r * n + c] = v;
                }
            }
            pivot_cols.push(col);
            pivot_row += 1;
        }

        let mut row_of_pivot = vec![usize::MAX; n];
        for (row, &col) in pivot_cols.iter().enumerate() {
            row_of_pivot[col] = row;
        }
        let mut basis = Vec::new();
        for free in 0..n {
            if row_of_pivot[free] != usize::MAX {
                continue;
            }
            let mut v = vec![Rational::zero(); n];
            v[free] = Rational::from_integer(BigInt::from(1));
            for &pc in &pivot_cols {
                v[pc] = -at(&m, row_of_pivot[pc], free);
            }
            basis.push(canonicalize(v));
        }
        basis
    }
}

/// Scales to integer entries with gcd 1 and positive leading entry.
fn canonicalize(v: Vec<Rational>) -> Vec<Rational> {
    let mut denom_lcm = BigInt::from(1);
    for x in &v {
        denom_lcm = denom_lcm.lcm(x.denom());
    }
    let mut ints: Vec<BigInt> = v
        .iter()
        .map(|x| (x * Rational::from_integer(denom_lcm.clone())).to_integer())
        .collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if !g.is_zero() {
        for x in ints.iter_mut() {
            *x = &*x / &g;
        }
    }
    if let Some(first) = ints.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in ints.iter_mut() {
                *x = -&*x;
            }
        }
    }
    ints.into_iter().map(Rational::from_integer).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn f2() -> PrimeField {
        PrimeField::new(2).unwrap()
    }

    fn mat(q: u64, rows: &[&[u64]], cols: usize) -> FieldMatrix {
        let rows: Vec<Vec<u64>> = rows.iter().map(|r| r.to_vec()).collect();
        FieldMatrix::from_rows(PrimeField::new(q).unwrap(), &rows, cols).unwrap()
    }

    /// [7,4] Hamming code generator in standard form.
    fn hamming_7_4() -> FieldMatrix {
        mat(
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

    #[test]
    fn primality_check() {
        assert!(PrimeField::new(2).is_ok());
        assert!(PrimeField::new(3).is_ok());
        assert!(PrimeField::new(23041).is_ok());
        for q in [0, 1, 4, 6, 9, 15] {
            assert!(matches!(PrimeField::new(q), Err(Error::NotPrime(_))));
        }
    }

    #[test]
    fn field_arithmetic() {
        let f = PrimeField::new(5).unwrap();
        for a in 1..5 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
            assert_eq!(f.add(a, f.neg(a)), 0);
        }
    }

    #[test]
    fn rref_identity() {
        let r = FieldMatrix::identity(f2(), 2).rref();
        assert_eq!(r.rank, 2);
        assert_eq!(r.pivots, vec![1, 2]);
        assert_eq!(r.reduced, FieldMatrix::identity(f2(), 2));
    }

    #[test]
    fn rref_single_row() {
        let r = mat(2, &[&[1, 1, 0]], 3).rref();
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivots, vec![1]);
    }

    #[test]
    fn rref_hamming_full_rank() {
        assert_eq!(hamming_7_4().rref().rank, 4);
    }

    #[test]
    fn rref_zero_shapes() {
        let zero_rows = FieldMatrix::new(f2(), 0, 3, vec![]).unwrap();
        assert_eq!(zero_rows.rref().rank, 0);
        let zero_cols = FieldMatrix::new(f2(), 2, 0, vec![]).unwrap();
        assert_eq!(zero_cols.rref().rank, 0);
    }

    #[test]
    fn column_rank_examples() {
        let g = mat(2, &[&[1, 1, 0]], 3);
        assert_eq!(g.column_rank(&[3]).unwrap(), 0);
        assert_eq!(g.column_rank(&[1, 2]).unwrap(), 1);
        assert_eq!(g.column_rank(&[]).unwrap(), 0);
        assert_eq!(hamming_7_4().column_rank(&[1, 2, 3, 4, 5, 6, 7]).unwrap(), 4);
        assert!(g.column_rank(&[4]).is_err());
        assert!(g.column_rank(&[0]).is_err());
    }

    #[test]
    fn null_space_examples() {
        // full rank: trivial kernel
        let ns = FieldMatrix::identity(f2(), 2).null_space();
        assert_eq!((ns.rows(), ns.cols()), (0, 2));

        // repetition: self-orthogonal
        let ns = mat(2, &[&[1, 1]], 2).null_space();
        assert_eq!(ns.rows(), 1);
        assert_eq!(ns.row(0), &[1, 1]);

        // kernel of [1 1 0] is {000, 110, 001, 111}
        let g = mat(2, &[&[1, 1, 0]], 3);
        let ns = g.null_space();
        assert_eq!(ns.rows(), 2);
        let mut words: Vec<Vec<u64>> = Vec::new();
        for a in 0..2u64 {
            for b in 0..2u64 {
                let w: Vec<u64> = (0..3)
                    .map(|c| f2().add(f2().mul(a, ns.entry(0, c)), f2().mul(b, ns.entry(1, c))))
                    .collect();
                words.push(w);
            }
        }
        words.sort();
        assert_eq!(
            words,
            vec![
                vec![0, 0, 0],
                vec![0, 0, 1],
                vec![1, 1, 0],
                vec![1, 1, 1]
            ]
        );
    }

    #[test]
    fn null_space_of_empty_matrix_is_full_space() {
        let m = FieldMatrix::new(f2(), 0, 3, vec![]).unwrap();
        assert_eq!(m.null_space(), FieldMatrix::identity(f2(), 3));
    }

    #[test]
    fn rank_nullity_over_f3() {
        let m = mat(3, &[&[1, 2, 0, 1], &[2, 1, 0, 2], &[0, 0, 1, 1]], 4);
        let r = m.rank();
        let ns = m.null_space();
        assert_eq!(r + ns.rows(), 4);
        // orthogonality of every kernel row against every matrix row
        let f = m.field();
        for kr in 0..ns.rows() {
            for mr in 0..m.rows() {
                let dot = (0..4).fold(0, |acc, c| {
                    f.add(acc, f.mul(ns.entry(kr, c), m.entry(mr, c)))
                });
                assert_eq!(dot, 0);
            }
        }
    }

    #[test]
    fn column_basis_truncate_rolls_back() {
        let m = hamming_7_4();
        let mut basis = ColumnBasis::new(m.field(), m.rows());
        assert!(basis.try_extend_from(&m, 0));
        let mark = basis.rank();
        assert!(basis.try_extend_from(&m, 1));
        assert!(basis.try_extend_from(&m, 2));
        basis.truncate(mark);
        assert_eq!(basis.rank(), 1);
        // re-extending gives the same ranks as a fresh elimination
        assert!(basis.try_extend_from(&m, 4));
        assert_eq!(basis.rank(), m.column_rank(&[1, 5]).unwrap());
    }

    #[test]
    fn rational_kernel_zero_matrix() {
        let m = RationalMatrix::zero(1, 3);
        let basis = m.kernel_basis();
        assert_eq!(basis.len(), 3);
        for (i, v) in basis.iter().enumerate() {
            for (j, x) in v.iter().enumerate() {
                assert_eq!(*x, if i == j { rat(1) } else { rat(0) });
            }
        }
    }

    #[test]
    fn rational_kernel_all_ones() {
        let mut m = RationalMatrix::zero(1, 3);
        for c in 0..3 {
            m.set(0, c, rat(1));
        }
        let basis = m.kernel_basis();
        assert_eq!(basis.len(), 2);
        assert_eq!(basis[0], vec![rat(1), rat(-1), rat(0)]);
        assert_eq!(basis[1], vec![rat(1), rat(0), rat(-1)]);
    }

    #[test]
    fn rational_kernel_members_annihilate() {
        let mut m = RationalMatrix::zero(2, 4);
        let vals = [[1i64, 2, 3, 4], [0, 1, 0, 2]];
        for r in 0..2 {
            for c in 0..4 {
                m.set(r, c, rat(vals[r][c]));
            }
        }
        let basis = m.kernel_basis();
        assert_eq!(basis.len(), 2);
        for v in &basis {
            for r in 0..2 {
                let dot: Rational = (0..4).map(|c| m.entry(r, c) * &v[c]).sum();
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn matrix_file_round_trip() {
        let text = "# a comment\n2 3 1\n1 1 0\n";
        let m = FieldMatrix::parse(text).unwrap();
        assert_eq!((m.rows(), m.cols()), (1, 3));
        assert_eq!(FieldMatrix::parse(&m.to_file_string()).unwrap(), m);
    }

    #[test]
    fn matrix_file_rejects_bad_input() {
        assert!(FieldMatrix::parse("").is_err());
        assert!(FieldMatrix::parse("4 2 1\n1 1\n").is_err()); // q not prime
        assert!(FieldMatrix::parse("2 2 1\n1 2\n").is_err()); // entry >= q
        assert!(FieldMatrix::parse("2 2 2\n1 0\n").is_err()); // missing row
        assert!(FieldMatrix::parse("2 2 1\n1 0\n0 1\n").is_err()); // extra row
    }

    #[test]
    fn encode_matches_row_combination() {
        let m = hamming_7_4();
        let w = m.encode(&[1, 0, 1, 0]);
        let expect: Vec<u64> = (0..7)
            .map(|c| f2().add(m.entry(0, c), m.entry(2, c)))
            .collect();
        assert_eq!(w, expect);
    }
}
