//! Vector matroids and their (harmonic) Tutte polynomials.
//!
//! A vector matroid is presented by a matrix over a prime field; a column
//! set is independent exactly when the columns are linearly independent, so
//! the rank function is a column rank. The Tutte polynomial is computed as
//! the corank-nullity sum over all `2^n` subsets of the ground set - there
//! is no deletion/contraction recursion here.

use crate::harmonic::HarmonicFunction;
use crate::linalg::FieldMatrix;
use crate::poly::BivariatePoly;
use crate::scalar::Rational;
use crate::scan::scan_weighted_subsets;
use crate::subset::Subset;
use crate::{EnumCaps, Error, Result};

/// A matroid on `{1..n}` represented by the columns of a matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorMatroid {
    representation: FieldMatrix,
    rank_full: usize,
}

impl VectorMatroid {
    pub fn new(representation: FieldMatrix) -> Self {
        let rank_full = representation.rank();
        VectorMatroid {
            representation,
            rank_full,
        }
    }

    pub fn ground_size(&self) -> usize {
        self.representation.cols()
    }

    pub fn representation(&self) -> &FieldMatrix {
        &self.representation
    }

    /// Rank of the whole ground set.
    pub fn full_rank(&self) -> usize {
        self.rank_full
    }

    /// Rank of a subset of the ground set: the column rank of the
    /// corresponding submatrix. `rank({}) = 0`.
    pub fn rank(&self, j: &Subset) -> Result<usize> {
        self.representation.column_rank(j.elements())
    }

    /// The dual matroid, represented by a basis of the null space of the
    /// representation. Its rank function satisfies
    /// `rank*(J) = |J| + rank(E \ J) - rank(E)`.
    pub fn dual(&self) -> VectorMatroid {
        VectorMatroid::new(self.representation.null_space())
    }

    /// The dual rank computed from the complement formula rather than from
    /// the dual representation; the two must agree.
    pub fn dual_rank(&self, j: &Subset) -> Result<usize> {
        let n = self.ground_size();
        let complement_rank = self.rank(&j.complement(n))?;
        Ok(j.len() + complement_rank - self.rank_full)
    }

    /// The Tutte polynomial: the sum over all subsets `J` of
    /// `(x-1)^(rank(E)-rank(J)) (y-1)^(|J|-rank(J))`.
    pub fn tutte(&self) -> Result<BivariatePoly> {
        self.tutte_with(&EnumCaps::default())
    }

    pub fn tutte_with(&self, caps: &EnumCaps) -> Result<BivariatePoly> {
        self.harmonic_tutte_with(&HarmonicFunction::constant_one(self.ground_size()), caps)
    }

    /// The harmonic Tutte polynomial: the same sum with each subset
    /// weighted by `f~(J)`.
    ///
    /// Subsets with `|J| < d` or `|J| > n - d` have vanishing weight and
    /// are skipped.
    pub fn harmonic_tutte(&self, f: &HarmonicFunction) -> Result<BivariatePoly> {
        self.harmonic_tutte_with(f, &EnumCaps::default())
    }

    pub fn harmonic_tutte_with(
        &self,
        f: &HarmonicFunction,
        caps: &EnumCaps,
    ) -> Result<BivariatePoly> {
        let n = self.ground_size();
        if f.ground_size() != n {
            return Err(Error::GroundSizeMismatch {
                left: n,
                right: f.ground_size(),
            });
        }
        caps.check_ground(n)?;

        // accumulate rational coefficients per (corank, nullity) cell, then
        // expand each cell once
        let coranks = self.rank_full + 1;
        let nullities = n - self.rank_full + 1;
        let mut cells = vec![Rational::from_integer(0.into()); coranks * nullities];
        scan_weighted_subsets(&self.representation, f, &mut |size, rank, ext| {
            let corank = self.rank_full - rank;
            let nullity = size - rank;
            cells[corank * nullities + nullity] += ext;
        });

        let mut total = BivariatePoly::zero();
        use num_traits::Zero;
        for corank in 0..coranks {
            for nullity in 0..nullities {
                let c = &cells[corank * nullities + nullity];
                if !c.is_zero() {
                    total += &BivariatePoly::corank_nullity_term(corank, nullity).scale(c);
                }
            }
        }
        Ok(total)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harmonic::{harmonic_basis, SetFunction};
    use crate::linalg::PrimeField;
    use crate::scalar::rat;

    fn f2() -> PrimeField {
        PrimeField::new(2).unwrap()
    }

    fn matroid(rows: &[&[u64]], cols: usize) -> VectorMatroid {
        let rows: Vec<Vec<u64>> = rows.iter().map(|r| r.to_vec()).collect();
        VectorMatroid::new(FieldMatrix::from_rows(f2(), &rows, cols).unwrap())
    }

    fn sub(elems: &[usize], n: usize) -> Subset {
        Subset::new(elems.to_vec(), n).unwrap()
    }

    #[test]
    fn rank_examples() {
        let m = matroid(&[&[1, 1, 0]], 3);
        assert_eq!(m.rank(&Subset::empty()).unwrap(), 0);
        assert_eq!(m.rank(&sub(&[1, 2], 3)).unwrap(), 1);
        let id = VectorMatroid::new(FieldMatrix::identity(f2(), 2));
        assert_eq!(id.rank(&sub(&[1, 2], 2)).unwrap(), 2);
    }

    #[test]
    fn dual_examples() {
        // full-rank identity: dual has rank 0
        let id = VectorMatroid::new(FieldMatrix::identity(f2(), 2));
        assert_eq!(id.dual().full_rank(), 0);

        // repetition [1 1] is self-dual
        let rep = matroid(&[&[1, 1]], 2);
        let dual = rep.dual();
        assert_eq!(dual.full_rank(), 1);
        assert_eq!(dual.representation().row(0), &[1, 1]);

        // Hamming [7,4]: dual rank 3
        let ham = matroid(
            &[
                &[1, 0, 0, 0, 0, 1, 1],
                &[0, 1, 0, 0, 1, 0, 1],
                &[0, 0, 1, 0, 1, 1, 0],
                &[0, 0, 0, 1, 1, 1, 1],
            ],
            7,
        );
        assert_eq!(ham.dual().full_rank(), 3);
    }

    #[test]
    fn dual_rank_formula_examples() {
        let m = matroid(&[&[1, 1, 0]], 3);
        assert_eq!(m.dual_rank(&Subset::empty()).unwrap(), 0);
        assert_eq!(m.dual_rank(&sub(&[3], 3)).unwrap(), 1);
        assert_eq!(
            m.dual_rank(&sub(&[1, 2, 3], 3)).unwrap(),
            3 - m.full_rank()
        );
    }

    #[test]
    fn dual_rank_matches_dual_representation() {
        let m = matroid(&[&[1, 1, 0, 1], &[0, 1, 1, 1]], 4);
        let dual = m.dual();
        for mask in 0u64..16 {
            let j = Subset::from_mask(mask);
            assert_eq!(m.dual_rank(&j).unwrap(), dual.rank(&j).unwrap(), "J={j}");
        }
    }

    #[test]
    fn double_dual_restores_ranks() {
        let m = matroid(&[&[1, 0, 1, 1], &[0, 1, 1, 0]], 4);
        let dd = m.dual().dual();
        for mask in 0u64..16 {
            let j = Subset::from_mask(mask);
            assert_eq!(m.rank(&j).unwrap(), dd.rank(&j).unwrap());
        }
    }

    #[test]
    fn tutte_identity_matroid() {
        let id = VectorMatroid::new(FieldMatrix::identity(f2(), 2));
        assert_eq!(id.tutte().unwrap(), BivariatePoly::monomial(rat(1), 2, 0));
    }

    #[test]
    fn tutte_repetition() {
        let rep = matroid(&[&[1, 1]], 2);
        let t = rep.tutte().unwrap();
        let expect = &BivariatePoly::var_x() + &BivariatePoly::var_y();
        assert_eq!(t, expect);
    }

    #[test]
    fn harmonic_tutte_worked_example() {
        // G = [1 1 0], f = {1} - {3}: T(M, f) = x + y - xy
        let m = matroid(&[&[1, 1, 0]], 3);
        let mut f = SetFunction::new(3, 1).unwrap();
        f.set(sub(&[1], 3), rat(1));
        f.set(sub(&[3], 3), rat(-1));
        let f = HarmonicFunction::new(f).unwrap();
        let t = m.harmonic_tutte(&f).unwrap();

        let mut expect = BivariatePoly::zero();
        expect.add_term(rat(1), 1, 0);
        expect.add_term(rat(1), 0, 1);
        expect.add_term(rat(-1), 1, 1);
        assert_eq!(t, expect);
    }

    #[test]
    fn harmonic_tutte_constant_equals_tutte() {
        let m = matroid(&[&[1, 1, 0, 1], &[0, 1, 1, 1]], 4);
        let f = HarmonicFunction::constant_one(4);
        assert_eq!(m.harmonic_tutte(&f).unwrap(), m.tutte().unwrap());
    }

    #[test]
    fn harmonic_tutte_of_free_matroid_vanishes() {
        // with G = I_n every subset is independent, so the weighted sum
        // collapses to sums of f~ over fixed sizes, all zero for d >= 1
        for n in [4usize, 5] {
            let m = VectorMatroid::new(FieldMatrix::identity(f2(), n));
            for d in 1..=n / 2 {
                for f in harmonic_basis(n, d).unwrap() {
                    assert!(m.harmonic_tutte(&f).unwrap().is_zero(), "n={n} d={d}");
                }
            }
        }
    }

    #[test]
    fn ground_size_mismatch_rejected() {
        let m = matroid(&[&[1, 1]], 2);
        let f = HarmonicFunction::constant_one(3);
        assert!(matches!(
            m.harmonic_tutte(&f),
            Err(Error::GroundSizeMismatch { .. })
        ));
    }

    #[test]
    fn enumeration_cap_enforced() {
        let m = matroid(&[&[1, 1, 0]], 3);
        let caps = EnumCaps {
            max_ground: 2,
            max_words: 1 << 24,
        };
        assert!(matches!(
            m.tutte_with(&caps),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn tutte_at_one_one_counts_bases() {
        // count bases by brute force and compare with T(1,1)
        let m = matroid(&[&[1, 0, 1, 1], &[0, 1, 1, 1]], 4);
        let r = m.full_rank();
        let mut bases = 0u64;
        for mask in 0u64..16 {
            let j = Subset::from_mask(mask);
            if j.len() == r && m.rank(&j).unwrap() == r {
                bases += 1;
            }
        }
        let t = m.tutte().unwrap();
        assert_eq!(t.evaluate(&rat(1), &rat(1)), rat(bases as i64));
    }

    #[test]
    fn zero_row_matroid_tutte() {
        // rank-0 matroid on 3 elements: T = y^3
        let m = VectorMatroid::new(FieldMatrix::new(f2(), 0, 3, vec![]).unwrap());
        assert_eq!(m.tutte().unwrap(), BivariatePoly::monomial(rat(1), 0, 3));
    }

    #[test]
    fn empty_ground_set_tutte_is_one() {
        let m = VectorMatroid::new(FieldMatrix::new(f2(), 2, 0, vec![]).unwrap());
        assert_eq!(m.tutte().unwrap(), BivariatePoly::one());
    }
}
