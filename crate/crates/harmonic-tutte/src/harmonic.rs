//! Discrete harmonic functions on `d`-subsets of `{1..n}`.
//!
//! A degree-`d` set function assigns a rational value to every `d`-subset.
//! The differentiation operator sends it to the degree-`d-1` function
//! `(gamma f)(Y) = sum of f(Z) over Z containing Y`; the harmonic functions
//! of degree `d` are the kernel of that map. Their defining feature, used
//! everywhere downstream, is that the subset extension
//! `f~(X) = sum of f(Z) over d-subsets Z of X` vanishes whenever
//! `|X| < d` or `|X| > n - d`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::path::Path;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::linalg::RationalMatrix;
use crate::scalar::{binomial, parse_rational, rat, rational_string, sign, Rational};
use crate::subset::{k_subsets, Subset};
use crate::{Error, Result};

pub use crate::subset::k_subsets as enumerate_subsets;

/// A rational-valued function on the `d`-subsets of `{1..n}`.
///
/// Missing subsets have value 0; explicit zeros are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFunction {
    n: usize,
    d: usize,
    values: BTreeMap<Subset, Rational>,
}

impl SetFunction {
    pub fn new(n: usize, d: usize) -> Result<Self> {
        if d > n {
            return Err(Error::DegreeOutOfRange { d, n });
        }
        Ok(SetFunction {
            n,
            d,
            values: BTreeMap::new(),
        })
    }

    /// The degree-0 function with value 1 on the empty set. Its subset
    /// extension is identically 1, which recovers all the classical
    /// (unweighted) objects.
    pub fn constant_one(n: usize) -> Self {
        let mut f = SetFunction {
            n,
            d: 0,
            values: BTreeMap::new(),
        };
        f.set(Subset::empty(), rat(1));
        f
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn set(&mut self, subset: Subset, value: Rational) {
        assert_eq!(
            subset.len(),
            self.d,
            "subset size must equal the function degree"
        );
        assert!(subset.elements().last().copied().unwrap_or(0) <= self.n);
        if value.is_zero() {
            self.values.remove(&subset);
        } else {
            self.values.insert(subset, value);
        }
    }

    pub fn value(&self, subset: &Subset) -> Rational {
        self.values
            .get(subset)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Subset, &Rational)> {
        self.values.iter()
    }

    pub fn support_len(&self) -> usize {
        self.values.len()
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub(crate) fn values_by_mask(&self) -> HashMap<u64, Rational> {
        self.values
            .iter()
            .map(|(s, v)| (s.mask(), v.clone()))
            .collect()
    }

    /// The differentiation operator: maps degree `d` to degree `d - 1` via
    /// `(gamma f)(Y) = sum over Z with Y inside Z, |Z| = d, of f(Z)`.
    pub fn differentiate(&self) -> Result<SetFunction> {
        if self.d == 0 {
            return Err(Error::DifferentiateDegreeZero);
        }
        let mut out = SetFunction::new(self.n, self.d - 1)?;
        for (z, v) in &self.values {
            let elems = z.elements();
            for skip in 0..elems.len() {
                let y: Vec<usize> = elems
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != skip)
                    .map(|(_, &e)| e)
                    .collect();
                let y = Subset::new(y, self.n)?;
                let newv = out.value(&y) + v;
                out.set(y, newv);
            }
        }
        Ok(out)
    }

    /// The subset extension `f~(X)`: the sum of `f` over all `d`-subsets of
    /// `X`. Zero when `|X| < d`.
    pub fn extended(&self, x: &Subset) -> Rational {
        if x.len() < self.d {
            return Rational::zero();
        }
        let mut acc = Rational::zero();
        for (z, v) in &self.values {
            if z.is_subset_of(x) {
                acc += v;
            }
        }
        acc
    }

    /// The sliced sum over `d`-subsets meeting `j` in exactly `i` points.
    pub fn slice_sum(&self, j: &Subset, i: usize) -> Rational {
        let mut acc = Rational::zero();
        for (z, v) in &self.values {
            if z.intersection_size(j) == i {
                acc += v;
            }
        }
        acc
    }
}

impl fmt::Display for SetFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.values.is_empty() {
            return write!(f, "0");
        }
        use num_traits::{One, Signed};
        for (i, (s, v)) in self.values.iter().enumerate() {
            let negative = v.is_negative();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = v.abs();
            if s.is_empty() {
                write!(f, "{}", rational_string(&mag))?;
            } else if mag.is_one() {
                write!(f, "{s}")?;
            } else if mag.denom().is_one() {
                write!(f, "{}{s}", rational_string(&mag))?;
            } else {
                write!(f, "({}){s}", rational_string(&mag))?;
            }
        }
        Ok(())
    }
}

/// A set function certified to lie in the kernel of the differentiation
/// operator (checked at construction; degree 0 is vacuously harmonic).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HarmonicFunction {
    inner: SetFunction,
}

impl HarmonicFunction {
    pub fn new(f: SetFunction) -> Result<Self> {
        if f.d > 0 {
            let derivative = f.differentiate()?;
            if let Some((row, value)) = derivative.values.iter().next() {
                return Err(Error::NotHarmonic {
                    row: row.to_string(),
                    value: rational_string(value),
                });
            }
        }
        Ok(HarmonicFunction { inner: f })
    }

    pub fn constant_one(n: usize) -> Self {
        HarmonicFunction {
            inner: SetFunction::constant_one(n),
        }
    }

    pub fn as_set_function(&self) -> &SetFunction {
        &self.inner
    }

    pub fn ground_size(&self) -> usize {
        self.inner.n
    }

    pub fn degree(&self) -> usize {
        self.inner.d
    }

    pub fn extended(&self, x: &Subset) -> Rational {
        self.inner.extended(x)
    }

    pub fn slice_sum(&self, j: &Subset, i: usize) -> Rational {
        self.inner.slice_sum(j, i)
    }

    /// Serializes to the JSON file format accepted by [`load_harmonic`].
    pub fn to_json_string(&self) -> String {
        let entries = self
            .inner
            .values
            .iter()
            .map(|(s, v)| FileEntry {
                subset: s.elements().to_vec(),
                value: rational_string(v),
            })
            .collect();
        let file = HarmonicFile {
            n: self.inner.n,
            d: self.inner.d,
            entries,
        };
        serde_json::to_string(&file).expect("harmonic file serialization cannot fail")
    }
}

impl fmt::Display for HarmonicFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.inner.fmt(f)
    }
}

#[derive(Serialize, Deserialize)]
struct HarmonicFile {
    n: usize,
    d: usize,
    entries: Vec<FileEntry>,
}

#[derive(Serialize, Deserialize)]
struct FileEntry {
    subset: Vec<usize>,
    value: String,
}

/// Parses the harmonic-function JSON format and validates harmonicity.
///
/// Non-kernel inputs are rejected with a diagnostic naming a violated
/// derivative row.
pub fn parse_harmonic(text: &str) -> Result<HarmonicFunction> {
    let file: HarmonicFile =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("harmonic file: {e}")))?;
    let mut f = SetFunction::new(file.n, file.d)?;
    for entry in file.entries {
        let subset = Subset::new(entry.subset, file.n)?;
        if subset.len() != file.d {
            return Err(Error::Parse(format!(
                "entry {subset} has size {}, expected degree {}",
                subset.len(),
                file.d
            )));
        }
        if !f.value(&subset).is_zero() {
            return Err(Error::Parse(format!("duplicate entry for {subset}")));
        }
        f.set(subset, parse_rational(&entry.value)?);
    }
    HarmonicFunction::new(f)
}

pub fn load_harmonic(path: impl AsRef<Path>) -> Result<HarmonicFunction> {
    parse_harmonic(&std::fs::read_to_string(path)?)
}

/// Canonical basis of the space of degree-`d` harmonic functions, computed
/// as the exact rational kernel of the inclusion matrix between `(d-1)`- and
/// `d`-subsets. For `d = 0` the single constant function is returned.
pub fn harmonic_basis(n: usize, d: usize) -> Result<Vec<HarmonicFunction>> {
    if d > n {
        return Err(Error::DegreeOutOfRange { d, n });
    }
    if d == 0 {
        return Ok(vec![HarmonicFunction::constant_one(n)]);
    }
    let rows = k_subsets(n, d - 1)?;
    let cols = k_subsets(n, d)?;
    let mut incidence = RationalMatrix::zero(rows.len(), cols.len());
    for (i, y) in rows.iter().enumerate() {
        for (j, z) in cols.iter().enumerate() {
            if y.is_subset_of(z) {
                incidence.set(i, j, rat(1));
            }
        }
    }
    incidence
        .kernel_basis()
        .into_iter()
        .map(|coords| {
            let mut f = SetFunction::new(n, d)?;
            for (subset, coord) in cols.iter().zip(coords) {
                f.set(subset.clone(), coord);
            }
            HarmonicFunction::new(f)
        })
        .collect()
}

/// `dim Harm_d = C(n, d) - C(n, d-1)` for `1 <= d <= (n+1)/2`; the value the
/// kernel computation must reproduce.
pub fn expected_harmonic_dimension(n: usize, d: usize) -> Rational {
    if d == 0 {
        rat(1)
    } else {
        binomial(n, d) - binomial(n, d - 1)
    }
}

/// The scalar relating a sliced sum to the extension for harmonic `f`:
/// `f_slice(f, J, i) = (-1)^(d-i) C(d, i) f~(J)`.
pub fn slice_factor(d: usize, i: usize) -> Rational {
    sign(d - i) * binomial(d, i)
}
