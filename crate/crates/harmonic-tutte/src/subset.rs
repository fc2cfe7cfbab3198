//! Subsets of the ground set `{1..n}`.
//!
//! Ground-set elements are 1-based throughout the crate; bit `i` of a mask
//! corresponds to element `i + 1`.

use std::fmt;

use crate::{Error, Result};

/// A sorted set of 1-based ground-set indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subset {
    elements: Vec<usize>,
}

impl Subset {
    /// Builds a subset of `{1..n}`, validating range, order, and distinctness.
    pub fn new(elements: impl Into<Vec<usize>>, n: usize) -> Result<Self> {
        let mut elements = elements.into();
        elements.sort_unstable();
        for window in elements.windows(2) {
            if window[0] == window[1] {
                return Err(Error::Parse(format!("repeated element {}", window[0])));
            }
        }
        if let Some(&last) = elements.last() {
            if elements[0] == 0 || last > n {
                return Err(Error::ColumnOutOfRange {
                    index: if elements[0] == 0 { 0 } else { last },
                    cols: n,
                });
            }
        }
        Ok(Subset { elements })
    }

    pub fn empty() -> Self {
        Subset {
            elements: Vec::new(),
        }
    }

    pub fn from_mask(mask: u64) -> Self {
        let mut elements = Vec::with_capacity(mask.count_ones() as usize);
        let mut m = mask;
        while m != 0 {
            let bit = m.trailing_zeros() as usize;
            elements.push(bit + 1);
            m &= m - 1;
        }
        Subset { elements }
    }

    pub fn mask(&self) -> u64 {
        self.elements.iter().map(|&e| 1u64 << (e - 1)).sum()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn contains(&self, element: usize) -> bool {
        self.elements.binary_search(&element).is_ok()
    }

    /// `{1..n} \ self`.
    pub fn complement(&self, n: usize) -> Self {
        let elements = (1..=n).filter(|e| !self.contains(*e)).collect();
        Subset { elements }
    }

    pub fn intersection_size(&self, other: &Subset) -> usize {
        let (mut i, mut j, mut count) = (0, 0, 0);
        while i < self.elements.len() && j < other.elements.len() {
            match self.elements[i].cmp(&other.elements[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    count += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        count
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.intersection_size(other) == self.len()
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// All `C(n, d)` subsets of `{1..n}` of size `d`, in lexicographic order of
/// their element lists.
pub fn k_subsets(n: usize, d: usize) -> Result<Vec<Subset>> {
    if d > n {
        return Err(Error::DegreeOutOfRange { d, n });
    }
    let mut out = Vec::new();
    let mut current: Vec<usize> = (1..=d).collect();
    loop {
        out.push(Subset {
            elements: current.clone(),
        });
        // advance to the next combination in lex order
        let mut i = d;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if current[i] < n - (d - 1 - i) {
                current[i] += 1;
                for j in i + 1..d {
                    current[j] = current[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Calls `visit` with the mask of every size-`r` subset of `elements`
/// (given as 1-based indices).
pub(crate) fn for_each_combination_mask(elements: &[usize], r: usize, visit: &mut impl FnMut(u64)) {
    fn rec(elements: &[usize], r: usize, start: usize, acc: u64, visit: &mut impl FnMut(u64)) {
        if r == 0 {
            visit(acc);
            return;
        }
        for i in start..=elements.len().saturating_sub(r) {
            rec(
                elements,
                r - 1,
                i + 1,
                acc | (1u64 << (elements[i] - 1)),
                visit,
            );
        }
    }
    if r <= elements.len() {
        rec(elements, r, 0, 0, visit);
    }
}
