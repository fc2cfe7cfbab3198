//! Exact bivariate polynomials in `x`, `y` over the rationals.
//!
//! This is the value domain of every enumerator and Tutte polynomial in the
//! crate. Coefficients are arbitrary-precision rationals on purpose: the
//! identities checked in [`crate::verify`] are exact polynomial equalities,
//! so the arithmetic must be too.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::scalar::{binomial, rational_string, sign, Rational};
use crate::{Error, Result};

/// Finitely supported map `(x-exponent, y-exponent) -> coefficient`.
///
/// Zero coefficients are never stored; the zero polynomial has no terms.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BivariatePoly {
    terms: BTreeMap<(usize, usize), Rational>,
}

/// One serialized polynomial term, in the wire format used by the CLI.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TermRecord {
    pub x: usize,
    pub y: usize,
    pub coeff: String,
}

impl BivariatePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Rational::one(), 0, 0)
    }

    pub fn monomial(coeff: Rational, x_exp: usize, y_exp: usize) -> Self {
        let mut p = Self::default();
        p.add_term(coeff, x_exp, y_exp);
        p
    }

    pub fn var_x() -> Self {
        Self::monomial(Rational::one(), 1, 0)
    }

    pub fn var_y() -> Self {
        Self::monomial(Rational::one(), 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, x_exp: usize, y_exp: usize) -> Rational {
        self.terms
            .get(&(x_exp, y_exp))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, coeff: Rational, x_exp: usize, y_exp: usize) {
        if coeff.is_zero() {
            return;
        }
        let entry = self
            .terms
            .entry((x_exp, y_exp))
            .or_insert_with(Rational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&(x_exp, y_exp));
        }
    }

    pub fn scale(&self, by: &Rational) -> Self {
        if by.is_zero() {
            return Self::zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|(k, v)| (*k, v * by))
            .collect();
        BivariatePoly { terms }
    }

    /// Terms in the canonical order: descending x-exponent, then ascending
    /// y-exponent.
    pub fn terms_canonical(&self) -> Vec<(usize, usize, &Rational)> {
        let mut out: Vec<(usize, usize, &Rational)> = self
            .terms
            .iter()
            .map(|(&(a, b), c)| (a, b, c))
            .collect();
        out.sort_by(|l, r| r.0.cmp(&l.0).then(l.1.cmp(&r.1)));
        out
    }

    pub fn term_records(&self) -> Vec<TermRecord> {
        self.terms_canonical()
            .into_iter()
            .map(|(x, y, c)| TermRecord {
                x,
                y,
                coeff: rational_string(c),
            })
            .collect()
    }

    /// `c * (x-y)^a * y^b`, expanded into monomials.
    pub fn shifted_term(c: &Rational, a: usize, b: usize) -> Self {
        let mut p = Self::zero();
        for i in 0..=a {
            // (x-y)^a = sum_i C(a,i) x^i (-y)^(a-i)
            p.add_term(c * binomial(a, i) * sign(a - i), i, a - i + b);
        }
        p
    }

    /// `(x-1)^a * (y-1)^b`, expanded. The building block of corank-nullity
    /// subset sums.
    pub fn corank_nullity_term(a: usize, b: usize) -> Self {
        let mut p = Self::zero();
        for i in 0..=a {
            for j in 0..=b {
                p.add_term(
                    binomial(a, i) * binomial(b, j) * sign(a - i + b - j),
                    i,
                    j,
                );
            }
        }
        p
    }

    pub fn evaluate(&self, x0: &Rational, y0: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (&(a, b), c) in &self.terms {
            acc += c * pow(x0, a) * pow(y0, b);
        }
        acc
    }

    /// Substitutes `x -> a*x + b*y`, `y -> c*x + d*y`, then multiplies by
    /// `scale`.
    pub fn substitute_linear(
        &self,
        a: &Rational,
        b: &Rational,
        c: &Rational,
        d: &Rational,
        scale: &Rational,
    ) -> Self {
        let max_x = self.terms.keys().map(|k| k.0).max().unwrap_or(0);
        let max_y = self.terms.keys().map(|k| k.1).max().unwrap_or(0);
        let img_x = linear_form_powers(a, b, max_x);
        let img_y = linear_form_powers(c, d, max_y);
        let mut out = Self::zero();
        for (&(ax, ay), coeff) in &self.terms {
            let prod = &img_x[ax] * &img_y[ay];
            out += &prod.scale(coeff);
        }
        out.scale(scale)
    }

    /// Swaps the roles of `x` and `y`.
    pub fn swap_xy(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(&(a, b), c)| ((b, a), c.clone()))
            .collect();
        BivariatePoly { terms }
    }

    /// Total degree shared by all terms, if any; `None` for the zero
    /// polynomial or a non-homogeneous one.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut iter = self.terms.keys();
        let first = iter.next()?;
        let deg = first.0 + first.1;
        iter.all(|k| k.0 + k.1 == deg).then_some(deg)
    }

    /// True when the polynomial is zero or homogeneous of exactly `deg`.
    pub fn is_homogeneous_of(&self, deg: usize) -> bool {
        self.is_zero() || self.homogeneous_degree() == Some(deg)
    }

    /// Exact quotient by `(xy)^d`; errors if some term lacks the factor.
    pub fn divide_by_xy_power(&self, d: usize) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (&(a, b), c) in &self.terms {
            if a < d || b < d {
                return Err(Error::NotDivisible {
                    power: d,
                    x_exp: a,
                    y_exp: b,
                });
            }
            terms.insert((a - d, b - d), c.clone());
        }
        Ok(BivariatePoly { terms })
    }
}

fn pow(base: &Rational, exp: usize) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// Powers `(a*x + b*y)^0 ..= (a*x + b*y)^max` by the binomial theorem.
fn linear_form_powers(a: &Rational, b: &Rational, max: usize) -> Vec<BivariatePoly> {
    (0..=max)
        .map(|e| {
            let mut p = BivariatePoly::zero();
            for i in 0..=e {
                p.add_term(binomial(e, i) * pow(a, i) * pow(b, e - i), i, e - i);
            }
            p
        })
        .collect()
}

impl Add for &BivariatePoly {
    type Output = BivariatePoly;
    fn add(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&BivariatePoly> for BivariatePoly {
    fn add_assign(&mut self, rhs: &BivariatePoly) {
        for (&(a, b), c) in &rhs.terms {
            self.add_term(c.clone(), a, b);
        }
    }
}

impl Sub for &BivariatePoly {
    type Output = BivariatePoly;
    fn sub(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = self.clone();
        for (&(a, b), c) in &rhs.terms {
            out.add_term(-c.clone(), a, b);
        }
        out
    }
}

impl Neg for &BivariatePoly {
    type Output = BivariatePoly;
    fn neg(self) -> BivariatePoly {
        let terms = self
            .terms
            .iter()
            .map(|(&k, c)| (k, -c.clone()))
            .collect();
        BivariatePoly { terms }
    }
}

impl Mul for &BivariatePoly {
    type Output = BivariatePoly;
    fn mul(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = BivariatePoly::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term(c1 * c2, a1 + a2, b1 + b2);
            }
        }
        out
    }
}

impl fmt::Display for BivariatePoly {
    /// Human form in canonical term order, e.g.
    /// `x^7 + 7x^4y^3 + 7x^3y^4 + y^7`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (a, b, c)) in self.terms_canonical().into_iter().enumerate() {
            let negative = c.is_negative();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            let vars = |f: &mut fmt::Formatter<'_>| -> fmt::Result {
                match a {
                    0 => {}
                    1 => write!(f, "x")?,
                    _ => write!(f, "x^{a}")?,
                }
                match b {
                    0 => {}
                    1 => write!(f, "y")?,
                    _ => write!(f, "y^{b}")?,
                }
                Ok(())
            };
            if a == 0 && b == 0 {
                write!(f, "{}", rational_string(&mag))?;
            } else if mag.is_one() {
                vars(f)?;
            } else if mag.denom().is_one() {
                write!(f, "{}", rational_string(&mag))?;
                vars(f)?;
            } else {
                write!(f, "({})", rational_string(&mag))?;
                vars(f)?;
            }
        }
        Ok(())
    }
}
