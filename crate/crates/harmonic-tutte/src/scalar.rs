//! The exact coefficient domain: arbitrary-precision rationals.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Every polynomial coefficient and harmonic-function value in this crate.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `p^e` as a rational, for prime-power style scale factors.
pub fn rat_pow(base: u64, exp: usize) -> Rational {
    Rational::from_integer(BigInt::from(base).pow(exp as u32))
}

/// Binomial coefficient `C(n, k)` as a rational.
pub fn binomial(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k.min(n - k) {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Rational::from_integer(acc)
}

/// `(-1)^e`.
pub fn sign(e: usize) -> Rational {
    if e % 2 == 0 {
        rat(1)
    } else {
        rat(-1)
    }
}

/// Parses a rational from `"p"` or `"p/q"` notation.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(num, den))
}

/// Canonical `"p"` / `"p/q"` string (lowest terms, positive denominator).
pub fn rational_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else if r.denom().is_negative() {
        // num-rational keeps denominators positive, but stay defensive on
        // values built via new_raw elsewhere.
        format!("{}/{}", -r.numer(), -r.denom())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print_round_trip() {
        for s in ["0", "7", "-3", "1/2", "-5/8"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(rational_string(&r), s);
        }
    }

    #[test]
    fn parse_reduces_to_lowest_terms() {
        assert_eq!(rational_string(&parse_rational("6/4").unwrap()), "3/2");
        assert_eq!(rational_string(&parse_rational("3/-6").unwrap()), "-1/2");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a/b").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn binomial_matches_pascal() {
        for n in 0..12usize {
            for k in 0..=n {
                let lhs = binomial(n, k);
                let rhs = if k == 0 || k == n {
                    rat(1)
                } else {
                    binomial(n - 1, k - 1) + binomial(n - 1, k)
                };
                assert_eq!(lhs, rhs);
            }
        }
        assert_eq!(binomial(5, 7), rat(0));
    }
}
