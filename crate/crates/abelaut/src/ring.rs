//! Ring-object traits for pluggable exact coefficient arithmetic.
//!
//! A ring is a small value (field modulus, cyclotomic conductor, polynomial
//! arity) whose methods operate on its element type. This keeps elements as
//! plain data and lets the same polynomial code run over ℚ, ℚ(ζ_p), F_q, or
//! a polynomial ring used for symbolic identities.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub trait Ring: Clone + std::fmt::Debug {
    type Elem: Clone + PartialEq + std::fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn from_int(&self, n: i64) -> Self::Elem;
    /// Canonical text form of an element.
    fn render(&self, a: &Self::Elem) -> String;
    /// Whether the rendered form can stand as a factor without parentheses.
    fn renders_atomically(&self, _a: &Self::Elem) -> bool {
        true
    }
}

pub trait Field: Ring {
    /// Multiplicative inverse; `None` for zero.
    fn inverse(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inverse(b).map(|ib| self.mul(a, &ib))
    }
}

/// The rational field ℚ with arbitrary-precision reduced fractions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct RationalField;

impl Ring for RationalField {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn from_int(&self, n: i64) -> Rational {
        Rational::from(BigInt::from(n))
    }
    fn render(&self, a: &Rational) -> String {
        format_rational(a)
    }
    fn renders_atomically(&self, a: &Rational) -> bool {
        !a.is_negative()
    }
}

impl Field for RationalField {
    fn inverse(&self, a: &Rational) -> Option<Rational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
}

pub fn rational_from_i64(n: i64) -> Rational {
    Rational::from(BigInt::from(n))
}

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Render as "a" or "a/b" with the sign on the numerator.
pub fn format_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parse "a" or "a/b" (ASCII '-' or U+2212 minus). Round-trips `format_rational`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let cleaned = s.trim().replace('\u{2212}', "-");
    if cleaned.is_empty() {
        return Err(Error::parse(0, "empty rational"));
    }
    let (num_str, den_str) = match cleaned.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (cleaned.as_str(), None),
    };
    let numer: BigInt = num_str
        .parse()
        .map_err(|e| Error::parse(0, format!("bad numerator {num_str:?}: {e}")))?;
    let denom: BigInt = match den_str {
        Some(d) => d
            .parse()
            .map_err(|e| Error::parse(0, format!("bad denominator {d:?}: {e}")))?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(Error::parse(0, "zero denominator"));
    }
    Ok(Rational::new(numer, denom))
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_round_trip() {
        for s in ["0", "-3", "5/7", "-22/113", "100000000000000000001/3"] {
            let x = parse_rational(s).unwrap();
            assert_eq!(format_rational(&x), s);
        }
    }

    #[test]
    fn rational_normalizes() {
        let x = parse_rational("4/-6").unwrap();
        assert_eq!(format_rational(&x), "-2/3");
        let y = parse_rational("\u{2212}1/2").unwrap();
        assert_eq!(format_rational(&y), "-1/2");
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_rational("").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1/2/3").is_err());
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..60).filter(|&n| is_prime_u64(n)).collect();
        assert_eq!(
            primes,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
    }
}
