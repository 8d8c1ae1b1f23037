//! Prime fields F_q used as the carrier for smoothness certificates.

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::ring::{is_prime_u64, Field, Rational, Ring};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct PrimeFieldElement {
    q: u64,
    value: u64,
}

impl PrimeFieldElement {
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.q
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    q: u64,
}

impl PrimeField {
    pub fn new(q: u64) -> Result<Self> {
        if !is_prime_u64(q) {
            return Err(Error::InvalidConductor(format!("{q} is not prime")));
        }
        // keep q*q below u64 overflow for schoolbook products
        if q >= 1 << 31 {
            return Err(Error::InvalidConductor(format!("{q} too large for F_q kernel")));
        }
        Ok(PrimeField { q })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn elem(&self, v: i64) -> PrimeFieldElement {
        PrimeFieldElement {
            q: self.q,
            value: v.rem_euclid(self.q as i64) as u64,
        }
    }

    pub fn elem_u64(&self, v: u64) -> PrimeFieldElement {
        PrimeFieldElement {
            q: self.q,
            value: v % self.q,
        }
    }

    /// Image of a rational with denominator coprime to q.
    pub fn reduce_rational(&self, x: &Rational) -> Result<PrimeFieldElement> {
        let q_big = num_bigint::BigInt::from(self.q);
        let den = x.denom().mod_floor(&q_big);
        let den_u = den.to_u64().expect("residue fits");
        if den_u == 0 {
            return Err(Error::BadReduction(format!(
                "denominator of {x} is divisible by {}",
                self.q
            )));
        }
        let num = x.numer().mod_floor(&q_big).to_u64().expect("residue fits");
        let inv = self
            .inverse(&self.elem_u64(den_u))
            .expect("nonzero residue is invertible");
        Ok(self.mul(&self.elem_u64(num), &inv))
    }

    pub fn pow(&self, a: &PrimeFieldElement, mut k: u64) -> PrimeFieldElement {
        let mut base = *a;
        let mut acc = self.one();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            k >>= 1;
        }
        acc
    }
}

impl Ring for PrimeField {
    type Elem = PrimeFieldElement;

    fn zero(&self) -> PrimeFieldElement {
        self.elem_u64(0)
    }
    fn one(&self) -> PrimeFieldElement {
        self.elem_u64(1 % self.q)
    }
    fn is_zero(&self, a: &PrimeFieldElement) -> bool {
        a.value == 0
    }
    fn add(&self, a: &PrimeFieldElement, b: &PrimeFieldElement) -> PrimeFieldElement {
        self.elem_u64(a.value + b.value)
    }
    fn sub(&self, a: &PrimeFieldElement, b: &PrimeFieldElement) -> PrimeFieldElement {
        self.elem_u64(a.value + self.q - b.value)
    }
    fn neg(&self, a: &PrimeFieldElement) -> PrimeFieldElement {
        self.elem_u64(self.q - a.value)
    }
    fn mul(&self, a: &PrimeFieldElement, b: &PrimeFieldElement) -> PrimeFieldElement {
        self.elem_u64(a.value * b.value)
    }
    fn from_int(&self, n: i64) -> PrimeFieldElement {
        self.elem(n)
    }
    fn render(&self, a: &PrimeFieldElement) -> String {
        a.value.to_string()
    }
}

impl Field for PrimeField {
    fn inverse(&self, a: &PrimeFieldElement) -> Option<PrimeFieldElement> {
        if a.value == 0 {
            None
        } else {
            // Fermat: a^(q-2)
            Some(self.pow(a, self.q - 2))
        }
    }
}

/// Residue of a rational mod q, as plain u64 (convenience for scan kernels).
pub fn rational_mod(x: &Rational, field: &PrimeField) -> Result<u64> {
    Ok(field.reduce_rational(x)?.value())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rational;

    #[test]
    fn basic_arithmetic() {
        let f = PrimeField::new(29).unwrap();
        let a = f.elem(17);
        let b = f.elem(20);
        assert_eq!(f.add(&a, &b).value(), 8);
        assert_eq!(f.mul(&a, &b).value(), (17 * 20) % 29);
        let inv = f.inverse(&a).unwrap();
        assert_eq!(f.mul(&a, &inv), f.one());
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(91).is_err());
    }

    #[test]
    fn rational_reduction_matches_field_ops() {
        let f = PrimeField::new(29).unwrap();
        // (3/4 + 5/7) mod 29 must equal 3*4^-1 + 5*7^-1 mod 29
        let x = rational(3, 4);
        let y = rational(5, 7);
        let lhs = f.reduce_rational(&(x.clone() + y.clone())).unwrap();
        let rhs = f.add(&f.reduce_rational(&x).unwrap(), &f.reduce_rational(&y).unwrap());
        assert_eq!(lhs, rhs);
        assert!(f.reduce_rational(&rational(1, 29)).is_err());
    }
}
