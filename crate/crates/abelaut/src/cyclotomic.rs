//! Exact arithmetic in the cyclotomic field ℚ(ζ_p) for an odd prime p.
//!
//! Elements are stored on the power basis 1, ζ, …, ζ^{p−2} with eager
//! reduction modulo 1 + ζ + ⋯ + ζ^{p−1} = 0, so equality is coefficient
//! equality and every op returns a canonical representative.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ring::{format_rational, is_prime_u64, parse_rational, Field, Rational, Ring};

pub const DEFAULT_CONDUCTOR_BOUND: u64 = 31;

/// Element of ℚ(ζ_p): Σ coeffs[i]·ζ^i for 0 ≤ i ≤ p−2.
#[derive(Clone, PartialEq, Debug)]
pub struct CyclotomicNumber {
    p: u64,
    coeffs: Vec<Rational>,
}

impl CyclotomicNumber {
    pub fn conductor(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }
}

/// The field ℚ(ζ_p), acting as a ring object over `CyclotomicNumber`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CyclotomicField {
    p: u64,
}

impl CyclotomicField {
    pub fn new(p: u64) -> Result<Self> {
        Self::with_bound(p, DEFAULT_CONDUCTOR_BOUND)
    }

    pub fn with_bound(p: u64, bound: u64) -> Result<Self> {
        if !is_prime_u64(p) || p == 2 {
            return Err(Error::InvalidConductor(format!("{p} is not an odd prime")));
        }
        if p > bound {
            return Err(Error::InvalidConductor(format!(
                "conductor {p} exceeds the configured bound {bound}"
            )));
        }
        Ok(CyclotomicField { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    fn degree(&self) -> usize {
        (self.p - 1) as usize
    }

    /// Canonical representative of Σ raw[e]·ζ^e for a raw vector of any length.
    pub fn normalize(&self, raw: &[Rational]) -> CyclotomicNumber {
        let n = self.degree();
        let mut out = vec![Rational::zero(); n];
        for (e, c) in raw.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let r = e % self.p as usize;
            if r == n {
                // ζ^{p−1} = −(1 + ζ + ⋯ + ζ^{p−2})
                for slot in out.iter_mut() {
                    *slot -= c;
                }
            } else {
                out[r] += c;
            }
        }
        CyclotomicNumber { p: self.p, coeffs: out }
    }

    pub fn from_rational(&self, x: Rational) -> CyclotomicNumber {
        let mut coeffs = vec![Rational::zero(); self.degree()];
        coeffs[0] = x;
        CyclotomicNumber { p: self.p, coeffs }
    }

    /// ζ_p^k (k may be any integer, reduced mod p).
    pub fn zeta_pow(&self, k: i64) -> CyclotomicNumber {
        let p = self.p as i64;
        let r = k.rem_euclid(p) as usize;
        let mut raw = vec![Rational::zero(); r + 1];
        raw[r] = Rational::one();
        self.normalize(&raw)
    }

    pub fn zeta(&self) -> CyclotomicNumber {
        self.zeta_pow(1)
    }

    fn check(&self, a: &CyclotomicNumber) {
        assert_eq!(a.p, self.p, "conductor mismatch: {} vs {}", a.p, self.p);
    }

    pub fn pow(&self, a: &CyclotomicNumber, mut k: u64) -> CyclotomicNumber {
        let mut base = a.clone();
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

    /// Minimal k with x^k = 1, if x is a root of unity. In ℚ(ζ_p) the only
    /// torsion units are ±ζ_p^j, so k divides 2p.
    pub fn root_of_unity_order(&self, x: &CyclotomicNumber) -> Option<u64> {
        self.check(x);
        let one = self.one();
        for k in [1, 2, self.p, 2 * self.p] {
            if self.pow(x, k) == one {
                return Some(k);
            }
        }
        None
    }
}

/// Spec-level entry point: canonicalize a raw coefficient vector in ℚ(ζ_p).
pub fn cyclo_normalize(p: u64, raw: &[Rational]) -> Result<CyclotomicNumber> {
    Ok(CyclotomicField::new(p)?.normalize(raw))
}

/// Minimal order of `x` as a root of unity, or `None`.
pub fn is_root_of_unity(x: &CyclotomicNumber) -> Option<u64> {
    let field = CyclotomicField::new(x.p).expect("element carries a valid conductor");
    field.root_of_unity_order(x)
}

impl Ring for CyclotomicField {
    type Elem = CyclotomicNumber;

    fn zero(&self) -> CyclotomicNumber {
        self.from_rational(Rational::zero())
    }

    fn one(&self) -> CyclotomicNumber {
        self.from_rational(Rational::one())
    }

    fn is_zero(&self, a: &CyclotomicNumber) -> bool {
        self.check(a);
        a.coeffs.iter().all(|c| c.is_zero())
    }

    fn add(&self, a: &CyclotomicNumber, b: &CyclotomicNumber) -> CyclotomicNumber {
        self.check(a);
        self.check(b);
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(x, y)| x + y)
            .collect();
        CyclotomicNumber { p: self.p, coeffs }
    }

    fn sub(&self, a: &CyclotomicNumber, b: &CyclotomicNumber) -> CyclotomicNumber {
        self.check(a);
        self.check(b);
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(x, y)| x - y)
            .collect();
        CyclotomicNumber { p: self.p, coeffs }
    }

    fn neg(&self, a: &CyclotomicNumber) -> CyclotomicNumber {
        self.check(a);
        CyclotomicNumber {
            p: self.p,
            coeffs: a.coeffs.iter().map(|c| -c).collect(),
        }
    }

    fn mul(&self, a: &CyclotomicNumber, b: &CyclotomicNumber) -> CyclotomicNumber {
        self.check(a);
        self.check(b);
        let n = self.degree();
        let mut conv = vec![Rational::zero(); 2 * n - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                conv[i + j] += x * y;
            }
        }
        self.normalize(&conv)
    }

    fn from_int(&self, n: i64) -> CyclotomicNumber {
        self.from_rational(Rational::from_integer(n.into()))
    }

    fn render(&self, a: &CyclotomicNumber) -> String {
        render_cyclotomic(a)
    }

    fn renders_atomically(&self, a: &CyclotomicNumber) -> bool {
        let nonzero = a.coeffs.iter().filter(|c| !c.is_zero()).count();
        match nonzero {
            0 => true,
            1 => {
                let (i, c) = a
                    .coeffs
                    .iter()
                    .enumerate()
                    .find(|(_, c)| !c.is_zero())
                    .expect("nonzero term present");
                !c.is_negative() && (i == 0 || c.is_one())
            }
            _ => false,
        }
    }
}

impl Field for CyclotomicField {
    /// Inverse by the extended Euclidean algorithm in ℚ[x] against Φ_p.
    fn inverse(&self, a: &CyclotomicNumber) -> Option<CyclotomicNumber> {
        self.check(a);
        if self.is_zero(a) {
            return None;
        }
        let phi = vec![Rational::one(); self.p as usize]; // 1 + x + ... + x^{p-1}
        let (g, _, t) = poly_ext_gcd(&phi, &a.coeffs);
        // gcd of Φ_p and a nonzero lower-degree poly is a nonzero constant
        debug_assert_eq!(poly_degree(&g), Some(0));
        let scale = g[0].recip();
        let inv: Vec<Rational> = t.iter().map(|c| c * &scale).collect();
        Some(self.normalize(&inv))
    }
}

impl std::fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&render_cyclotomic(self))
    }
}

/// Text form "a0 + a1*z + a2*z^2 + ..." with z = ζ_p; omitted zero terms,
/// unit coefficients elided, "-" joins negative terms.
pub fn render_cyclotomic(x: &CyclotomicNumber) -> String {
    let mut out = String::new();
    for (i, c) in x.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let coeff_part = if i == 0 || !mag.is_one() {
            Some(format_rational(&mag))
        } else {
            None
        };
        match (coeff_part, i) {
            (Some(cs), 0) => out.push_str(&cs),
            (Some(cs), 1) => out.push_str(&format!("{cs}*z")),
            (Some(cs), _) => out.push_str(&format!("{cs}*z^{i}")),
            (None, 1) => out.push('z'),
            (None, _) => out.push_str(&format!("z^{i}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Parse the `render_cyclotomic` grammar back into a canonical element.
pub fn parse_cyclotomic(p: u64, input: &str) -> Result<CyclotomicNumber> {
    let field = CyclotomicField::new(p)?;
    let text = input.replace('\u{2212}', "-");
    let mut raw: Vec<Rational> = vec![Rational::zero(); p as usize];
    let mut pos = 0usize;
    let bytes = text.as_bytes();
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    skip_ws(&mut pos);
    if pos == bytes.len() {
        return Err(Error::parse(pos, "empty cyclotomic literal"));
    }
    let mut first = true;
    while pos < bytes.len() {
        let mut sign = Rational::one();
        skip_ws(&mut pos);
        if !first {
            match bytes.get(pos) {
                Some(b'+') => pos += 1,
                Some(b'-') => {
                    sign = -sign;
                    pos += 1;
                }
                _ => return Err(Error::parse(pos, "expected '+' or '-' between terms")),
            }
            skip_ws(&mut pos);
        } else if bytes.get(pos) == Some(&b'-') {
            sign = -sign;
            pos += 1;
            skip_ws(&mut pos);
        }
        first = false;

        // optional coefficient
        let start = pos;
        while pos < bytes.len() && (bytes[pos].is_ascii_digit() || bytes[pos] == b'/') {
            pos += 1;
        }
        let coeff = if pos > start {
            let s = &text[start..pos];
            parse_rational(s).map_err(|_| Error::parse(start, format!("bad coefficient {s:?}")))?
        } else {
            Rational::one()
        };
        skip_ws(&mut pos);
        let explicit_star = bytes.get(pos) == Some(&b'*');
        if explicit_star {
            pos += 1;
            skip_ws(&mut pos);
        }
        let exp: usize = if bytes.get(pos) == Some(&b'z') {
            pos += 1;
            if bytes.get(pos) == Some(&b'^') {
                pos += 1;
                let estart = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                if pos == estart {
                    return Err(Error::parse(pos, "expected exponent after '^'"));
                }
                text[estart..pos]
                    .parse()
                    .map_err(|e| Error::parse(estart, format!("bad exponent: {e}")))?
            } else {
                1
            }
        } else {
            if explicit_star {
                return Err(Error::parse(pos, "expected 'z' after '*'"));
            }
            if pos == start {
                return Err(Error::parse(pos, "expected coefficient or 'z'"));
            }
            0
        };
        if exp >= p as usize {
            return Err(Error::parse(pos, format!("exponent {exp} not below p = {p}")));
        }
        raw[exp] += sign * coeff;
        skip_ws(&mut pos);
    }
    Ok(field.normalize(&raw))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rational;

    fn f7() -> CyclotomicField {
        CyclotomicField::new(7).unwrap()
    }

    #[test]
    fn rejects_bad_conductors() {
        assert!(CyclotomicField::new(2).is_err());
        assert!(CyclotomicField::new(6).is_err());
        assert!(CyclotomicField::new(37).is_err()); // above default bound
        assert!(CyclotomicField::with_bound(37, 37).is_ok());
        assert!(cyclo_normalize(4, &[]).is_err());
    }

    #[test]
    fn zeta_power_seven_is_one() {
        let field = f7();
        let mut raw = vec![Rational::zero(); 8];
        raw[7] = Rational::one();
        let x = field.normalize(&raw);
        assert_eq!(x, field.one());
    }

    #[test]
    fn full_sum_is_zero() {
        let field = f7();
        let raw = vec![Rational::one(); 7];
        assert!(field.is_zero(&field.normalize(&raw)));
    }

    #[test]
    fn top_power_eliminated() {
        let field = f7();
        let x = field.zeta_pow(6);
        let expected: Vec<Rational> = (0..6).map(|_| rational(-1, 1)).collect();
        assert_eq!(x.coeffs(), &expected[..]);
    }

    #[test]
    fn normalize_idempotent_and_relations_all_supported_p() {
        for p in [3u64, 5, 7, 11, 13, 31] {
            let field = CyclotomicField::new(p).unwrap();
            let mut raw = vec![Rational::zero(); p as usize + 1];
            raw[p as usize] = Rational::one();
            assert_eq!(field.normalize(&raw), field.one(), "zeta^p at p={p}");
            let all = vec![Rational::one(); p as usize];
            assert!(field.is_zero(&field.normalize(&all)), "sum relation at p={p}");
            let x = field.normalize(&raw);
            assert_eq!(field.normalize(x.coeffs()), x, "idempotence at p={p}");
        }
    }

    #[test]
    fn root_of_unity_orders() {
        let field = f7();
        assert_eq!(field.root_of_unity_order(&field.one()), Some(1));
        assert_eq!(field.root_of_unity_order(&field.zeta()), Some(7));
        assert_eq!(field.root_of_unity_order(&field.from_int(2)), None);
        assert_eq!(field.root_of_unity_order(&field.from_int(-1)), Some(2));
        let minus_zeta = field.neg(&field.zeta());
        assert_eq!(field.root_of_unity_order(&minus_zeta), Some(14));
        assert_eq!(is_root_of_unity(&field.zeta_pow(3)), Some(7));
    }

    #[test]
    fn inverse_of_nontrivial_element() {
        let field = f7();
        let x = field.add(&field.zeta_pow(2), &field.from_int(3));
        let inv = field.inverse(&x).unwrap();
        assert_eq!(field.mul(&x, &inv), field.one());
        assert!(field.inverse(&field.zero()).is_none());
    }

    #[test]
    fn render_parse_round_trip() {
        let field = f7();
        let cases = [
            field.zero(),
            field.one(),
            field.zeta(),
            field.neg(&field.zeta_pow(5)),
            field.add(
                &field.from_rational(rational(-3, 2)),
                &field.mul(&field.from_int(2), &field.zeta_pow(4)),
            ),
        ];
        for x in &cases {
            let text = render_cyclotomic(x);
            let back = parse_cyclotomic(7, &text).unwrap();
            assert_eq!(&back, x, "round trip failed for {text:?}");
        }
        assert_eq!(render_cyclotomic(&field.zeta()), "z");
        assert_eq!(
            render_cyclotomic(&field.neg(&field.zeta_pow(6))),
            "1 + z + z^2 + z^3 + z^4 + z^5"
        );
    }

    #[test]
    fn parse_rejects_malformed() {
        assert!(parse_cyclotomic(7, "").is_err());
        assert!(parse_cyclotomic(7, "z^").is_err());
        assert!(parse_cyclotomic(7, "2**z").is_err());
        assert!(parse_cyclotomic(7, "z^9").is_err());
        assert!(parse_cyclotomic(7, "+ +").is_err());
    }
}

// ---- small univariate helpers over ℚ used by the inverse ----

fn poly_degree(a: &[Rational]) -> Option<usize> {
    a.iter().rposition(|c| !c.is_zero())
}

fn poly_trim(mut a: Vec<Rational>) -> Vec<Rational> {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

fn poly_divrem(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let dd = poly_degree(den).expect("division by zero polynomial");
    let lead = den[dd].clone();
    let mut rem = num.to_vec();
    let mut quo = vec![Rational::zero(); num.len().saturating_sub(dd)];
    while let Some(dr) = poly_degree(&rem) {
        if dr < dd {
            break;
        }
        let factor = &rem[dr] / &lead;
        let shift = dr - dd;
        quo[shift] = factor.clone();
        for (i, c) in den.iter().enumerate() {
            let delta = c * &factor;
            rem[i + shift] -= delta;
        }
    }
    (poly_trim(quo), poly_trim(rem))
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    poly_trim(out)
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out = vec![Rational::zero(); n];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    poly_trim(out)
}

/// Returns (g, s, t) with g = gcd(a, b) and s·a + t·b = g.
fn poly_ext_gcd(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>, Vec<Rational>) {
    let mut r0 = poly_trim(a.to_vec());
    let mut r1 = poly_trim(b.to_vec());
    let mut s0 = vec![Rational::one()];
    let mut s1: Vec<Rational> = vec![];
    let mut t0: Vec<Rational> = vec![];
    let mut t1 = vec![Rational::one()];
    while poly_degree(&r1).is_some() {
        let (q, r) = poly_divrem(&r0, &r1);
        let s = poly_sub(&s0, &poly_mul(&q, &s1));
        let t = poly_sub(&t0, &poly_mul(&q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    (r0, s0, t0)
}
