//! Exact base fields: the rationals, prime fields GF(p) and extensions GF(p^k).
//!
//! A [`FieldSpec`] carries the field data (characteristic, extension degree,
//! modulus polynomial) and acts as the arithmetic context: all scalar
//! operations are methods on the spec. Finite-field scalars are packed into a
//! single `u64` as base-p digit vectors, rationals use arbitrary-precision
//! fractions, so every operation is exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

use crate::prng::SplitMix64;

/// Largest supported extension degree. Modulus irreducibility is checked by
/// trial division, which stays cheap up to degree 8 over small primes.
pub const MAX_EXTENSION_DEGREE: u32 = 8;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("characteristic {0} is not prime")]
    NotPrime(u64),
    #[error("characteristic {0} too large (limit {1})")]
    CharacteristicTooLarge(u64, u64),
    #[error("extension degree {0} out of range 2..={MAX_EXTENSION_DEGREE}")]
    BadDegree(u32),
    #[error("modulus must have degree+1 coefficients and unit leading coefficient")]
    BadModulus,
    #[error("modulus is reducible over GF({0}): divisible by a degree-{1} factor")]
    ReducibleModulus(u64, usize),
    #[error("modulus verification infeasible for this field size")]
    ModulusCheckTooLarge,
    #[error("cannot parse scalar `{0}`: {1}")]
    ScalarParse(String, String),
    #[error("operation requires positive characteristic")]
    CharacteristicZero,
    #[error("no irreducible polynomial found for requested extension")]
    NoExtensionFound,
}

/// An exact base field: `characteristic == 0` means the rationals, otherwise
/// GF(p) when `degree == 1` and GF(p^k) with an explicit monic irreducible
/// modulus when `degree > 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    characteristic: u64,
    degree: u32,
    /// `degree+1` coefficients of a monic irreducible polynomial over GF(p),
    /// constant term first. Present iff `degree > 1`.
    modulus: Option<Vec<u64>>,
}

/// A scalar in some [`FieldSpec`]. The owning spec is not stored; mixing
/// scalars from different fields is a caller bug.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    /// Exact fraction, lowest terms, positive denominator (maintained by
    /// `BigRational` itself).
    Rat(BigRational),
    /// Finite-field element, packed as sum(c_i * p^i) with digits c_i < p.
    Fin(u64),
}

impl FieldSpec {
    pub fn rationals() -> Self {
        FieldSpec {
            characteristic: 0,
            degree: 1,
            modulus: None,
        }
    }

    pub fn prime_field(p: u64) -> Result<Self, FieldError> {
        if p >= (1 << 31) {
            return Err(FieldError::CharacteristicTooLarge(p, 1 << 31));
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(FieldSpec {
            characteristic: p,
            degree: 1,
            modulus: None,
        })
    }

    /// Build GF(p^k) from a modulus with k+1 integer coefficients (constant
    /// term first). The leading coefficient must be a unit mod p; the whole
    /// polynomial is normalized to monic form and checked irreducible by
    /// trial division against every monic polynomial of degree <= k/2.
    pub fn extension(p: u64, modulus_coeffs: &[i64]) -> Result<Self, FieldError> {
        if p >= (1 << 16) {
            return Err(FieldError::CharacteristicTooLarge(p, 1 << 16));
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        let degree = modulus_coeffs.len().saturating_sub(1) as u32;
        if !(2..=MAX_EXTENSION_DEGREE).contains(&degree) {
            return Err(FieldError::BadDegree(degree));
        }
        let mut m: Vec<u64> = modulus_coeffs
            .iter()
            .map(|&c| (((c % p as i64) + p as i64) % p as i64) as u64)
            .collect();
        let lead = *m.last().unwrap();
        if lead == 0 {
            return Err(FieldError::BadModulus);
        }
        if lead != 1 {
            let inv = mod_inverse(lead, p);
            for c in m.iter_mut() {
                *c = *c * inv % p;
            }
        }
        check_irreducible(p, &m)?;
        Ok(FieldSpec {
            characteristic: p,
            degree,
            modulus: Some(m),
        })
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn modulus(&self) -> Option<&[u64]> {
        self.modulus.as_deref()
    }

    pub fn is_rational(&self) -> bool {
        self.characteristic == 0
    }

    /// Number of elements for finite fields, `None` for the rationals.
    pub fn order(&self) -> Option<u64> {
        if self.characteristic == 0 {
            None
        } else {
            Some(self.characteristic.pow(self.degree))
        }
    }

    pub fn zero(&self) -> Scalar {
        if self.is_rational() {
            Scalar::Rat(BigRational::zero())
        } else {
            Scalar::Fin(0)
        }
    }

    pub fn one(&self) -> Scalar {
        if self.is_rational() {
            Scalar::Rat(BigRational::one())
        } else {
            Scalar::Fin(1)
        }
    }

    pub fn from_int(&self, n: i64) -> Scalar {
        if self.is_rational() {
            Scalar::Rat(BigRational::from_integer(BigInt::from(n)))
        } else {
            let p = self.characteristic as i64;
            Scalar::Fin((((n % p) + p) % p) as u64)
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Fin(v) => *v == 0,
        }
    }

    pub fn is_one(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Fin(v) => *v == 1,
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            (Scalar::Fin(x), Scalar::Fin(y)) => {
                let p = self.characteristic;
                if self.degree == 1 {
                    Scalar::Fin((x + y) % p)
                } else {
                    let (da, db) = (self.decode(*x), self.decode(*y));
                    let sum: Vec<u64> = da.iter().zip(&db).map(|(u, v)| (u + v) % p).collect();
                    Scalar::Fin(self.encode(&sum))
                }
            }
            _ => panic!("scalar kind mismatch"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match a {
            Scalar::Rat(x) => Scalar::Rat(-x),
            Scalar::Fin(x) => {
                let p = self.characteristic;
                if self.degree == 1 {
                    Scalar::Fin((p - x % p) % p)
                } else {
                    let d = self.decode(*x);
                    let n: Vec<u64> = d.iter().map(|&c| (p - c) % p).collect();
                    Scalar::Fin(self.encode(&n))
                }
            }
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            (Scalar::Fin(x), Scalar::Fin(y)) => {
                let p = self.characteristic;
                if self.degree == 1 {
                    Scalar::Fin(x * y % p)
                } else {
                    let (da, db) = (self.decode(*x), self.decode(*y));
                    let prod = poly_mul_mod(&da, &db, p, self.modulus.as_ref().unwrap());
                    Scalar::Fin(self.encode(&prod))
                }
            }
            _ => panic!("scalar kind mismatch"),
        }
    }

    /// Multiplicative inverse. Panics on zero; callers must pivot on nonzero
    /// entries.
    pub fn inv(&self, a: &Scalar) -> Scalar {
        assert!(!self.is_zero(a), "inverse of zero");
        match a {
            Scalar::Rat(x) => Scalar::Rat(x.recip()),
            Scalar::Fin(x) => {
                let p = self.characteristic;
                if self.degree == 1 {
                    Scalar::Fin(mod_inverse(*x, p))
                } else {
                    let d = self.decode(*x);
                    let inv = poly_inverse(&d, p, self.modulus.as_ref().unwrap());
                    Scalar::Fin(self.encode(&inv))
                }
            }
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.mul(a, &self.inv(b))
    }

    pub fn pow(&self, a: &Scalar, mut e: u64) -> Scalar {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// `a^(p^n)`, computed as n successive p-th powers so the exponent never
    /// overflows.
    pub fn frobenius(&self, a: &Scalar, n: u32) -> Result<Scalar, FieldError> {
        if self.characteristic == 0 {
            return Err(FieldError::CharacteristicZero);
        }
        let mut x = a.clone();
        for _ in 0..n {
            x = self.pow(&x, self.characteristic);
        }
        Ok(x)
    }

    /// Digits of a packed finite-field scalar, constant term first, length =
    /// extension degree.
    pub fn decode(&self, mut v: u64) -> Vec<u64> {
        let p = self.characteristic;
        let mut out = vec![0u64; self.degree as usize];
        for d in out.iter_mut() {
            *d = v % p;
            v /= p;
        }
        debug_assert_eq!(v, 0, "scalar out of range for field");
        out
    }

    pub fn encode(&self, digits: &[u64]) -> u64 {
        let p = self.characteristic;
        let mut v = 0u64;
        for &d in digits.iter().rev() {
            debug_assert!(d < p);
            v = v * p + d;
        }
        v
    }

    /// The extension generator t (only meaningful when degree > 1).
    pub fn generator(&self) -> Scalar {
        assert!(self.degree > 1, "prime field has no extension generator");
        Scalar::Fin(self.characteristic)
    }

    /// t^i reduced into the field; works for any exponent.
    pub fn generator_power(&self, i: u64) -> Result<Scalar, FieldError> {
        if self.degree <= 1 {
            return Err(FieldError::ScalarParse(
                format!("t^{i}"),
                "field has no extension generator".into(),
            ));
        }
        Ok(self.pow(&self.generator(), i))
    }

    /// Iterate all field elements in a fixed order (finite fields only).
    pub fn elements(&self) -> impl Iterator<Item = Scalar> + '_ {
        let n = self.order().expect("elements() needs a finite field");
        (0..n).map(Scalar::Fin)
    }

    /// Uniform sample for finite fields; small integers for the rationals
    /// (the Schwartz–Zippel window is chosen by the caller).
    pub fn sample(&self, rng: &mut SplitMix64, rational_range: u64) -> Scalar {
        if let Some(n) = self.order() {
            Scalar::Fin(rng.below(n))
        } else {
            let span = 2 * rational_range + 1;
            let v = rng.below(span) as i64 - rational_range as i64;
            self.from_int(v)
        }
    }

    /// A quadratic extension of this finite field, presented over the prime
    /// field, together with the image of this field's generator in it. Used
    /// only for existence probes over small fields.
    pub fn quadratic_extension(&self) -> Result<(FieldSpec, Scalar), FieldError> {
        let p = self.characteristic;
        if p == 0 {
            return Err(FieldError::CharacteristicZero);
        }
        let new_degree = self.degree * 2;
        if new_degree > MAX_EXTENSION_DEGREE {
            return Err(FieldError::BadDegree(new_degree));
        }
        // Deterministic scan for a monic irreducible of the right degree.
        let dim = new_degree as usize;
        let mut found = None;
        'outer: for tail in 0..p.pow(new_degree) {
            let mut coeffs = vec![0u64; dim + 1];
            let mut v = tail;
            for c in coeffs.iter_mut().take(dim) {
                *c = v % p;
                v /= p;
            }
            coeffs[dim] = 1;
            if check_irreducible(p, &coeffs).is_ok() {
                found = Some(coeffs);
                break 'outer;
            }
        }
        let coeffs = found.ok_or(FieldError::NoExtensionFound)?;
        let big = FieldSpec {
            characteristic: p,
            degree: new_degree,
            modulus: Some(coeffs),
        };
        // Image of our generator: a root of our modulus inside the big field.
        let gen_image = if self.degree == 1 {
            big.one()
        } else {
            let modulus = self.modulus.as_ref().unwrap();
            let mut root = None;
            for cand in big.elements() {
                let mut acc = big.zero();
                for &c in modulus.iter().rev() {
                    acc = big.mul(&acc, &cand);
                    acc = big.add(&acc, &big.from_int(c as i64));
                }
                if big.is_zero(&acc) {
                    root = Some(cand);
                    break;
                }
            }
            root.ok_or(FieldError::NoExtensionFound)?
        };
        Ok((big, gen_image))
    }

    /// Embed a scalar of this field into its quadratic extension, given the
    /// generator image returned by [`FieldSpec::quadratic_extension`].
    pub fn embed(&self, a: &Scalar, big: &FieldSpec, gen_image: &Scalar) -> Scalar {
        match a {
            Scalar::Rat(_) => panic!("embedding only defined for finite fields"),
            Scalar::Fin(v) => {
                let digits = self.decode(*v);
                let mut acc = big.zero();
                for &c in digits.iter().rev() {
                    acc = big.mul(&acc, gen_image);
                    acc = big.add(&acc, &big.from_int(c as i64));
                }
                acc
            }
        }
    }

    /// Parse a scalar expression: sums of signed terms, each term an integer,
    /// an optional fraction `a/b` (rationals only), `t`, `t^i`, or products of
    /// those joined by `*`. Examples: `2`, `-3`, `1/2`, `t`, `t^2`, `t+1`,
    /// `2*t^2-t+1`.
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar, FieldError> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(FieldError::ScalarParse(text.into(), "empty".into()));
        }
        let mut total = self.zero();
        let mut term = String::new();
        let mut sign = 1i64;
        let mut chars = s.chars().peekable();
        // Leading sign.
        if let Some(&c) = chars.peek() {
            if c == '+' || c == '-' {
                sign = if c == '-' { -1 } else { 1 };
                chars.next();
            }
        }
        let flush = |term: &mut String, sign: i64, total: &mut Scalar| -> Result<(), FieldError> {
            if term.is_empty() {
                return Err(FieldError::ScalarParse(text.into(), "dangling sign".into()));
            }
            let mut value = self.parse_term(term)?;
            if sign < 0 {
                value = self.neg(&value);
            }
            *total = self.add(total, &value);
            term.clear();
            Ok(())
        };
        while let Some(c) = chars.next() {
            match c {
                '+' | '-' => {
                    // '^-' never occurs; '/' handled inside term.
                    flush(&mut term, sign, &mut total)?;
                    sign = if c == '-' { -1 } else { 1 };
                }
                _ => term.push(c),
            }
        }
        flush(&mut term, sign, &mut total)?;
        Ok(total)
    }

    /// One product term: factors joined by `*`, each an unsigned integer,
    /// `a/b`, `t` or `t^i`.
    fn parse_term(&self, term: &str) -> Result<Scalar, FieldError> {
        let mut acc = self.one();
        for factor in term.split('*') {
            if factor.is_empty() {
                return Err(FieldError::ScalarParse(term.into(), "empty factor".into()));
            }
            let val = if factor == "t" {
                self.generator_power(1)?
            } else if let Some(exp) = factor.strip_prefix("t^") {
                let i: u64 = exp
                    .parse()
                    .map_err(|_| FieldError::ScalarParse(factor.into(), "bad exponent".into()))?;
                self.generator_power(i)?
            } else if let Some((num, den)) = factor.split_once('/') {
                if !self.is_rational() {
                    return Err(FieldError::ScalarParse(
                        factor.into(),
                        "fractions only allowed over the rationals".into(),
                    ));
                }
                let n: BigInt = num
                    .parse()
                    .map_err(|_| FieldError::ScalarParse(factor.into(), "bad numerator".into()))?;
                let d: BigInt = den.parse().map_err(|_| {
                    FieldError::ScalarParse(factor.into(), "bad denominator".into())
                })?;
                if d.is_zero() {
                    return Err(FieldError::ScalarParse(
                        factor.into(),
                        "zero denominator".into(),
                    ));
                }
                Scalar::Rat(BigRational::new(n, d))
            } else {
                let n: i64 = factor
                    .parse()
                    .map_err(|_| FieldError::ScalarParse(factor.into(), "not an integer".into()))?;
                self.from_int(n)
            };
            acc = self.mul(&acc, &val);
        }
        Ok(acc)
    }

    /// Canonical display form, parseable back by [`FieldSpec::parse_scalar`].
    pub fn format_scalar(&self, a: &Scalar) -> String {
        match a {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fin(v) => {
                if self.degree == 1 {
                    return v.to_string();
                }
                let digits = self.decode(*v);
                let mut parts: Vec<String> = Vec::new();
                for (i, &c) in digits.iter().enumerate().rev() {
                    if c == 0 {
                        continue;
                    }
                    let part = match (i, c) {
                        (0, _) => c.to_string(),
                        (1, 1) => "t".into(),
                        (1, _) => format!("{c}*t"),
                        (_, 1) => format!("t^{i}"),
                        (_, _) => format!("{c}*t^{i}"),
                    };
                    parts.push(part);
                }
                if parts.is_empty() {
                    "0".into()
                } else {
                    parts.join("+")
                }
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.characteristic == 0 {
            write!(f, "QQ")
        } else if self.degree == 1 {
            write!(f, "GF({})", self.characteristic)
        } else {
            write!(f, "GF({}^{})", self.characteristic, self.degree)
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Extended Euclid on (a, p), p prime and a != 0 mod p.
    let (mut old_r, mut r) = (a as i128, p as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    assert_eq!(old_r, 1, "not invertible mod p");
    (((old_s % p as i128) + p as i128) % p as i128) as u64
}

// --- dense polynomial helpers over GF(p), coefficient vectors constant-first ---

fn poly_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

/// Remainder of `a` modulo monic `m`.
fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for (i, &mc) in m.iter().enumerate() {
                let idx = i + shift;
                let sub = lead * mc % p;
                r[idx] = (r[idx] + p - sub) % p;
            }
        }
        poly_trim(&mut r);
        if r.len() <= dm {
            break;
        }
    }
    r
}

/// Product reduced mod the field modulus, returned padded to full degree.
fn poly_mul_mod(a: &[u64], b: &[u64], p: u64, modulus: &[u64]) -> Vec<u64> {
    let prod = poly_mul(a, b, p);
    let mut r = poly_rem(&prod, modulus, p);
    r.resize(modulus.len() - 1, 0);
    r
}

fn poly_inverse(a: &[u64], p: u64, modulus: &[u64]) -> Vec<u64> {
    // Extended Euclid over GF(p)[x].
    let mut old_r = {
        let mut v = a.to_vec();
        poly_trim(&mut v);
        v
    };
    let mut r = modulus.to_vec();
    let mut old_s = vec![1u64];
    let mut s: Vec<u64> = Vec::new();
    while !r.is_empty() {
        // Divide old_r by r.
        let (q, rem) = poly_divmod(&old_r, &r, p);
        let qs = poly_mul(&q, &s, p);
        let new_s = poly_sub(&old_s, &qs, p);
        old_r = std::mem::replace(&mut r, rem);
        old_s = std::mem::replace(&mut s, new_s);
    }
    // old_r is now a nonzero constant gcd (a invertible).
    assert_eq!(old_r.len(), 1, "element not invertible in extension field");
    let c_inv = mod_inverse(old_r[0], p);
    let mut out: Vec<u64> = old_s.iter().map(|&c| c * c_inv % p).collect();
    out = poly_rem(&out, modulus, p);
    out.resize(modulus.len() - 1, 0);
    out
}

fn poly_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        out[i] = (x + p - y) % p;
    }
    poly_trim(&mut out);
    out
}

fn poly_divmod(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = mod_inverse(*b.last().unwrap(), p);
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![0u64; r.len() - db];
    while r.len() > db {
        let coeff = *r.last().unwrap() * lead_inv % p;
        let shift = r.len() - 1 - db;
        q[shift] = coeff;
        for (i, &bc) in b.iter().enumerate() {
            let sub = coeff * bc % p;
            r[i + shift] = (r[i + shift] + p - sub) % p;
        }
        poly_trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    poly_trim(&mut q);
    (q, r)
}

/// Trial-division irreducibility over GF(p) for a monic polynomial.
fn check_irreducible(p: u64, m: &[u64]) -> Result<(), FieldError> {
    let k = m.len() - 1;
    if m[0] == 0 {
        // Divisible by x.
        return Err(FieldError::ReducibleModulus(p, 1));
    }
    let half = k / 2;
    // Candidate count p^half must stay manageable.
    let mut count: u64 = 1;
    for _ in 0..half {
        count = count
            .checked_mul(p)
            .ok_or(FieldError::ModulusCheckTooLarge)?;
        if count > 2_000_000 {
            return Err(FieldError::ModulusCheckTooLarge);
        }
    }
    for deg in 1..=half {
        let n = p.pow(deg as u32);
        for tail in 0..n {
            let mut g = vec![0u64; deg + 1];
            let mut v = tail;
            for c in g.iter_mut().take(deg) {
                *c = v % p;
                v /= p;
            }
            g[deg] = 1;
            if poly_rem(m, &g, p).is_empty() {
                return Err(FieldError::ReducibleModulus(p, deg));
            }
        }
    }
    Ok(())
}

impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        // Scalars serialize as their raw payload; reports always format
        // through the owning field instead.
        match self {
            Scalar::Rat(r) => serializer.serialize_str(&format!("{}/{}", r.numer(), r.denom())),
            Scalar::Fin(v) => serializer.serialize_u64(*v),
        }
    }
}
