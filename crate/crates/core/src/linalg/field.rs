//! Exact scalar fields: the rationals and prime fields.
//!
//! A [`Field`] value is a small context object (zero-sized for ℚ, the modulus
//! for 𝔽p) that performs the arithmetic on its [`Field::Elem`] values.

use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Runtime description of a base field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
}

impl FieldSpec {
    /// The prime used when 𝔽p is requested without a modulus.
    pub const DEFAULT_PRIME: u64 = 32003;

    /// Parses `q` or `fp:P` (also `fp`, meaning `fp:32003`).
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "q" | "Q" | "rationals" => Ok(FieldSpec::Rationals),
            "fp" => Ok(FieldSpec::PrimeField(Self::DEFAULT_PRIME)),
            _ => {
                let p = s
                    .strip_prefix("fp:")
                    .and_then(|p| p.parse::<u64>().ok())
                    .ok_or_else(|| Error::InvalidInput(format!("unknown field `{s}`")))?;
                PrimeField::new(p)?;
                Ok(FieldSpec::PrimeField(p))
            }
        }
    }

    pub fn label(&self) -> String {
        match self {
            FieldSpec::Rationals => "Q".to_string(),
            FieldSpec::PrimeField(p) => format!("F{p}"),
        }
    }
}

/// Arithmetic in an exact field.
pub trait Field: Clone + Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + Debug + PartialEq + Eq + Hash + Send + Sync + 'static;

    fn spec(&self) -> FieldSpec;
    /// 0 for ℚ, p for 𝔽p.
    fn characteristic(&self) -> u64;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn add_assign(&self, a: &mut Self::Elem, b: &Self::Elem) {
        *a = self.add(a, b);
    }
    /// `a -= b * c`
    fn sub_mul_assign(&self, a: &mut Self::Elem, b: &Self::Elem, c: &Self::Elem) {
        *a = self.sub(a, &self.mul(b, c));
    }
    /// `a += b * c`
    fn add_mul_assign(&self, a: &mut Self::Elem, b: &Self::Elem, c: &Self::Elem) {
        *a = self.add(a, &self.mul(b, c));
    }

    fn format(&self, a: &Self::Elem) -> String;
    fn parse(&self, s: &str) -> Result<Self::Elem>;

    /// Prime used for modular shortcuts (fast rank certificates, root search).
    fn work_prime(&self) -> u64;
    /// Image of `a` in 𝔽p for `p = work_prime()`; `None` when `p` divides a denominator.
    fn residue(&self, a: &Self::Elem) -> Option<u64>;
    /// The simplest element reducing to `r` modulo `work_prime()`, if one is recognisable.
    fn lift_residue(&self, r: u64) -> Option<Self::Elem>;
    /// A random coefficient for generic linear combinations: an integer in
    /// `[-bound, bound]` over ℚ, a uniform residue over 𝔽p.
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R, bound: i64) -> Self::Elem;
}

/// The field ℚ with arbitrary-precision numerators and denominators.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rationals
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn add_assign(&self, a: &mut BigRational, b: &BigRational) {
        *a += b;
    }
    fn sub_mul_assign(&self, a: &mut BigRational, b: &BigRational, c: &BigRational) {
        if b.is_integer() && c.is_integer() && a.is_integer() {
            // integer fast path: avoids gcd normalisation of the product
            let v = a.numer() - b.numer() * c.numer();
            *a = BigRational::from_integer(v);
        } else {
            *a -= b * c;
        }
    }
    fn add_mul_assign(&self, a: &mut BigRational, b: &BigRational, c: &BigRational) {
        if b.is_integer() && c.is_integer() && a.is_integer() {
            let v = a.numer() + b.numer() * c.numer();
            *a = BigRational::from_integer(v);
        } else {
            *a += b * c;
        }
    }
    fn format(&self, a: &BigRational) -> String {
        if a.is_integer() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
    fn parse(&self, s: &str) -> Result<BigRational> {
        let bad = || Error::InvalidInput(format!("cannot parse rational `{s}`"));
        let s = s.trim();
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(BigRational::new(n, d))
            }
            None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
        }
    }
    fn work_prime(&self) -> u64 {
        FieldSpec::DEFAULT_PRIME
    }
    fn residue(&self, a: &BigRational) -> Option<u64> {
        let p = BigInt::from(FieldSpec::DEFAULT_PRIME);
        let fp = PrimeField { p: FieldSpec::DEFAULT_PRIME };
        let n = (a.numer() % &p + &p) % &p;
        let d = (a.denom() % &p + &p) % &p;
        let d = fp.inv(&d.to_u64()?)?;
        Some(fp.mul(&n.to_u64()?, &d))
    }
    fn lift_residue(&self, r: u64) -> Option<BigRational> {
        let (n, d) = rational_reconstruction(r, FieldSpec::DEFAULT_PRIME)?;
        Some(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R, bound: i64) -> BigRational {
        self.from_i64(rng.gen_range(-bound..=bound))
    }
}

/// Smallest `n/d` with `n ≡ r·d (mod p)` and `|n|, d ≤ sqrt(p/2)`.
fn rational_reconstruction(r: u64, p: u64) -> Option<(i64, i64)> {
    let bound = ((p / 2) as f64).sqrt() as i64;
    let (mut r0, mut r1) = (p as i64, r as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 > bound {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if t1 == 0 || t1.abs() > bound {
        return None;
    }
    Some(if t1 < 0 { (-r1, -t1) } else { (r1, t1) })
}

/// The prime field 𝔽p, elements stored as canonical residues `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Rejects composites and moduli of 2^31 or more.
    pub fn new(p: u64) -> Result<Self> {
        if !(2..1 << 31).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidInput(format!(
                "{p} is not a prime below 2^31"
            )));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field for PrimeField {
    type Elem = u64;

    fn spec(&self) -> FieldSpec {
        FieldSpec::PrimeField(self.p)
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        // extended Euclid on signed values
        let (mut r0, mut r1) = (self.p as i64, *a as i64);
        let (mut s0, mut s1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        Some(s0.rem_euclid(self.p as i64) as u64)
    }
    fn sub_mul_assign(&self, a: &mut u64, b: &u64, c: &u64) {
        *a = self.sub(a, &(b * c % self.p));
    }
    fn add_mul_assign(&self, a: &mut u64, b: &u64, c: &u64) {
        *a = (*a + b * c) % self.p;
    }
    fn format(&self, a: &u64) -> String {
        a.to_string()
    }
    fn parse(&self, s: &str) -> Result<u64> {
        let v: i64 = s
            .trim()
            .parse()
            .map_err(|_| Error::InvalidInput(format!("cannot parse residue `{s}`")))?;
        Ok(self.from_i64(v))
    }
    fn work_prime(&self) -> u64 {
        self.p
    }
    fn residue(&self, a: &u64) -> Option<u64> {
        Some(*a)
    }
    fn lift_residue(&self, r: u64) -> Option<u64> {
        Some(r)
    }
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R, _bound: i64) -> u64 {
        rng.gen_range(0..self.p)
    }
}
