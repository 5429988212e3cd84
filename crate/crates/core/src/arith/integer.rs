//! Bounded integer factorization and square classes of rationals.

use std::collections::BTreeMap;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const DEFAULT_FACTOR_BOUND: u64 = 1_000_000;

/// What remains after trial division up to the bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Cofactor {
    One,
    /// A prime above the bound, certified by a deterministic Miller-Rabin test.
    Prime(u64),
    /// A perfect square with no prime factor below the bound.
    Square(BigInt),
    /// Not resolved; the factorization is incomplete.
    Unknown(BigInt),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntegerFactorization {
    pub sign: i8,
    pub factors: BTreeMap<u64, u32>,
    pub cofactor: Cofactor,
    pub bound: u64,
}

impl IntegerFactorization {
    pub fn is_complete(&self) -> bool {
        !matches!(self.cofactor, Cofactor::Unknown(_))
    }

    /// Rebuilds the factored integer.
    pub fn value(&self) -> BigInt {
        let mut v = BigInt::from(self.sign);
        for (&p, &e) in &self.factors {
            v *= BigInt::from(p).pow(e);
        }
        match &self.cofactor {
            Cofactor::One => {}
            Cofactor::Prime(p) => v *= BigInt::from(*p),
            Cofactor::Square(r) => v *= r * r,
            Cofactor::Unknown(c) => v *= c,
        }
        v
    }

    /// Primes with odd exponent, in increasing order.
    pub fn odd_primes(&self) -> Result<Vec<u64>> {
        let mut out: Vec<u64> = self
            .factors
            .iter()
            .filter(|(_, &e)| e % 2 == 1)
            .map(|(&p, _)| p)
            .collect();
        match &self.cofactor {
            Cofactor::One | Cofactor::Square(_) => {}
            Cofactor::Prime(p) => out.push(*p),
            Cofactor::Unknown(c) => {
                return Err(Error::FactorizationIncomplete {
                    value: self.value(),
                    cofactor: c.clone(),
                    bound: self.bound,
                })
            }
        }
        Ok(out)
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &p in &BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'outer: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

fn classify_cofactor(r: BigInt, bound: u64) -> Cofactor {
    if r.is_one() {
        return Cofactor::One;
    }
    let root = r.sqrt();
    if &root * &root == r {
        return Cofactor::Square(root);
    }
    match r.to_u64() {
        Some(v) if is_prime_u64(v) => Cofactor::Prime(v),
        _ => {
            let _ = bound;
            Cofactor::Unknown(r)
        }
    }
}

/// Trial division by 2 and odd numbers up to `bound`.
pub fn factor(n: &BigInt, bound: u64) -> Result<IntegerFactorization> {
    if n.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let sign: i8 = if n.is_negative() { -1 } else { 1 };
    let mut factors = BTreeMap::new();
    let mut r = n.abs();

    if let Some(mut small) = r.to_u128() {
        let push = |p: u64, f: &mut BTreeMap<u64, u32>| *f.entry(p).or_insert(0) += 1;
        while small % 2 == 0 {
            push(2, &mut factors);
            small /= 2;
        }
        let mut d: u64 = 3;
        while d <= bound && (d as u128) * (d as u128) <= small {
            while small % d as u128 == 0 {
                push(d, &mut factors);
                small /= d as u128;
            }
            d += 2;
        }
        if small > 1 && (d as u128) * (d as u128) > small && small <= bound as u128 {
            push(small as u64, &mut factors);
            small = 1;
        }
        let cofactor = if small > 1 && (d as u128) * (d as u128) > small && small <= u64::MAX as u128 {
            // no divisor up to sqrt: prime
            Cofactor::Prime(small as u64)
        } else {
            classify_cofactor(BigInt::from(small), bound)
        };
        return Ok(IntegerFactorization {
            sign,
            factors,
            cofactor,
            bound,
        });
    }

    let mut d: u64 = 2;
    while d <= bound {
        let bd = BigInt::from(d);
        if &bd * &bd > r {
            break;
        }
        loop {
            let (q, rem) = r.div_rem(&bd);
            if !rem.is_zero() {
                break;
            }
            *factors.entry(d).or_insert(0) += 1;
            r = q;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    let bd = BigInt::from(d);
    let cofactor = if !r.is_one() && &bd * &bd > r {
        match r.to_u64() {
            Some(v) if v <= bound => {
                *factors.entry(v).or_insert(0) += 1;
                Cofactor::One
            }
            Some(v) => Cofactor::Prime(v),
            None => classify_cofactor(r, bound),
        }
    } else {
        classify_cofactor(r, bound)
    };
    Ok(IntegerFactorization {
        sign,
        factors,
        cofactor,
        bound,
    })
}

/// The squarefree integer in the square class of a nonzero rational.
pub fn squarefree_part(x: &BigRational) -> Result<BigInt> {
    squarefree_part_with(x, DEFAULT_FACTOR_BOUND)
}

pub fn squarefree_part_with(x: &BigRational, bound: u64) -> Result<BigInt> {
    if x.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let n = x.numer() * x.denom();
    let f = factor(&n, bound)?;
    let mut out = BigInt::from(f.sign);
    for p in f.odd_primes()? {
        out *= BigInt::from(p);
    }
    Ok(out)
}

pub fn is_rational_square(x: &BigRational) -> bool {
    if x.is_negative() {
        return false;
    }
    is_square(x.numer()) && is_square(x.denom())
}

pub fn is_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

/// Exact square root of a rational square.
pub fn rational_sqrt(x: &BigRational) -> Option<BigRational> {
    if !is_rational_square(x) {
        return None;
    }
    Some(BigRational::new(x.numer().sqrt(), x.denom().sqrt()))
}

/// Exponent of the prime `p` in a nonzero integer, plus the `p`-free part.
pub fn valuation(n: &BigInt, p: u64) -> (u32, BigInt) {
    let bp = BigInt::from(p);
    let mut e = 0;
    let mut r = n.clone();
    loop {
        let (q, rem) = r.div_rem(&bp);
        if !rem.is_zero() || r.is_zero() {
            break;
        }
        r = q;
        e += 1;
    }
    (e, r)
}

/// Legendre symbol (a/p) for an odd prime p; 0 when p | a.
pub fn legendre(a: &BigInt, p: u64) -> i8 {
    let r = a.mod_floor(&BigInt::from(p)).to_u64().unwrap();
    if r == 0 {
        return 0;
    }
    if pow_mod(r, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

/// Parses a decimal literal such as `-0.125` or `3` into an exact rational.
pub fn parse_decimal(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int_part, frac_part) = match body.split_once('.') {
        Some((i, f)) => (i, f),
        None => (body, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    let n: BigInt = if digits.is_empty() { BigInt::zero() } else { digits.parse().ok()? };
    let d = BigInt::from(10).pow(frac_part.len() as u32);
    let q = BigRational::new(n, d);
    Some(if neg { -q } else { q })
}

/// Parses `p`, `p/q` or a decimal literal.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(BigRational::new(n, d));
    }
    parse_decimal(s)
}

pub fn sign_of(n: &BigInt) -> i8 {
    match n.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}
