//! Hilbert symbols over Q and 2-torsion Brauer classes.
//!
//! A class in Br₂(Q) is stored as its finite set of ramified places; the
//! group law is symmetric difference.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::arith::integer::{factor, is_prime_u64, legendre, valuation, Cofactor, DEFAULT_FACTOR_BOUND};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Prime(u64),
    Infinity,
}

impl Place {
    pub fn prime(p: u64) -> Result<Place> {
        if is_prime_u64(p) {
            Ok(Place::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Prime(p) => write!(f, "{p}"),
            Place::Infinity => write!(f, "inf"),
        }
    }
}

impl Serialize for Place {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct BrauerClass {
    ramified: BTreeSet<Place>,
}

impl BrauerClass {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn from_places(places: impl IntoIterator<Item = Place>) -> Self {
        let mut c = Self::default();
        for p in places {
            c.toggle(p);
        }
        c
    }

    pub fn ramified(&self) -> &BTreeSet<Place> {
        &self.ramified
    }

    pub fn is_trivial(&self) -> bool {
        self.ramified.is_empty()
    }

    pub fn contains(&self, v: Place) -> bool {
        self.ramified.contains(&v)
    }

    pub fn toggle(&mut self, v: Place) {
        if !self.ramified.remove(&v) {
            self.ramified.insert(v);
        }
    }

    pub fn product(&self, other: &Self) -> Self {
        BrauerClass {
            ramified: self.ramified.symmetric_difference(&other.ramified).copied().collect(),
        }
    }

    /// Odd primes at which the class ramifies.
    pub fn odd_primes(&self) -> Vec<u64> {
        self.ramified
            .iter()
            .filter_map(|v| match v {
                Place::Prime(p) if *p != 2 => Some(*p),
                _ => None,
            })
            .collect()
    }
}

impl fmt::Display for BrauerClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.ramified.iter().map(|p| p.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// `num * den`, an integer in the square class of `x`.
fn class_integer(x: &BigRational) -> Result<BigInt> {
    if x.is_zero() {
        return Err(Error::ZeroArgument);
    }
    Ok(x.numer() * x.denom())
}

fn eps_odd(u: &BigInt) -> u8 {
    // (u - 1)/2 mod 2
    (u.mod_floor(&BigInt::from(4)) == BigInt::from(3)) as u8
}

fn omega(u: &BigInt) -> u8 {
    // (u^2 - 1)/8 mod 2
    let r = u.mod_floor(&BigInt::from(8)).to_u8().unwrap();
    (r == 3 || r == 5) as u8
}

/// The local symbol `(a, b)_v` as `1` or `-1`.
pub fn hilbert_symbol(a: &BigRational, b: &BigRational, v: Place) -> Result<i8> {
    let a = class_integer(a)?;
    let b = class_integer(b)?;
    Ok(hilbert_symbol_int(&a, &b, v))
}

pub(crate) fn hilbert_symbol_int(a: &BigInt, b: &BigInt, v: Place) -> i8 {
    match v {
        Place::Infinity => {
            if a.is_negative() && b.is_negative() {
                -1
            } else {
                1
            }
        }
        Place::Prime(2) => {
            let (alpha, u) = valuation(a, 2);
            let (beta, w) = valuation(b, 2);
            let e = eps_odd(&u) * eps_odd(&w) + (alpha % 2) as u8 * omega(&w) + (beta % 2) as u8 * omega(&u);
            if e.is_multiple_of(2) {
                1
            } else {
                -1
            }
        }
        Place::Prime(p) => {
            let (alpha, u) = valuation(a, p);
            let (beta, w) = valuation(b, p);
            let mut s: i8 = if (alpha % 2 == 1) && (beta % 2 == 1) && p % 4 == 3 { -1 } else { 1 };
            if beta % 2 == 1 {
                s *= legendre(&u, p);
            }
            if alpha % 2 == 1 {
                s *= legendre(&w, p);
            }
            s
        }
    }
}

/// Primes dividing `n` to an odd power.
fn odd_support(n: &BigInt, bound: u64) -> Result<Vec<u64>> {
    let f = factor(n, bound)?;
    let mut out: Vec<u64> = f.factors.iter().filter(|(_, &e)| e % 2 == 1).map(|(&p, _)| p).collect();
    match &f.cofactor {
        Cofactor::One | Cofactor::Square(_) => {}
        Cofactor::Prime(p) => out.push(*p),
        Cofactor::Unknown(c) => {
            return Err(Error::FactorizationIncomplete {
                value: n.clone(),
                cofactor: c.clone(),
                bound,
            })
        }
    }
    Ok(out)
}

/// Strips square factors found by trial division, keeping a square class
/// representative together with its odd-exponent primes.
fn reduce(n: &BigInt, bound: u64) -> Result<(BigInt, Vec<u64>)> {
    let primes = odd_support(n, bound)?;
    let mut r = BigInt::from(if n.is_negative() { -1 } else { 1 });
    for &p in &primes {
        r *= BigInt::from(p);
    }
    Ok((r, primes))
}

pub fn brauer_class(a: &BigRational, b: &BigRational) -> Result<BrauerClass> {
    brauer_class_with(a, b, DEFAULT_FACTOR_BOUND)
}

/// The quaternion class `(a, b)`: the places where the Hilbert symbol is -1.
pub fn brauer_class_with(a: &BigRational, b: &BigRational, bound: u64) -> Result<BrauerClass> {
    let (a, pa) = reduce(&class_integer(a)?, bound)?;
    let (b, pb) = reduce(&class_integer(b)?, bound)?;
    let mut places: BTreeSet<Place> = pa.into_iter().chain(pb).map(Place::Prime).collect();
    places.insert(Place::Prime(2));
    places.insert(Place::Infinity);
    Ok(BrauerClass {
        ramified: places
            .into_iter()
            .filter(|&v| hilbert_symbol_int(&a, &b, v) == -1)
            .collect(),
    })
}

pub fn class_product(c1: &BrauerClass, c2: &BrauerClass) -> BrauerClass {
    c1.product(c2)
}

/// Hasse-Witt invariant `⊗_{i<j} (a_i, a_j)` of the diagonal form.
pub fn witt_invariant_diagonal(coeffs: &[BigRational]) -> Result<BrauerClass> {
    witt_invariant_diagonal_with(coeffs, DEFAULT_FACTOR_BOUND)
}

pub fn witt_invariant_diagonal_with(coeffs: &[BigRational], bound: u64) -> Result<BrauerClass> {
    let mut acc = BrauerClass::trivial();
    for i in 0..coeffs.len() {
        for j in i + 1..coeffs.len() {
            acc = acc.product(&brauer_class_with(&coeffs[i], &coeffs[j], bound)?);
        }
    }
    Ok(acc)
}
