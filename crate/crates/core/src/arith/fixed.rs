//! Binary fixed-point reals of arbitrary precision, and the [`Real`] trait
//! that lets the root finder run over `f32`, `f64` or [`Fixed`].

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, ToPrimitive, Zero};

/// `mant / 2^bits`. Operands of different precision are aligned to the
/// larger one; results keep that precision and are rounded towards -inf.
#[derive(Clone, Debug)]
pub struct Fixed {
    mant: BigInt,
    bits: u32,
}

impl Fixed {
    pub fn from_rational(q: &BigRational, bits: u32) -> Self {
        let scaled = (q.numer() << bits as usize) / q.denom();
        let floor = if (q.numer() << bits as usize) % q.denom() != BigInt::zero() && q.is_negative() {
            scaled - 1
        } else {
            scaled
        };
        Fixed { mant: floor, bits }
    }

    pub fn from_f64(x: f64, bits: u32) -> Self {
        match BigRational::from_float(x) {
            Some(q) => Self::from_rational(&q, bits),
            None => Fixed::zero().with_bits(bits),
        }
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn with_bits(&self, bits: u32) -> Self {
        let mant = match bits.cmp(&self.bits) {
            Ordering::Equal => self.mant.clone(),
            Ordering::Greater => &self.mant << (bits - self.bits) as usize,
            Ordering::Less => &self.mant >> (self.bits - bits) as usize,
        };
        Fixed { mant, bits }
    }

    /// The exact rational value of this approximation.
    pub fn to_rational(&self) -> BigRational {
        BigRational::new(self.mant.clone(), BigInt::one() << self.bits as usize)
    }

    /// `2^-k` at precision `bits`.
    pub fn epsilon(k: u32, bits: u32) -> Self {
        let mant = if k <= bits {
            BigInt::one() << (bits - k) as usize
        } else {
            BigInt::zero()
        };
        Fixed { mant, bits }
    }

    /// Square root rounded up by one unit in the last place; panics on
    /// negative input.
    pub fn sqrt_up(&self) -> Self {
        assert!(!self.mant.is_negative(), "square root of a negative number");
        let scaled = &self.mant << self.bits as usize;
        Fixed {
            mant: num_integer::Roots::sqrt(&scaled) + 1,
            bits: self.bits,
        }
    }

    pub fn abs(&self) -> Self {
        Fixed {
            mant: self.mant.abs(),
            bits: self.bits,
        }
    }

    fn aligned(&self, other: &Self) -> (BigInt, BigInt, u32) {
        let bits = self.bits.max(other.bits);
        (
            &self.mant << (bits - self.bits) as usize,
            &other.mant << (bits - other.bits) as usize,
            bits,
        )
    }

    /// Decimal rendering with `digits` fractional digits (truncated).
    pub fn to_decimal(&self, digits: usize) -> String {
        let q = self.to_rational();
        let neg = q.is_negative();
        let q = q.abs();
        let scaled = (q.numer() * BigInt::from(10).pow(digits as u32)) / q.denom();
        let s = scaled.to_string();
        let s = format!("{:0>width$}", s, width = digits + 1);
        let (i, f) = s.split_at(s.len() - digits);
        format!("{}{}{}{}", if neg { "-" } else { "" }, i, if digits > 0 { "." } else { "" }, f)
    }
}

impl PartialEq for Fixed {
    fn eq(&self, other: &Self) -> bool {
        let (a, b, _) = self.aligned(other);
        a == b
    }
}

impl PartialOrd for Fixed {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        let (a, b, _) = self.aligned(other);
        Some(a.cmp(&b))
    }
}

impl Add for Fixed {
    type Output = Fixed;
    fn add(self, rhs: Self) -> Fixed {
        let (a, b, bits) = self.aligned(&rhs);
        Fixed { mant: a + b, bits }
    }
}

impl Sub for Fixed {
    type Output = Fixed;
    fn sub(self, rhs: Self) -> Fixed {
        let (a, b, bits) = self.aligned(&rhs);
        Fixed { mant: a - b, bits }
    }
}

impl Mul for Fixed {
    type Output = Fixed;
    fn mul(self, rhs: Self) -> Fixed {
        let bits = self.bits.max(rhs.bits);
        let shift = self.bits + rhs.bits - bits;
        Fixed {
            mant: (self.mant * rhs.mant) >> shift as usize,
            bits,
        }
    }
}

impl Div for Fixed {
    type Output = Fixed;
    fn div(self, rhs: Self) -> Fixed {
        assert!(!rhs.mant.is_zero(), "fixed-point division by zero");
        let bits = self.bits.max(rhs.bits);
        let shift = bits + rhs.bits - self.bits;
        let num = self.mant << shift as usize;
        Fixed {
            mant: num_integer::Integer::div_floor(&num, &rhs.mant),
            bits,
        }
    }
}

impl Rem for Fixed {
    type Output = Fixed;
    fn rem(self, rhs: Self) -> Fixed {
        let (a, b, bits) = self.aligned(&rhs);
        Fixed { mant: a % b, bits }
    }
}

impl Neg for Fixed {
    type Output = Fixed;
    fn neg(self) -> Fixed {
        Fixed {
            mant: -self.mant,
            bits: self.bits,
        }
    }
}

impl Zero for Fixed {
    fn zero() -> Self {
        Fixed {
            mant: BigInt::zero(),
            bits: 0,
        }
    }
    fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }
}

impl One for Fixed {
    fn one() -> Self {
        Fixed {
            mant: BigInt::one(),
            bits: 0,
        }
    }
}

impl Num for Fixed {
    type FromStrRadixErr = num_bigint::ParseBigIntError;

    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        Ok(Fixed {
            mant: BigInt::from_str_radix(s, radix)?,
            bits: 0,
        })
    }
}

impl fmt::Display for Fixed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = (self.bits as f64 * std::f64::consts::LOG10_2) as usize;
        write!(f, "{}", self.to_decimal(digits))
    }
}

/// Scalars the root finder can iterate over.
pub trait Real: Clone + PartialOrd + Num + Neg<Output = Self> + fmt::Debug {
    /// Converts `x` at the precision of `like`.
    fn from_f64_as(x: f64, like: &Self) -> Self;
    fn from_rational_as(q: &BigRational, like: &Self) -> Self;
    fn to_f64(&self) -> f64;
}

impl Real for f64 {
    fn from_f64_as(x: f64, _: &Self) -> Self {
        x
    }
    fn from_rational_as(q: &BigRational, _: &Self) -> Self {
        q.to_f64().unwrap_or(f64::NAN)
    }
    fn to_f64(&self) -> f64 {
        *self
    }
}

impl Real for f32 {
    fn from_f64_as(x: f64, _: &Self) -> Self {
        x as f32
    }
    fn from_rational_as(q: &BigRational, _: &Self) -> Self {
        q.to_f32().unwrap_or(f32::NAN)
    }
    fn to_f64(&self) -> f64 {
        *self as f64
    }
}

impl Real for Fixed {
    fn from_f64_as(x: f64, like: &Self) -> Self {
        Fixed::from_f64(x, like.bits)
    }
    fn from_rational_as(q: &BigRational, like: &Self) -> Self {
        Fixed::from_rational(q, like.bits)
    }
    fn to_f64(&self) -> f64 {
        self.to_rational().to_f64().unwrap_or(f64::NAN)
    }
}
