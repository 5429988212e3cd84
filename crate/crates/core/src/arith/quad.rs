//! Elements `u + v√t` of a quadratic field Q(√t).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::field::Field;

/// `u + v√t`. The radicand is `None` for elements created without context
/// (the rational constants produced by `zero()`/`one()`); such elements must
/// have `v = 0` and adopt the radicand of whatever they are combined with.
#[derive(Clone, Debug, Serialize)]
pub struct QuadElement {
    pub u: BigRational,
    pub v: BigRational,
    #[serde(skip)]
    pub t: Option<BigRational>,
}

impl QuadElement {
    pub fn new(u: BigRational, v: BigRational, t: BigRational) -> Self {
        QuadElement { u, v, t: Some(t) }
    }

    pub fn rational(u: BigRational) -> Self {
        QuadElement {
            u,
            v: BigRational::zero(),
            t: None,
        }
    }

    /// `√t` itself.
    pub fn sqrt_of(t: BigRational) -> Self {
        Self::new(BigRational::zero(), BigRational::one(), t)
    }

    pub fn radicand(&self) -> Option<&BigRational> {
        self.t.as_ref()
    }

    pub fn is_rational(&self) -> bool {
        self.v.is_zero()
    }

    /// The Galois conjugate `u - v√t`.
    pub fn conjugate(&self) -> Self {
        QuadElement {
            u: self.u.clone(),
            v: -self.v.clone(),
            t: self.t.clone(),
        }
    }

    pub fn norm(&self) -> BigRational {
        let t = self.t.clone().unwrap_or_else(BigRational::zero);
        &self.u * &self.u - t * &self.v * &self.v
    }

    fn merge(a: &Option<BigRational>, b: &Option<BigRational>) -> Option<BigRational> {
        match (a, b) {
            (Some(x), Some(y)) => {
                assert_eq!(x, y, "mixing elements of different quadratic fields");
                Some(x.clone())
            }
            (Some(x), None) | (None, Some(x)) => Some(x.clone()),
            (None, None) => None,
        }
    }
}

impl PartialEq for QuadElement {
    fn eq(&self, other: &Self) -> bool {
        self.u == other.u && self.v == other.v
    }
}

impl Zero for QuadElement {
    fn zero() -> Self {
        Self::rational(BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }
}

impl One for QuadElement {
    fn one() -> Self {
        Self::rational(BigRational::one())
    }
}

impl Add for QuadElement {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        QuadElement {
            t: Self::merge(&self.t, &rhs.t),
            u: self.u + rhs.u,
            v: self.v + rhs.v,
        }
    }
}

impl Sub for QuadElement {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        QuadElement {
            t: Self::merge(&self.t, &rhs.t),
            u: self.u - rhs.u,
            v: self.v - rhs.v,
        }
    }
}

impl Mul for QuadElement {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let t = Self::merge(&self.t, &rhs.t);
        let vv = &self.v * &rhs.v;
        let u = &self.u * &rhs.u
            + match &t {
                Some(t) => t * vv,
                None => {
                    debug_assert!(vv.is_zero());
                    BigRational::zero()
                }
            };
        let v = &self.u * &rhs.v + &self.v * &rhs.u;
        QuadElement { u, v, t }
    }
}

impl Div for QuadElement {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let t = Self::merge(&self.t, &rhs.t);
        let n = QuadElement {
            t: t.clone(),
            ..rhs.clone()
        }
        .norm();
        assert!(!n.is_zero(), "division by zero in quadratic field");
        let num = self * rhs.conjugate();
        QuadElement {
            u: num.u / &n,
            v: num.v / &n,
            t,
        }
    }
}

impl Neg for QuadElement {
    type Output = Self;
    fn neg(self) -> Self {
        QuadElement {
            u: -self.u,
            v: -self.v,
            t: self.t,
        }
    }
}

impl Field for QuadElement {
    const EXACT: bool = true;

    fn from_rational(q: &BigRational) -> Self {
        Self::rational(q.clone())
    }
}

impl fmt::Display for QuadElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.v.is_zero() {
            return write!(f, "{}", self.u);
        }
        let t = self.t.as_ref().map(|t| t.to_string()).unwrap_or_default();
        write!(f, "{} + {}*sqrt({})", self.u, self.v, t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{int, rat};

    #[test]
    fn arithmetic_in_q_sqrt_minus_one() {
        let i = QuadElement::sqrt_of(int(-1));
        let one = QuadElement::one();
        assert_eq!(i.clone() * i.clone(), -one.clone());
        let z = one.clone() + i.clone();
        let w = z.clone() / (one.clone() - i.clone());
        assert_eq!(w, i);
        assert_eq!(z.norm(), int(2));
        let half = QuadElement::rational(rat(1, 2));
        assert_eq!((half.clone() + half).radicand(), None);
    }
}
