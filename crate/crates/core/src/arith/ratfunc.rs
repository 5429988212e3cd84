//! The rational function field Q(s).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::poly::UniPoly;
use crate::field::Field;

type QPoly = UniPoly<BigRational>;

/// A reduced quotient `num / den` with `den` monic and coprime to `num`.
#[derive(Clone, PartialEq, Debug)]
pub struct RatFunc {
    num: QPoly,
    den: QPoly,
}

impl RatFunc {
    pub fn new(num: QPoly, den: QPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator in rational function");
        if num.is_zero() {
            return RatFunc {
                num,
                den: QPoly::one(),
            };
        }
        let g = if den.degree() == Some(0) { QPoly::one() } else { num.gcd(&den) };
        let (mut num, mut den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        };
        let lc = den.leading();
        if !lc.is_one() {
            let inv = BigRational::one() / lc;
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RatFunc { num, den }
    }

    pub fn from_poly(p: QPoly) -> Self {
        RatFunc {
            num: p,
            den: QPoly::one(),
        }
    }

    /// The generator `s`.
    pub fn s() -> Self {
        Self::from_poly(QPoly::x())
    }

    pub fn numer(&self) -> &QPoly {
        &self.num
    }

    pub fn denom(&self) -> &QPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    /// Evaluates at a rational point; `None` at a pole.
    pub fn eval(&self, s: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(s);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(s) / d)
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        Self::from_poly(QPoly::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        Self::from_poly(QPoly::one())
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: Self) -> Self {
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den);
        }
        RatFunc::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: Self) -> Self {
        assert!(!rhs.is_zero(), "division by zero rational function");
        RatFunc::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> Self {
        RatFunc {
            num: -&self.num,
            den: self.den,
        }
    }
}

impl Field for RatFunc {
    const EXACT: bool = true;

    fn from_rational(q: &BigRational) -> Self {
        Self::from_poly(QPoly::constant(q.clone()))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.num.to_string().replace('x', "s");
        if self.is_polynomial() {
            write!(f, "{num}")
        } else {
            write!(f, "({num})/({})", self.den.to_string().replace('x', "s"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::int;

    #[test]
    fn normalizes_common_factors() {
        let s = RatFunc::s();
        let one = RatFunc::one();
        let q = (s.clone() * s.clone() - one.clone()) / (s.clone() - one.clone());
        assert_eq!(q, s.clone() + one.clone());
        assert!(q.is_polynomial());
        assert_eq!((s.clone() / s.clone()), one);
    }

    #[test]
    fn resultant_over_function_field() {
        // Res(X - s, X - 1) = s - 1
        let s = RatFunc::s();
        let f = UniPoly::new(vec![-s.clone(), RatFunc::one()]);
        let g = UniPoly::new(vec![-RatFunc::one(), RatFunc::one()]);
        assert_eq!(f.resultant(&g), s.clone() - RatFunc::one());
        assert_eq!((s.clone() * s).eval(&int(3)), Some(int(9)));
    }
}
