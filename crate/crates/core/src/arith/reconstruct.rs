//! Recovering small rationals from approximations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// The rational of least denominator in the closed interval `[lo, hi]`.
pub fn simplest_between(lo: &BigRational, hi: &BigRational) -> BigRational {
    assert!(lo <= hi, "empty interval");
    if !lo.is_positive() && !hi.is_negative() {
        return BigRational::zero();
    }
    if hi.is_negative() {
        return -simplest_between(&-hi, &-lo);
    }
    // continued fraction expansion of both ends until they diverge
    let mut terms: Vec<BigInt> = Vec::new();
    let (mut a, mut b) = (lo.clone(), hi.clone());
    let tail = loop {
        let c = a.ceil();
        if c <= b {
            break c.to_integer();
        }
        let fl = a.floor();
        terms.push(fl.to_integer());
        let na = BigRational::one() / (&b - &fl);
        let nb = BigRational::one() / (&a - &fl);
        a = na;
        b = nb;
    };
    let mut acc = BigRational::from_integer(tail);
    for t in terms.into_iter().rev() {
        acc = BigRational::from_integer(t) + acc.recip();
    }
    acc
}

/// The rational `p/q` with `q <= bound` closest in simplicity to `z`, if one
/// lies within `err` of it. Callers must verify the result exactly.
pub fn rational_reconstruct(z: &BigRational, err: &BigRational, bound: &BigInt) -> Option<BigRational> {
    let lo = z - err;
    let hi = z + err;
    let q = simplest_between(&lo, &hi);
    (q.denom() <= bound).then_some(q)
}

/// Denominator-free variant for integers: the nearest integer when it lies
/// within `err`.
pub fn integer_reconstruct(z: &BigRational, err: &BigRational) -> Option<BigInt> {
    let r = z.round();
    ((&r - z).abs() <= *err).then(|| r.to_integer())
}

/// Whether `q` is in lowest terms.
pub fn is_reduced(q: &BigRational) -> bool {
    q.numer().gcd(q.denom()).is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::integer::parse_decimal;
    use crate::field::rat;

    fn window(s: &str, e: i64) -> (BigRational, BigRational) {
        (parse_decimal(s).unwrap(), rat(1, 10i64.pow(e as u32)))
    }

    #[test]
    fn small_examples() {
        let b = BigInt::from(100);
        let (z, e) = window("0.50000000", 8);
        assert_eq!(rational_reconstruct(&z, &e, &b), Some(rat(1, 2)));
        let (z, e) = window("0.33333333", 8);
        assert_eq!(rational_reconstruct(&z, &e, &b), Some(rat(1, 3)));
        let (z, e) = window("0.1415926535", 10);
        assert_eq!(rational_reconstruct(&z, &e, &BigInt::from(10)), None);
    }

    #[test]
    fn simplest_rational_is_minimal() {
        assert_eq!(simplest_between(&rat(3, 10), &rat(4, 10)), rat(1, 3));
        assert_eq!(simplest_between(&rat(-4, 10), &rat(-3, 10)), rat(-1, 3));
        assert_eq!(simplest_between(&rat(5, 2), &rat(7, 2)), rat(3, 1));
        assert!(is_reduced(&simplest_between(&rat(31, 100), &rat(32, 100))));
    }
}
