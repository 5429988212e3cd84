//! Sturm sequences for counting real roots.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::QPoly;

pub fn sturm_sequence(f: &QPoly) -> Vec<QPoly> {
    let mut seq = vec![f.clone(), f.derivative()];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            break;
        }
        let r = seq[n - 2].rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(-&r);
    }
    seq
}

fn sign_changes(signs: impl Iterator<Item = i8>) -> usize {
    let mut prev = 0i8;
    let mut count = 0;
    for s in signs.filter(|&s| s != 0) {
        if prev != 0 && s != prev {
            count += 1;
        }
        prev = s;
    }
    count
}

fn sign(q: &BigRational) -> i8 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

fn at_infinity(seq: &[QPoly], positive: bool) -> usize {
    sign_changes(seq.iter().map(|p| {
        let s = sign(&p.leading());
        let odd = p.degree().unwrap_or(0) % 2 == 1;
        if !positive && odd {
            -s
        } else {
            s
        }
    }))
}

/// Number of distinct real roots.
pub fn count_real_roots(f: &QPoly) -> usize {
    if f.is_zero() || f.degree() == Some(0) {
        return 0;
    }
    let seq = sturm_sequence(f);
    at_infinity(&seq, false) - at_infinity(&seq, true)
}

/// Number of distinct real roots in `(a, b]`.
pub fn count_roots_between(f: &QPoly, a: &BigRational, b: &BigRational) -> usize {
    let seq = sturm_sequence(f);
    let at = |x: &BigRational| sign_changes(seq.iter().map(|p| sign(&p.eval(x))));
    let (va, vb) = (at(a), at(b));
    if f.eval(a).is_zero() {
        // a root at the left end is excluded
        va.saturating_sub(vb)
    } else {
        va - vb
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::int;

    #[test]
    fn counts() {
        assert_eq!(count_real_roots(&QPoly::from_i64s(&[-1, 1, 0, 0, 1])), 2);
        assert_eq!(count_real_roots(&QPoly::from_i64s(&[1, 0, 0, 0, 1])), 0);
        assert_eq!(count_real_roots(&QPoly::from_i64s(&[24, -50, 35, -10, 1])), 4);
        let f = QPoly::from_i64s(&[24, -50, 35, -10, 1]);
        assert_eq!(count_roots_between(&f, &int(0), &int(2)), 2);
    }
}
