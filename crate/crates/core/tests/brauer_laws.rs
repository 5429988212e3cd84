use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use octahedral::brauer::{brauer_class, hilbert_symbol, Place};
use proptest::prelude::*;

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn squarefree(n: i64) -> bool {
    n != 0 && (2..=n.unsigned_abs().isqrt() as i64).all(|k| n % (k * k) != 0)
}

fn primes_dividing(mut n: u64, out: &mut BTreeSet<u64>) {
    let mut p = 2;
    while p * p <= n {
        while n.is_multiple_of(p) {
            out.insert(p);
            n /= p;
        }
        p += 1;
    }
    if n > 1 {
        out.insert(n);
    }
}

/// `(a, b)_p` by searching for a primitive solution of `ax² + by² = z²`
/// modulo `p^n`. Up to scaling, `x = 1` or `y = 1`: a primitive solution
/// with `z` a unit has `x` or `y` a unit as well.
fn brute_force_hilbert(a: i64, b: i64, p: u64) -> i8 {
    let n = match p {
        2 => 7,
        3 | 5 | 7 => 5,
        _ => 4,
    };
    let m = p.pow(n) as i64;
    let mut is_square = vec![false; m as usize];
    for z in 0..m {
        is_square[(z * z % m) as usize] = true;
    }
    let hit = |u: i64, v: i64| (0..m).any(|y| is_square[(u + v * y % m * y).rem_euclid(m) as usize]);
    if hit(a.rem_euclid(m), b.rem_euclid(m)) || hit(b.rem_euclid(m), a.rem_euclid(m)) {
        1
    } else {
        -1
    }
}

#[test]
fn local_symbols_match_brute_force() {
    let values: Vec<i64> = (-20i64..=20).filter(|&n| squarefree(n)).collect();
    for &a in &values {
        for &b in &values {
            for p in [2u64, 3, 5, 7, 11, 13] {
                let got = hilbert_symbol(&q(a), &q(b), Place::Prime(p)).unwrap();
                assert_eq!(got, brute_force_hilbert(a, b, p), "({a}, {b})_{p}");
            }
            let real = if a < 0 && b < 0 { -1 } else { 1 };
            assert_eq!(hilbert_symbol(&q(a), &q(b), Place::Infinity).unwrap(), real);
        }
    }
}

fn factorable() -> impl Strategy<Value = (i64, i64)> {
    (
        (-1_000_000i64..=1_000_000).prop_filter("nonzero", |n| *n != 0),
        1i64..=10_000,
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn product_formula((an, ad) in factorable(), (bn, bd) in factorable()) {
        let (a, b) = (rat(an, ad), rat(bn, bd));
        let mut primes = BTreeSet::from([2u64]);
        for n in [an, ad, bn, bd] {
            primes_dividing(n.unsigned_abs(), &mut primes);
        }
        let mut prod = hilbert_symbol(&a, &b, Place::Infinity).unwrap();
        for p in primes {
            prod *= hilbert_symbol(&a, &b, Place::Prime(p)).unwrap();
        }
        prop_assert_eq!(prod, 1);
        prop_assert_eq!(brauer_class(&a, &b).unwrap().ramified().len() % 2, 0);
    }

    #[test]
    fn bilinear_and_symmetric((an, ad) in factorable(), (bn, bd) in factorable(), (cn, cd) in factorable()) {
        let (a, b, c) = (rat(an, ad), rat(bn, bd), rat(cn, cd));
        let ab = brauer_class(&a, &b).unwrap();
        let ac = brauer_class(&a, &c).unwrap();
        prop_assert_eq!(brauer_class(&a, &(&b * &c)).unwrap(), ab.product(&ac));
        prop_assert_eq!(brauer_class(&(&b * &c), &a).unwrap(), ab.product(&ac));
        prop_assert_eq!(brauer_class(&b, &a).unwrap(), ab);
    }

    #[test]
    fn square_invariance((an, ad) in factorable(), (bn, bd) in factorable(), k in 1i64..=500, l in 1i64..=500) {
        let (a, b) = (rat(an, ad), rat(bn, bd));
        let a2 = &a * rat(k, l) * rat(k, l);
        prop_assert_eq!(brauer_class(&a2, &b).unwrap(), brauer_class(&a, &b).unwrap());
        prop_assert!(brauer_class(&a, &(rat(k, l) * rat(k, l))).unwrap().is_trivial());
    }

    #[test]
    fn steinberg_relations((an, ad) in factorable()) {
        let a = rat(an, ad);
        prop_assert!(brauer_class(&a, &-a.clone()).unwrap().is_trivial());
        if a != q(1) {
            prop_assert!(brauer_class(&a, &(q(1) - &a)).unwrap().is_trivial());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    /// `(-1, -d) ⊗ (2, d) = (-2, -3d)` for squarefree `d`.
    #[test]
    fn minus_two_identity(d in (-1_000_000i64..=1_000_000).prop_filter("squarefree", |d| squarefree(*d))) {
        let lhs = brauer_class(&q(-1), &q(-d)).unwrap().product(&brauer_class(&q(2), &q(d)).unwrap());
        prop_assert_eq!(lhs, brauer_class(&q(-2), &q(-3 * d)).unwrap());
    }
}
