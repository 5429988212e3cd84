#![allow(clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use octahedral::arith::integer::{is_rational_square, squarefree_part};
use octahedral::arith::sturm::count_real_roots;
use octahedral::{complex_roots, rational_reconstruct, QPoly};
use proptest::prelude::*;

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Determinant of the Sylvester matrix, by fraction-field elimination.
fn sylvester_resultant(f: &QPoly, g: &QPoly) -> BigRational {
    let (m, n) = (f.degree().unwrap(), g.degree().unwrap());
    let size = m + n;
    let mut a = vec![vec![BigRational::zero(); size]; size];
    let fc: Vec<_> = f.coeffs().iter().rev().cloned().collect();
    let gc: Vec<_> = g.coeffs().iter().rev().cloned().collect();
    for i in 0..n {
        for (j, c) in fc.iter().enumerate() {
            a[i][i + j] = c.clone();
        }
    }
    for i in 0..m {
        for (j, c) in gc.iter().enumerate() {
            a[n + i][i + j] = c.clone();
        }
    }
    let mut det = BigRational::one();
    for col in 0..size {
        let Some(piv) = (col..size).find(|&r| !a[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if piv != col {
            a.swap(piv, col);
            det = -det;
        }
        det *= a[col][col].clone();
        for r in col + 1..size {
            let factor = &a[r][col] / &a[col][col];
            for c in col..size {
                let v = &factor * &a[col][c];
                a[r][c] -= v;
            }
        }
    }
    det
}

fn poly_strategy(max_deg: usize) -> impl Strategy<Value = QPoly> {
    (1..=max_deg)
        .prop_flat_map(|d| (prop::collection::vec(-9i64..=9, d), prop::sample::select(vec![-3i64, -2, -1, 1, 2, 3])))
        .prop_map(|(mut cs, lead)| {
            cs.push(lead);
            QPoly::from_i64s(&cs)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn resultant_matches_sylvester(f in poly_strategy(5), g in poly_strategy(5)) {
        prop_assert_eq!(f.resultant(&g), sylvester_resultant(&f, &g));
    }

    #[test]
    fn resultant_antisymmetry(f in poly_strategy(5), g in poly_strategy(5)) {
        let (m, n) = (f.degree().unwrap(), g.degree().unwrap());
        let sign = if (m * n) % 2 == 1 { -BigRational::one() } else { BigRational::one() };
        prop_assert_eq!(f.resultant(&g), sign * g.resultant(&f));
    }

    #[test]
    fn quartic_discriminant_closed_form(a in -30i64..=30, b in -30i64..=30, c in -30i64..=30) {
        let f = QPoly::from_i64s(&[c, b, a, 0, 1]);
        let (a, b, c) = (q(a), q(b), q(c));
        let want = q(16) * a.pow(4) * &c - q(4) * a.pow(3) * b.pow(2) - q(128) * a.pow(2) * c.pow(2)
            + q(144) * &a * b.pow(2) * &c - q(27) * b.pow(4) + q(256) * c.pow(3);
        prop_assert_eq!(f.discriminant(), want);
    }

    #[test]
    fn squarefree_part_is_a_square_class_invariant(
        n in (-100_000_000_000i64..=100_000_000_000).prop_filter("nonzero", |n| *n != 0),
        k in 1i64..=1000,
        den in 1i64..=50,
    ) {
        let x = BigRational::new(BigInt::from(n), BigInt::from(den));
        let y = &x * q(k) * q(k);
        let s = squarefree_part(&x).unwrap();
        prop_assert_eq!(&s, &squarefree_part(&y).unwrap());
        prop_assert!(is_rational_square(&(x / BigRational::from_integer(s.clone()))));
        for p in [2i64, 3, 5, 7, 11, 13] {
            prop_assert!(!(&s % BigInt::from(p * p)).is_zero() || s.is_zero());
        }
    }

    #[test]
    fn reconstruction_recovers_small_fractions(p in -10_000i64..=10_000, d in 1i64..=1000, wiggle in -1000i64..=1000) {
        let target = BigRational::new(BigInt::from(p), BigInt::from(d));
        let bound = BigInt::from(1000);
        // the interval has width below 1/bound², so it holds one fraction of height <= bound
        let err = BigRational::new(BigInt::one(), BigInt::from(4) * &bound * &bound);
        let z = &target + &err * BigRational::new(BigInt::from(wiggle), BigInt::from(1000));
        prop_assert_eq!(rational_reconstruct(&z, &err, &bound), Some(target));
    }

    #[test]
    fn sturm_counts_known_real_roots(roots in prop::collection::btree_set(-20i64..=20, 0..4), k in 1i64..=9) {
        let mut f = QPoly::from_i64s(&[k, 0, 1]);
        for r in &roots {
            f = &f * &QPoly::from_i64s(&[-r, 1]);
        }
        prop_assert_eq!(count_real_roots(&f), roots.len());
    }
}

#[test]
fn certified_roots_are_consistent_with_coefficients() {
    for cs in [[-1i64, -1, 0, 0, 1], [-43, 37, 0, 0, 1], [3, 5, 0, 0, 1], [1, 1, -6, 0, 1]] {
        let f = QPoly::from_i64s(&cs);
        let roots = complex_roots(&f, 30).unwrap();
        assert_eq!(roots.len(), 4);
        let sum: f64 = roots.iter().map(|r| r.to_c64().re).sum();
        let prod: f64 = roots.iter().map(|r| r.to_c64()).product::<num_complex::Complex<f64>>().re;
        assert!(sum.abs() < 1e-9);
        assert!((prod - cs[0] as f64).abs() < 1e-6 * (cs[0].abs() as f64).max(1.0));
        assert!(roots.iter().all(|r| r.residual(&f, 128).to_rational().abs() < BigRational::new(1.into(), BigInt::from(10).pow(20))));
    }
}
