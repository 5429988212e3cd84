use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::algebra::QuotientAlgebra;
use super::{tschirnhaus, ReducedQuartic};
use crate::arith::integer::{is_rational_square, squarefree_part_with, DEFAULT_FACTOR_BOUND};
use crate::brauer::{brauer_class_with, witt_invariant_diagonal_with, BrauerClass};
use crate::error::{Error, Result};
use crate::QPoly;

pub type Matrix3 = [[BigRational; 3]; 3];

/// The trace form restricted to the trace-zero hyperplane.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TraceFormData {
    pub gram: Matrix3,
    pub diagonal: Vec<BigRational>,
    /// `P` with `P · gram · Pᵀ = diag(diagonal)`.
    pub transform: Matrix3,
    pub disc_class: BigInt,
    pub witt: BrauerClass,
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Gram matrix of `Tr(xy)` on `β, β² - Tr(β²)/4, β³ - Tr(β³)/4`.
pub fn trace_gram(f: &ReducedQuartic) -> Matrix3 {
    let alg = QuotientAlgebra::new(&f.poly());
    let s = alg.power_sums().to_vec();
    let four = q(4);
    let basis = [
        QPoly::x(),
        QPoly::new(vec![-&s[2] / &four, q(0), q(1)]),
        QPoly::new(vec![-&s[3] / &four, q(0), q(0), q(1)]),
    ];
    let mut g: Matrix3 = Default::default();
    for i in 0..3 {
        for j in i..3 {
            let t = alg.trace(&alg.mul(&basis[i], &basis[j]));
            g[i][j] = t.clone();
            g[j][i] = t;
        }
    }
    g
}

fn mat_mul(a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = a.len();
    let mut out = vec![vec![BigRational::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                out[i][j] += &a[i][k] * &b[k][j];
            }
        }
    }
    out
}

fn transpose(a: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| a[j][i].clone()).collect()).collect()
}

/// Diagonalizes a nonsingular symmetric matrix by congruence. Returns the
/// diagonal and `P` with `P G Pᵀ` diagonal; the identity is re-checked.
pub fn diagonalize(g: &[Vec<BigRational>]) -> Result<(Vec<BigRational>, Vec<Vec<BigRational>>)> {
    let n = g.len();
    let mut a = g.to_vec();
    let mut p: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect())
        .collect();
    for k in 0..n {
        if a[k][k].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a[j][j].is_zero()) {
                a.swap(k, j);
                for row in a.iter_mut() {
                    row.swap(k, j);
                }
                p.swap(k, j);
            } else if let Some(j) = (k + 1..n).find(|&j| !a[k][j].is_zero()) {
                // both diagonal entries vanish: e_k + e_j is anisotropic
                for c in 0..n {
                    let v = a[j][c].clone();
                    a[k][c] += v;
                }
                for r in 0..n {
                    let v = a[r][j].clone();
                    a[r][k] += v;
                }
                for c in 0..n {
                    let v = p[j][c].clone();
                    p[k][c] += v;
                }
            } else {
                return Err(Error::NotSquarefree);
            }
        }
        let pivot = a[k][k].clone();
        for j in k + 1..n {
            if a[j][k].is_zero() {
                continue;
            }
            let factor = &a[j][k] / &pivot;
            for c in 0..n {
                let v = &factor * &a[k][c];
                a[j][c] -= v;
            }
            for r in 0..n {
                let v = &factor * &a[r][k];
                a[r][j] -= v;
            }
            for c in 0..n {
                let v = &factor * &p[k][c];
                p[j][c] -= v;
            }
        }
    }
    let diag: Vec<BigRational> = (0..n).map(|i| a[i][i].clone()).collect();
    let check = mat_mul(&mat_mul(&p, g), &transpose(&p));
    for i in 0..n {
        for j in 0..n {
            let want = if i == j { diag[i].clone() } else { BigRational::zero() };
            assert_eq!(check[i][j], want, "congruence diagonalization failed");
        }
    }
    Ok((diag, p))
}

pub fn trace_form(f: &ReducedQuartic) -> Result<TraceFormData> {
    trace_form_with(f, DEFAULT_FACTOR_BOUND)
}

pub fn trace_form_with(f: &ReducedQuartic, bound: u64) -> Result<TraceFormData> {
    let gram = trace_gram(f);
    let rows: Vec<Vec<BigRational>> = gram.iter().map(|r| r.to_vec()).collect();
    let (diagonal, p) = diagonalize(&rows)?;
    let det = diagonal.iter().fold(BigRational::one(), |acc, d| acc * d);
    let disc_class = squarefree_part_with(&det, bound)?;
    let witt = witt_invariant_diagonal_with(&diagonal, bound)?;
    let mut transform: Matrix3 = Default::default();
    for i in 0..3 {
        for j in 0..3 {
            transform[i][j] = p[i][j].clone();
        }
    }
    Ok(TraceFormData {
        gram,
        diagonal,
        transform,
        disc_class,
        witt,
    })
}

/// `ξ ⊗ (-1, -d)` with `ξ = (2ad, 2a³ + 9b² - 8ac)`, or `None` when the
/// closed formula does not apply.
fn closed_formula(f: &ReducedQuartic, bound: u64) -> Result<Option<BrauerClass>> {
    let d = f.discriminant();
    let two_ad = q(2) * &f.a * &d;
    let second = q(2) * &f.a * &f.a * &f.a + q(9) * &f.b * &f.b - q(8) * &f.a * &f.c;
    if f.a.is_zero() || second.is_zero() || is_rational_square(&two_ad) {
        return Ok(None);
    }
    let xi = brauer_class_with(&two_ad, &second, bound)?;
    Ok(Some(xi.product(&brauer_class_with(&q(-1), &-d, bound)?)))
}

pub const PERTURBATION_ATTEMPTS: usize = 20;

pub fn witt_formula(f: &ReducedQuartic) -> Result<BrauerClass> {
    witt_formula_with(f, DEFAULT_FACTOR_BOUND)
}

/// The Witt invariant by the closed formula. Degenerate inputs are first
/// moved by a small pseudorandom Tschirnhaus transformation, which keeps the
/// field and hence the invariant.
pub fn witt_formula_with(f: &ReducedQuartic, bound: u64) -> Result<BrauerClass> {
    if let Some(w) = closed_formula(f, bound)? {
        return Ok(w);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x0c7a_4ed2);
    for _ in 0..PERTURBATION_ATTEMPTS {
        let (m, n, p) = (rng.gen_range(-3..=3), rng.gen_range(-3..=3), rng.gen_range(-3..=3));
        let Ok(g) = tschirnhaus(f, &q(m), &q(n), &q(p)) else {
            continue;
        };
        if let Some(w) = closed_formula(&g, bound)? {
            return Ok(w);
        }
    }
    Err(Error::DegenerateUnresolvable {
        attempts: PERTURBATION_ATTEMPTS,
    })
}

pub fn is_principal(f: &ReducedQuartic) -> Result<bool> {
    is_principal_with(f, DEFAULT_FACTOR_BOUND)
}

/// Principal iff the Witt invariant of the trace form is `(-1, -d)`; a
/// polynomial with `a = 0` is principal as it stands.
pub fn is_principal_with(f: &ReducedQuartic, bound: u64) -> Result<bool> {
    if f.is_principal_shape() {
        return Ok(true);
    }
    let tf = trace_form_with(f, bound)?;
    let d = BigRational::from_integer(tf.disc_class.clone());
    Ok(tf.witt == brauer_class_with(&q(-1), &-d, bound)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brauer::Place;

    #[test]
    fn principal_gram_shape() {
        let f = ReducedQuartic::from_i64(0, 1, -1).unwrap();
        let g = trace_gram(&f);
        let want = [
            [q(0), q(-3), q(4)],
            [q(-3), q(4), q(0)],
            [q(4), q(0), BigRational::new(3.into(), 4.into())],
        ];
        assert_eq!(g, want);
        let tf = trace_form(&f).unwrap();
        assert_eq!(tf.disc_class, BigInt::from(-283));
        assert_eq!(tf.witt, BrauerClass::from_places([Place::Prime(2), Place::Prime(283)]));
    }

    #[test]
    fn zero_pivot_pairs() {
        let g = vec![vec![q(0), q(1)], vec![q(1), q(0)]];
        let (d, _) = diagonalize(&g).unwrap();
        assert_eq!(d, vec![q(2), BigRational::new((-1).into(), 2.into())]);
    }

    #[test]
    fn witt_two_paths() {
        let h = ReducedQuartic::from_i64(-6, 8, 51).unwrap();
        let w = BrauerClass::from_places([Place::Prime(3), Place::Infinity]);
        assert_eq!(trace_form(&h).unwrap().witt, w);
        assert_eq!(witt_formula(&h).unwrap(), w);
        let f = ReducedQuartic::from_i64(0, 1, -1).unwrap();
        assert_eq!(witt_formula(&f).unwrap(), trace_form(&f).unwrap().witt);
        assert!(is_principal(&f).unwrap());
    }
}
