//! Weil restriction of the 3-torsion polynomial: `f_t(X + Y√t) = P + R√t`
//! and the resultant `Res_Y(P, R)`.

use num_rational::BigRational;

use crate::arith::poly::UniPoly;
use crate::field::Field;

/// Bivariate polynomial as a list of coefficients of `Y^j` in `F[X]`.
pub type Bivariate<F> = Vec<UniPoly<F>>;

#[derive(Clone, Debug, PartialEq)]
pub struct WeilRecord<F: Field> {
    pub p: Bivariate<F>,
    pub r: Bivariate<F>,
    pub resultant: UniPoly<F>,
    /// `Res / h` when the division is exact.
    pub cofactor: Option<UniPoly<F>>,
    pub divides: bool,
}

fn binomial(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

fn add_term<F: Field>(poly: &mut Bivariate<F>, y_deg: usize, x_deg: usize, c: F) {
    if poly.len() <= y_deg {
        poly.resize(y_deg + 1, UniPoly::zero());
    }
    poly[y_deg] = &poly[y_deg] + &UniPoly::monomial(c, x_deg);
}

/// `P, R` with `Σ (α_k + β_k√t)(X + Y√t)^k = P + R√t`.
pub fn weil_restriction<F: Field>(alpha: &[F], beta: &[F], t: &F) -> (Bivariate<F>, Bivariate<F>) {
    let (mut p, mut r) = (Vec::new(), Vec::new());
    for k in 0..alpha.len().max(beta.len()) {
        let a = alpha.get(k).cloned().unwrap_or_else(F::zero);
        let b = beta.get(k).cloned().unwrap_or_else(F::zero);
        for i in 0..=k {
            let gamma = F::from_i64(binomial(k, i)) * t.pow((i / 2) as u32);
            if i % 2 == 0 {
                add_term(&mut p, i, k - i, a.clone() * gamma.clone());
                add_term(&mut r, i, k - i, b.clone() * gamma);
            } else {
                add_term(&mut p, i, k - i, b.clone() * gamma.clone() * t.clone());
                add_term(&mut r, i, k - i, a.clone() * gamma);
            }
        }
    }
    let trim = |v: &mut Bivariate<F>| {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
    };
    trim(&mut p);
    trim(&mut r);
    (p, r)
}

fn at<F: Field>(poly: &Bivariate<F>, x: &F) -> UniPoly<F> {
    UniPoly::new(poly.iter().map(|c| c.eval(x)).collect())
}

fn total_degree<F: Field>(poly: &Bivariate<F>) -> usize {
    poly.iter()
        .enumerate()
        .filter_map(|(j, c)| c.degree().map(|d| d + j))
        .max()
        .unwrap_or(0)
}

/// `Res_Y(P, R)` by evaluation at integer `X` and interpolation; nodes where
/// a leading coefficient in `Y` vanishes are skipped.
pub fn resultant_y<F: Field>(p: &Bivariate<F>, r: &Bivariate<F>) -> UniPoly<F> {
    let bound = total_degree(p) * total_degree(r);
    let (dp, dr) = (p.len().saturating_sub(1), r.len().saturating_sub(1));
    let mut points = Vec::with_capacity(bound + 3);
    let mut x = 1i64;
    while points.len() < bound + 3 {
        let xf = F::from_i64(x);
        x += 1;
        let (py, ry) = (at(p, &xf), at(r, &xf));
        if py.degree() != Some(dp) || ry.degree() != Some(dr) {
            continue;
        }
        let v = py.resultant(&ry);
        points.push((xf, v));
    }
    let res = UniPoly::interpolate(&points[..=bound]);
    for (xf, v) in &points[bound + 1..] {
        assert_eq!(&res.eval(xf), v, "resultant exceeds its degree bound");
    }
    res
}

/// Expands `f_t(X + Y√t)`, forms `Res_Y(P, R)` and divides it by `h`.
pub fn weil_restriction_factor<F: Field>(alpha: &[F], beta: &[F], t: &F, h: &UniPoly<F>) -> WeilRecord<F> {
    let (p, r) = weil_restriction(alpha, beta, t);
    let resultant = resultant_y(&p, &r);
    let cofactor = resultant.div_exact(h);
    WeilRecord {
        divides: cofactor.is_some() && !resultant.is_zero(),
        p,
        r,
        resultant,
        cofactor,
    }
}

/// The rational-`t` instance, with `f_t` taken from the standard family.
pub fn weil_restriction_at(t: &BigRational) -> WeilRecord<BigRational> {
    let fam = super::SymbolicFamily::standard();
    let alpha: Vec<BigRational> = fam.f.iter().map(|(a, _)| a.eval(t)).collect();
    let beta: Vec<BigRational> = fam.f.iter().map(|(_, b)| b.eval(t)).collect();
    weil_restriction_factor(&alpha, &beta, t, &fam.h_at(t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn resultant_at_minus_one() {
        let t = BigRational::from_integer(BigInt::from(-1));
        let rec = weil_restriction_at(&t);
        assert_eq!(rec.resultant.degree(), Some(16));
        assert!(rec.divides);
        assert_eq!(rec.cofactor.unwrap().degree(), Some(12));
    }

    #[test]
    fn expansion_recombines() {
        // (X + Y√t)² with t = 2 evaluated at X = 1, Y = 1: (1 + √2)² = 3 + 2√2
        let two = BigRational::from_integer(BigInt::from(2));
        let z = BigRational::from_integer(BigInt::from(0));
        let one = BigRational::from_integer(BigInt::from(1));
        let (p, r) = weil_restriction(&[z.clone(), z.clone(), one.clone()], &[z.clone(), z.clone(), z], &two);
        let ev = |b: &Bivariate<BigRational>| at(b, &one).eval(&one);
        assert_eq!(ev(&p), BigRational::from_integer(3.into()));
        assert_eq!(ev(&r), two);
    }
}
