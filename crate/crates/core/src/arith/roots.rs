//! Certified complex roots of rational polynomials.
//!
//! Roots are seeded with an Aberth iteration in `f64`, refined by the same
//! iteration over [`Fixed`], and then certified with exact rational
//! arithmetic: each approximation `z` carries the inclusion radius
//! `n |f(z)| / |f'(z)|`, and the discs must be pairwise disjoint.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::fixed::{Fixed, Real};
use crate::error::{Error, Result};
use crate::QPoly;

/// One certified root: `re + i im` lies within `error` of a root of `f`,
/// and `|f(re + i im)| < error`.
#[derive(Clone, Debug)]
pub struct ComplexApprox {
    pub re: Fixed,
    pub im: Fixed,
    pub error: BigRational,
}

impl ComplexApprox {
    pub fn value(&self) -> Complex<Fixed> {
        Complex::new(self.re.clone(), self.im.clone())
    }

    pub fn bits(&self) -> u32 {
        self.re.bits()
    }

    pub fn to_c64(&self) -> Complex<f64> {
        Complex::new(self.re.to_f64(), self.im.to_f64())
    }

    /// `|f(z)|` evaluated in fixed point at `bits` of precision.
    pub fn residual(&self, f: &QPoly, bits: u32) -> Fixed {
        let z = Complex::new(self.re.with_bits(bits), self.im.with_bits(bits));
        let coeffs: Vec<Complex<Fixed>> = f
            .coeffs()
            .iter()
            .map(|c| Complex::new(Fixed::from_rational(c, bits), Fixed::zero().with_bits(bits)))
            .collect();
        let (v, _) = horner(&coeffs, &z);
        v.norm_sqr().sqrt_up()
    }
}

/// `(f(z), f'(z))` for coefficients listed lowest degree first.
pub fn horner<R: Real>(coeffs: &[Complex<R>], z: &Complex<R>) -> (Complex<R>, Complex<R>) {
    let mut v = Complex::new(R::zero(), R::zero());
    let mut d = v.clone();
    for c in coeffs.iter().rev() {
        d = d * z.clone() + v.clone();
        v = v * z.clone() + c.clone();
    }
    (v, d)
}

/// Simultaneous Aberth iteration. Stops once every correction has squared
/// modulus below `tol_sq`; the flag reports whether that happened within
/// `max_iter` sweeps.
pub fn aberth<R: Real>(
    coeffs: &[Complex<R>],
    mut z: Vec<Complex<R>>,
    tol_sq: &R,
    max_iter: usize,
) -> (Vec<Complex<R>>, bool) {
    let n = z.len();
    for _ in 0..max_iter {
        let mut done = true;
        for k in 0..n {
            let (fv, dv) = horner(coeffs, &z[k]);
            if fv.is_zero() {
                continue;
            }
            let mut s = Complex::new(R::zero(), R::zero());
            for j in 0..n {
                if j != k {
                    let diff = z[k].clone() - z[j].clone();
                    if !diff.is_zero() {
                        s = s + Complex::new(R::one(), R::zero()) / diff;
                    }
                }
            }
            // f / (f' - f s), so that tiny residuals are never inverted
            let denom = dv - fv.clone() * s;
            if denom.is_zero() {
                done = false;
                continue;
            }
            let corr = fv / denom;
            // NaN counts as not converged
            if corr.norm_sqr().partial_cmp(tol_sq) != Some(Ordering::Less) {
                done = false;
            }
            z[k] = z[k].clone() - corr;
        }
        if done {
            return (z, true);
        }
    }
    (z, false)
}

fn seeds_f64(f: &QPoly) -> Vec<Complex<f64>> {
    let n = f.degree().unwrap_or(0);
    let lc = f.leading();
    let coeffs: Vec<Complex<f64>> = f
        .coeffs()
        .iter()
        .map(|c| Complex::new((c / &lc).to_f64().unwrap_or(0.0), 0.0))
        .collect();
    // Fujiwara bound on the root moduli
    let mut radius: f64 = 0.0;
    for k in 1..=n {
        let a = coeffs[n - k].re.abs();
        if a > 0.0 && a.is_finite() {
            radius = radius.max(a.powf(1.0 / k as f64));
        }
    }
    let radius = if radius > 0.0 { 2.0 * radius } else { 1.0 };
    let init: Vec<Complex<f64>> = (0..n)
        .map(|k| {
            let theta = std::f64::consts::TAU * k as f64 / n as f64 + 0.4;
            Complex::from_polar(radius, theta)
        })
        .collect();
    if coeffs.iter().any(|c| !c.re.is_finite()) {
        return init;
    }
    let (z, _) = aberth(&coeffs, init.clone(), &1e-28, 500);
    if z.iter().all(|c| c.re.is_finite() && c.im.is_finite()) {
        z
    } else {
        init
    }
}

fn ten_pow_neg(digits: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(10).pow(digits))
}

fn eval_exact(f: &QPoly, z: &Complex<BigRational>) -> (Complex<BigRational>, Complex<BigRational>) {
    let coeffs: Vec<Complex<BigRational>> = f
        .coeffs()
        .iter()
        .map(|c| Complex::new(c.clone(), BigRational::zero()))
        .collect();
    let mut v = Complex::new(BigRational::zero(), BigRational::zero());
    let mut d = v.clone();
    for c in coeffs.iter().rev() {
        d = d * z.clone() + v.clone();
        v = v * z.clone() + c.clone();
    }
    (v, d)
}

fn sqrt_up(q: &BigRational, bits: u32) -> BigRational {
    Fixed::from_rational(q, bits).sqrt_up().to_rational()
}

fn certify(f: &QPoly, z: &[Complex<Fixed>], digits: u32, bits: u32) -> Option<Vec<ComplexApprox>> {
    let n = BigRational::from_integer(BigInt::from(z.len()));
    let eps = ten_pow_neg(digits);
    let mut out = Vec::with_capacity(z.len());
    let mut centers = Vec::with_capacity(z.len());
    let mut radii = Vec::with_capacity(z.len());
    for zk in z {
        let exact = Complex::new(zk.re.to_rational(), zk.im.to_rational());
        let (fv, dv) = eval_exact(f, &exact);
        let d2 = dv.norm_sqr();
        if d2.is_zero() {
            return None;
        }
        let f2 = fv.norm_sqr();
        let r2 = &n * &n * &f2 / d2;
        let r = sqrt_up(&r2, 2 * bits);
        let res = sqrt_up(&f2, 2 * bits);
        let two_res = &res + &res;
        let error = if r > two_res { r.clone() } else { two_res };
        // the error is strictly positive even for exact roots
        let error = if error.is_zero() {
            BigRational::new(BigInt::one(), BigInt::one() << (2 * bits) as usize)
        } else {
            error
        };
        if error > eps {
            return None;
        }
        radii.push(r);
        centers.push(exact);
        out.push(ComplexApprox {
            re: zk.re.clone(),
            im: zk.im.clone(),
            error,
        });
    }
    for i in 0..centers.len() {
        for j in i + 1..centers.len() {
            let gap = (centers[i].clone() - centers[j].clone()).norm_sqr();
            let reach = &radii[i] + &radii[j];
            if gap <= &reach * &reach {
                return None;
            }
        }
    }
    Some(out)
}

fn coefficient_bits(f: &QPoly) -> u32 {
    f.coeffs()
        .iter()
        .map(|c| (c.numer().bits() + c.denom().bits()) as u32)
        .max()
        .unwrap_or(0)
}

/// All `deg f` complex roots of a squarefree rational polynomial, each
/// certified to within `10^-digits`.
pub fn complex_roots(f: &QPoly, digits: u32) -> Result<Vec<ComplexApprox>> {
    let Some(deg) = f.degree() else {
        return Err(Error::WrongDegree {
            expected: 1,
            found: None,
        });
    };
    if deg == 0 {
        return Err(Error::WrongDegree {
            expected: 1,
            found: Some(0),
        });
    }
    if !f.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let seeds = seeds_f64(f);
    let base = (digits as f64 * std::f64::consts::LOG2_10).ceil() as u32 + 32 + 2 * coefficient_bits(f);
    let mut bits = base;
    let mut current: Option<Vec<Complex<Fixed>>> = None;
    for _ in 0..4 {
        let coeffs: Vec<Complex<Fixed>> = f
            .monic()
            .coeffs()
            .iter()
            .map(|c| Complex::new(Fixed::from_rational(c, bits), Fixed::zero().with_bits(bits)))
            .collect();
        let start: Vec<Complex<Fixed>> = match &current {
            Some(z) => z
                .iter()
                .map(|c| Complex::new(c.re.with_bits(bits), c.im.with_bits(bits)))
                .collect(),
            None => seeds
                .iter()
                .map(|c| Complex::new(Fixed::from_f64(c.re, bits), Fixed::from_f64(c.im, bits)))
                .collect(),
        };
        let tol = Fixed::epsilon(bits - 8, bits);
        let tol_sq = tol.clone() * tol;
        let (z, _) = aberth(&coeffs, start, &tol_sq, 200 + bits as usize / 4);
        if let Some(out) = certify(f, &z, digits, bits) {
            return Ok(out);
        }
        current = Some(z);
        bits *= 2;
    }
    Err(Error::PrecisionExhausted { digits })
}

/// Roots whose certified disc meets the real axis. For a real polynomial
/// with disjoint discs such a root is real.
pub fn real_parts(roots: &[ComplexApprox]) -> Vec<usize> {
    roots
        .iter()
        .enumerate()
        .filter(|(_, r)| r.im.to_rational().abs() <= r.error)
        .map(|(i, _)| i)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::int;

    #[test]
    fn roots_of_x2_plus_1() {
        let f = QPoly::from_i64s(&[1, 0, 1]);
        let roots = complex_roots(&f, 30).unwrap();
        assert_eq!(roots.len(), 2);
        let eps = ten_pow_neg(30);
        let mut ims: Vec<f64> = roots.iter().map(|r| r.im.to_f64()).collect();
        ims.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!((ims[0] + 1.0).abs() < 1e-12 && (ims[1] - 1.0).abs() < 1e-12);
        for r in &roots {
            assert!(r.re.to_rational().abs() < eps);
            assert!(r.error <= eps);
        }
    }

    #[test]
    fn roots_of_x4_plus_x_minus_1() {
        let f = QPoly::from_i64s(&[-1, 1, 0, 0, 1]);
        let roots = complex_roots(&f, 40).unwrap();
        assert_eq!(real_parts(&roots).len(), 2);
        for r in &roots {
            assert!(r.residual(&f, 2 * r.bits()).to_rational() < r.error);
        }
    }

    #[test]
    fn integer_roots() {
        let f = QPoly::from_i64s(&[24, -50, 35, -10, 1]);
        let mut got: Vec<f64> = complex_roots(&f, 25).unwrap().iter().map(|r| r.re.to_f64()).collect();
        got.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for (g, want) in got.iter().zip([1.0, 2.0, 3.0, 4.0]) {
            assert!((g - want).abs() < 1e-20);
        }
        let _ = int(0);
    }

    #[test]
    fn rejects_repeated_roots() {
        let f = QPoly::from_i64s(&[1, 2, 1]);
        assert_eq!(complex_roots(&f, 10).unwrap_err(), Error::NotSquarefree);
    }
}
