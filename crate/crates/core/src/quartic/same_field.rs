use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{expect_monic_quartic, FieldCertificate};
use crate::arith::fixed::Fixed;
use crate::arith::integer::squarefree_part_with;
use crate::arith::reconstruct::rational_reconstruct;
use crate::arith::roots::complex_roots;
use crate::error::{Error, Result};
use crate::QPoly;

/// Root precisions tried in turn, in decimal digits.
pub const PRECISION_LEVELS: [u32; 4] = [50, 100, 200, 400];

type C = Complex<Fixed>;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Gaussian elimination with partial pivoting; `None` if singular.
fn solve(mut a: Vec<Vec<C>>, mut rhs: Vec<C>) -> Option<Vec<C>> {
    let n = rhs.len();
    for k in 0..n {
        let piv = (k..n).max_by(|&i, &j| a[i][k].norm_sqr().partial_cmp(&a[j][k].norm_sqr()).unwrap())?;
        if a[piv][k].is_zero() {
            return None;
        }
        a.swap(k, piv);
        rhs.swap(k, piv);
        for i in k + 1..n {
            let factor = a[i][k].clone() / a[k][k].clone();
            for j in k..n {
                let v = factor.clone() * a[k][j].clone();
                a[i][j] = a[i][j].clone() - v;
            }
            let v = factor * rhs[k].clone();
            rhs[i] = rhs[i].clone() - v;
        }
    }
    let mut x = vec![rhs[0].clone(); n];
    for k in (0..n).rev() {
        let mut acc = rhs[k].clone();
        for j in k + 1..n {
            acc = acc - a[k][j].clone() * x[j].clone();
        }
        x[k] = acc / a[k][k].clone();
    }
    Some(x)
}

fn attempt(f: &QPoly, g: &QPoly, digits: u32) -> Result<Option<FieldCertificate>> {
    let beta = complex_roots(f, digits)?;
    let gamma = complex_roots(g, digits)?;
    let window = BigRational::new(BigInt::one(), BigInt::from(10).pow(digits / 2));
    let bound = BigInt::from(10).pow((digits / 4).saturating_sub(1));
    let rows: Vec<Vec<C>> = beta
        .iter()
        .map(|b| {
            let z = b.value();
            let one = Complex::new(Fixed::one().with_bits(z.re.bits()), Fixed::zero().with_bits(z.re.bits()));
            let z2 = z.clone() * z.clone();
            let z3 = z2.clone() * z.clone();
            vec![one, z, z2, z3]
        })
        .collect();
    for perm in permutations(4) {
        let rhs: Vec<C> = perm.iter().map(|&j| gamma[j].value()).collect();
        let Some(x) = solve(rows.clone(), rhs) else {
            continue;
        };
        let mut coeffs = Vec::with_capacity(4);
        for c in &x {
            let im = c.im.to_rational();
            if num_traits::Signed::abs(&im) > window {
                break;
            }
            match rational_reconstruct(&c.re.to_rational(), &window, &bound) {
                Some(r) => coeffs.push(r),
                None => break,
            }
        }
        if coeffs.len() < 4 {
            continue;
        }
        let cert = FieldCertificate {
            q: coeffs[0].clone(),
            p: coeffs[1].clone(),
            n: coeffs[2].clone(),
            m: coeffs[3].clone(),
        };
        if cert.verify(f, g) {
            return Ok(Some(cert));
        }
    }
    Ok(None)
}

pub fn same_field(f: &QPoly, g: &QPoly) -> Result<Option<FieldCertificate>> {
    same_field_with(f, g, &PRECISION_LEVELS, crate::arith::integer::DEFAULT_FACTOR_BOUND)
}

/// An exactly verified `γ = mβ³ + nβ² + pβ + q` with `g(γ) ≡ 0 mod f`, or
/// `None` when the fields differ (or no certificate surfaced at the given
/// precisions).
pub fn same_field_with(f: &QPoly, g: &QPoly, levels: &[u32], bound: u64) -> Result<Option<FieldCertificate>> {
    let f = f.monic();
    let g = g.monic();
    expect_monic_quartic(&f)?;
    expect_monic_quartic(&g)?;
    if !f.is_squarefree() || !g.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    if let (Ok(df), Ok(dg)) = (
        squarefree_part_with(&f.discriminant(), bound),
        squarefree_part_with(&g.discriminant(), bound),
    ) {
        if df != dg {
            return Ok(None);
        }
    }
    if f == g {
        return Ok(Some(FieldCertificate {
            m: BigRational::zero(),
            n: BigRational::zero(),
            p: BigRational::one(),
            q: BigRational::zero(),
        }));
    }
    let mut last_err = None;
    for &digits in levels {
        match attempt(&f, &g, digits) {
            Ok(Some(cert)) => return Ok(Some(cert)),
            Ok(None) => {}
            Err(e @ Error::PrecisionExhausted { .. }) => last_err = Some(e),
            Err(e) => return Err(e),
        }
    }
    match last_err {
        Some(e) => Err(e),
        None => Ok(None),
    }
}
