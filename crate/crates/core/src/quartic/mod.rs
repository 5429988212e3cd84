//! Quartic fields: reduced and principal defining polynomials, Tschirnhaus
//! transformations, Galois type, trace forms and field equality.

pub mod algebra;
mod principal;
mod same_field;
mod trace;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::arith::fixed::Fixed;
use crate::arith::integer::is_rational_square;
use crate::arith::roots::complex_roots;
use crate::error::{Error, Result};
use crate::QPoly;

pub use principal::{normalize_principal, principalize, principalize_with};
pub use same_field::{same_field, same_field_with, PRECISION_LEVELS};
pub use trace::{
    diagonalize, is_principal, is_principal_with, trace_form, trace_form_with, trace_gram, witt_formula,
    witt_formula_with, TraceFormData,
};

/// `X⁴ + aX² + bX + c`, irreducible over Q.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ReducedQuartic {
    pub a: BigRational,
    pub b: BigRational,
    pub c: BigRational,
}

impl ReducedQuartic {
    pub fn new(a: BigRational, b: BigRational, c: BigRational) -> Result<Self> {
        let f = ReducedQuartic { a, b, c };
        if !is_irreducible(&f.poly())? {
            return Err(Error::Reducible);
        }
        Ok(f)
    }

    pub fn from_i64(a: i64, b: i64, c: i64) -> Result<Self> {
        Self::new(BigRational::from_integer(a.into()), BigRational::from_integer(b.into()), BigRational::from_integer(c.into()))
    }

    /// Accepts a monic quartic without cubic term.
    pub fn from_poly(f: &QPoly) -> Result<Self> {
        expect_monic_quartic(f)?;
        if !f.coeff(3).is_zero() {
            return Err(Error::WrongDegree {
                expected: 4,
                found: f.degree(),
            });
        }
        Self::new(f.coeff(2), f.coeff(1), f.coeff(0))
    }

    pub fn poly(&self) -> QPoly {
        QPoly::new(vec![self.c.clone(), self.b.clone(), self.a.clone(), BigRational::zero(), BigRational::one()])
    }

    pub fn discriminant(&self) -> BigRational {
        self.poly().discriminant()
    }

    pub fn is_principal_shape(&self) -> bool {
        self.a.is_zero()
    }
}

/// `X⁴ + bX + c`, irreducible over Q.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PrincipalQuartic {
    pub b: BigRational,
    pub c: BigRational,
}

impl PrincipalQuartic {
    pub fn new(b: BigRational, c: BigRational) -> Result<Self> {
        ReducedQuartic::new(BigRational::zero(), b.clone(), c.clone())?;
        Ok(PrincipalQuartic { b, c })
    }

    pub fn from_i64(b: i64, c: i64) -> Result<Self> {
        Self::new(BigRational::from_integer(b.into()), BigRational::from_integer(c.into()))
    }

    pub fn poly(&self) -> QPoly {
        self.reduced().poly()
    }

    pub fn reduced(&self) -> ReducedQuartic {
        ReducedQuartic {
            a: BigRational::zero(),
            b: self.b.clone(),
            c: self.c.clone(),
        }
    }

    /// `-27b⁴ + 256c³`.
    pub fn discriminant(&self) -> BigRational {
        let b4 = self.b.clone() * &self.b * &self.b * &self.b;
        let c3 = self.c.clone() * &self.c * &self.c;
        BigRational::from_integer(BigInt::from(-27)) * b4 + BigRational::from_integer(BigInt::from(256)) * c3
    }
}

impl TryFrom<&ReducedQuartic> for PrincipalQuartic {
    type Error = Error;

    fn try_from(f: &ReducedQuartic) -> Result<Self> {
        if !f.a.is_zero() {
            return Err(Error::NotPrincipal);
        }
        Ok(PrincipalQuartic {
            b: f.b.clone(),
            c: f.c.clone(),
        })
    }
}

/// `γ = mβ³ + nβ² + pβ + q`, where `β` is a root of the source polynomial
/// and `γ` a root of the target.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FieldCertificate {
    pub m: BigRational,
    pub n: BigRational,
    pub p: BigRational,
    pub q: BigRational,
}

impl FieldCertificate {
    pub fn gamma(&self) -> QPoly {
        QPoly::new(vec![self.q.clone(), self.p.clone(), self.n.clone(), self.m.clone()])
    }

    pub fn scaled(&self, r: &BigRational) -> Self {
        FieldCertificate {
            m: &self.m * r,
            n: &self.n * r,
            p: &self.p * r,
            q: &self.q * r,
        }
    }

    /// Exact check that `target(γ) ≡ 0 mod source`.
    pub fn verify(&self, source: &QPoly, target: &QPoly) -> bool {
        let gamma = self.gamma();
        if gamma.degree().unwrap_or(0) == 0 {
            return false;
        }
        target.compose(&gamma).rem(source).is_zero()
    }
}

pub(crate) fn expect_monic_quartic(f: &QPoly) -> Result<()> {
    if f.degree() != Some(4) || !f.is_monic() {
        return Err(Error::WrongDegree {
            expected: 4,
            found: f.degree(),
        });
    }
    Ok(())
}

/// Shifts `X -> X - a₃/4` to remove the cubic term of a quartic.
pub fn depress(f: &QPoly) -> Result<ReducedQuartic> {
    if f.degree() != Some(4) {
        return Err(Error::WrongDegree {
            expected: 4,
            found: f.degree(),
        });
    }
    let f = f.monic();
    if !is_irreducible(&f)? {
        return Err(Error::Reducible);
    }
    let h = -f.coeff(3) / BigRational::from_integer(BigInt::from(4));
    let g = f.shift(&h);
    Ok(ReducedQuartic {
        a: g.coeff(2),
        b: g.coeff(1),
        c: g.coeff(0),
    })
}

/// Scales a rational polynomial to `D^n f(X/D)`, monic with integer
/// coefficients. Returns the polynomial and `D`.
pub fn integral_monic(f: &QPoly) -> (QPoly, BigInt) {
    let f = f.monic();
    let n = f.degree().unwrap_or(0);
    let mut d = BigInt::one();
    for c in f.coeffs() {
        d = num_integer::Integer::lcm(&d, c.denom());
    }
    let dq = BigRational::from_integer(d.clone());
    let g = QPoly::new(
        f.coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| c * num_traits::pow(dq.clone(), n - i))
            .collect(),
    );
    (g, d)
}

fn round_to_integer(z: &Fixed) -> BigInt {
    z.to_rational().round().to_integer()
}

/// The monic polynomial with the given roots, coefficients rounded to integers.
fn candidate_factor(roots: &[Complex<Fixed>]) -> QPoly {
    let bits = roots[0].re.bits();
    let mut acc = vec![Complex::new(Fixed::one().with_bits(bits), Fixed::zero().with_bits(bits))];
    for r in roots {
        let mut next = vec![Complex::new(Fixed::zero().with_bits(bits), Fixed::zero().with_bits(bits)); acc.len() + 1];
        for (i, c) in acc.iter().enumerate() {
            next[i + 1] = next[i + 1].clone() + c.clone();
            next[i] = next[i].clone() - c.clone() * r.clone();
        }
        acc = next;
    }
    QPoly::new(acc.iter().map(|c| BigRational::from_integer(round_to_integer(&c.re))).collect())
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 0..n {
        for mut rest in subsets(n, k - 1) {
            if rest.iter().all(|&r| r > first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
    }
    out
}

/// Irreducibility over Q for degree at most four.
///
/// A factor of the integral monic scaling has integer coefficients, so it
/// is recovered by rounding the expanded product of certified roots and
/// confirmed by exact division.
pub fn is_irreducible(f: &QPoly) -> Result<bool> {
    let Some(n) = f.degree() else {
        return Ok(false);
    };
    if n == 0 {
        return Ok(false);
    }
    if n == 1 {
        return Ok(true);
    }
    if !f.is_squarefree() {
        return Ok(false);
    }
    let (g, _) = integral_monic(f);
    let roots = complex_roots(&g, 30)?;
    let z: Vec<Complex<Fixed>> = roots.iter().map(|r| r.value()).collect();
    for k in 1..=n / 2 {
        for s in subsets(n, k) {
            let pick: Vec<Complex<Fixed>> = s.iter().map(|&i| z[i].clone()).collect();
            let h = candidate_factor(&pick);
            if g.div_exact(&h).is_some() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The rational roots of a nonzero polynomial.
pub fn rational_roots(f: &QPoly) -> Result<Vec<BigRational>> {
    if f.degree().unwrap_or(0) == 0 {
        return Ok(Vec::new());
    }
    let sf = f.div_exact(&f.gcd(&f.derivative())).expect("gcd divides");
    if sf.degree() == Some(1) {
        let r = -sf.coeff(0) / sf.coeff(1);
        return Ok(vec![r]);
    }
    let (g, d) = integral_monic(&sf);
    let dq = BigRational::from_integer(d);
    let mut out: Vec<BigRational> = Vec::new();
    for r in complex_roots(&g, 30)? {
        let k = BigRational::from_integer(round_to_integer(&r.re));
        if g.eval(&k).is_zero() {
            let root = k / &dq;
            if !out.contains(&root) {
                out.push(root);
            }
        }
    }
    out.sort();
    Ok(out)
}

/// `X³ - aX² - 4cX + (4ac - b²)`.
pub fn resolvent_cubic(f: &ReducedQuartic) -> QPoly {
    let four = BigRational::from_integer(BigInt::from(4));
    QPoly::new(vec![
        &four * &f.a * &f.c - &f.b * &f.b,
        -(&four * &f.c),
        -f.a.clone(),
        BigRational::one(),
    ])
}

/// Whether the Galois group of the closure is the full symmetric group.
pub fn galois_is_s4(f: &ReducedQuartic) -> Result<bool> {
    let disc = f.discriminant();
    if disc.is_zero() || (disc.is_positive() && is_rational_square(&disc)) {
        return Ok(false);
    }
    Ok(rational_roots(&resolvent_cubic(f))?.is_empty())
}

/// The reduced Tschirnhaus transform `Tsc(f; m, n, p)`.
pub fn tschirnhaus(f: &ReducedQuartic, m: &BigRational, n: &BigRational, p: &BigRational) -> Result<ReducedQuartic> {
    if m.is_zero() && n.is_zero() && p.is_zero() {
        return Err(Error::NotPrimitive);
    }
    let g = algebra::tschirnhaus_poly(&f.poly(), m, n, p);
    // the characteristic polynomial of a non-primitive element is a power
    if !g.is_squarefree() {
        return Err(Error::NotPrimitive);
    }
    Ok(ReducedQuartic {
        a: g.coeff(2),
        b: g.coeff(1),
        c: g.coeff(0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{int, rat};

    #[test]
    fn depress_examples() {
        let f = QPoly::from_i64s(&[-1, 1, 1, -1, 1]);
        let r = depress(&f).unwrap();
        let d = crate::arith::integer::squarefree_part(&r.discriminant()).unwrap();
        assert_eq!(d, BigInt::from(-331));
        let g = QPoly::from_i64s(&[-1, 1, 0, 0, 1]);
        assert_eq!(depress(&g).unwrap().poly(), g);
        assert_eq!(depress(&QPoly::from_i64s(&[1, 4, 6, 4, 1])).unwrap_err(), Error::Reducible);
    }

    #[test]
    fn irreducibility() {
        assert!(is_irreducible(&QPoly::from_i64s(&[-1, 1, 0, 0, 1])).unwrap());
        // (X² + X + 1)(X² - 2)
        let f = &QPoly::from_i64s(&[1, 1, 1]) * &QPoly::from_i64s(&[-2, 0, 1]);
        assert!(!is_irreducible(&f).unwrap());
        assert!(!is_irreducible(&QPoly::from_i64s(&[4, 0, 0, 0, 1])).unwrap());
        assert!(is_irreducible(&QPoly::from_i64s(&[1, 0, 0, 0, 1])).unwrap());
        let f = QPoly::new(vec![rat(-1, 16), rat(1, 8), int(0), int(0), int(1)]);
        assert!(is_irreducible(&f).unwrap());
    }

    #[test]
    fn resolvent_and_galois() {
        let f = ReducedQuartic::from_i64(0, 1, -1).unwrap();
        assert_eq!(resolvent_cubic(&f), QPoly::from_i64s(&[-1, 4, 0, 1]));
        assert!(galois_is_s4(&f).unwrap());
        let g = ReducedQuartic::from_i64(0, 0, 1).unwrap();
        assert_eq!(resolvent_cubic(&g), QPoly::from_i64s(&[0, -4, 0, 1]));
        assert!(!galois_is_s4(&g).unwrap());
    }

    #[test]
    fn tschirnhaus_examples() {
        let f = ReducedQuartic::from_i64(0, 1, -1).unwrap();
        assert_eq!(tschirnhaus(&f, &int(0), &int(0), &int(1)).unwrap(), f);
        let g = tschirnhaus(&f, &int(0), &int(0), &int(3)).unwrap();
        assert_eq!(g, ReducedQuartic::from_i64(0, 27, -81).unwrap());
        let h = ReducedQuartic::from_i64(-6, 8, 51).unwrap();
        let t = tschirnhaus(&h, &rat(-1, 9), &rat(-1, 9), &rat(5, 9)).unwrap();
        assert_eq!(t, ReducedQuartic::from_i64(0, 16, 24).unwrap());
    }
}
