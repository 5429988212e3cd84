//! Degree-2 Q-curves `C_t` over `Q(√t)` and their link with principal
//! quartic fields.

mod symbolic;
mod weil;

pub use crate::check::{CheckResult, SuiteReport};
pub use symbolic::{symbolic_suite, symbolic_suite_with, witt_samples, SymbolicFamily};
pub use weil::{resultant_y, weil_restriction, weil_restriction_at, weil_restriction_factor, Bivariate, WeilRecord};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::integer::{is_rational_square, squarefree_part_with, DEFAULT_FACTOR_BOUND};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::quartic::algebra::tschirnhaus_poly;
use crate::quartic::PrincipalQuartic;
use crate::{QPoly, QuadElement, QuadPoly};

/// j-invariant attached to the cusp `t = ∞`.
pub const J_INFINITY: i64 = 1728;

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn quad(u: i64, v: i64, t: &BigRational) -> QuadElement {
    QuadElement::new(q(u), q(v), t.clone())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QCurveRecord {
    pub t: BigRational,
    pub j: QuadElement,
    /// `Y² = X³ + AX + B`
    pub a: QuadElement,
    pub b: QuadElement,
    /// x-coordinates of the 3-torsion points.
    #[serde(skip)]
    pub f_t: QuadPoly,
    #[serde(skip)]
    pub g_t: QPoly,
    #[serde(skip)]
    pub h_t: QPoly,
}

pub fn check_parameter(t: &BigRational) -> Result<()> {
    if t.is_zero() || t.is_one() {
        return Err(Error::DegenerateParameter(format!("t = {t}")));
    }
    if is_rational_square(t) {
        return Err(Error::DegenerateParameter(format!("t = {t} is a square")));
    }
    Ok(())
}

/// `64(5 + 3√t)³ / ((√t - 1)²(√t + 1))`.
pub fn j_invariant(t: &BigRational) -> QuadElement {
    let r = QuadElement::sqrt_of(t.clone());
    let one = quad(1, 0, t);
    let num = quad(64, 0, t) * Field::pow(&(quad(5, 0, t) + quad(3, 0, t) * r.clone()), 3);
    let den = Field::pow(&(r.clone() - one.clone()), 2) * (r + one);
    num / den
}

pub fn curve_from_t(t: &BigRational) -> Result<QCurveRecord> {
    check_parameter(t)?;
    let fam = SymbolicFamily::standard();
    Ok(QCurveRecord {
        t: t.clone(),
        j: j_invariant(t),
        a: quad(-30, -18, t),
        b: quad(56, 72, t),
        f_t: fam.f_at(t),
        g_t: fam.g_at(t),
        h_t: fam.h_at(t),
    })
}

/// `t = -disc(g) / 27b⁴ = 1 - 256c³/27b⁴`.
pub fn t_from_principal(g: &PrincipalQuartic) -> Result<BigRational> {
    if g.b.is_zero() {
        return Err(Error::DegenerateParameter("b = 0".into()));
    }
    let d = g.discriminant();
    if squarefree_part_with(&d, DEFAULT_FACTOR_BOUND)? == BigInt::from(-3) {
        return Err(Error::CyclotomicExcluded);
    }
    let b4 = Field::pow(&g.b, 4);
    Ok(-d / (q(27) * b4))
}

/// Parameters `(m, n, p)` over `Q(√t)` with `Tsc(g; m, n, p) = f_t`.
pub fn tschirnhaus_to_ft(g: &PrincipalQuartic) -> Result<(BigRational, [QuadElement; 3])> {
    let t = t_from_principal(g)?;
    let r = QuadElement::sqrt_of(t.clone());
    let c = |x: &BigRational| QuadElement::new(x.clone(), q(0), t.clone());
    let (b, cc, tt) = (c(&g.b), c(&g.c), c(&t));
    let m = quad(-4, 0, &t) * (tt.clone() + quad(3, 0, &t) * r.clone()) / (b.clone() * tt.clone());
    let n = quad(16, 0, &t) * cc.clone() * r.clone() / (Field::pow(&b, 2) * tt.clone());
    let p = quad(-64, 0, &t) * Field::pow(&cc, 2) * r / (quad(3, 0, &t) * Field::pow(&b, 3) * tt);
    Ok((t, [m, n, p]))
}

/// Applies [`tschirnhaus_to_ft`] and returns the transformed polynomial.
pub fn transform_to_ft(g: &PrincipalQuartic) -> Result<QuadPoly> {
    let (t, [m, n, p]) = tschirnhaus_to_ft(g)?;
    let gq: QuadPoly = g.poly().map(|x| QuadElement::new(x.clone(), q(0), t.clone()));
    Ok(tschirnhaus_poly(&gq, &m, &n, &p))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FamilyMember {
    pub s: BigRational,
    pub quartic: PrincipalQuartic,
    /// In `Q(√(3(27b⁴ - 256c³)))`.
    pub j: QuadElement,
}

/// `Tsc(g; 1, s, (3b² - 16cs²) / 8(3bs + 4c))`, a principal polynomial for
/// the same field, together with the j-invariant of its Q-curve.
///
/// This is the value of `p` that makes `Tr(γ²)` vanish; with the opposite
/// sign the image has a nonzero `X²` term.
pub fn family(g: &PrincipalQuartic, s: &BigRational) -> Result<FamilyMember> {
    let (b, c) = (&g.b, &g.c);
    let den = q(8) * (q(3) * b * s + q(4) * c);
    if den.is_zero() {
        return Err(Error::ExcludedParameter(format!("s = {s}")));
    }
    let p = (q(3) * b * b - q(16) * c * s * s) / den;
    let red = crate::quartic::tschirnhaus(&g.reduced(), &q(1), s, &p)?;
    debug_assert!(red.a.is_zero());
    let quartic = PrincipalQuartic::new(red.b, red.c)?;
    Ok(FamilyMember {
        s: s.clone(),
        j: family_j(&quartic),
        quartic,
    })
}

/// `27(27b⁸ - 207b⁴c³ + 128c⁶)/2c⁶ + 81b²(b⁴ - 3c³)/2c⁶ · √(3(27b⁴ - 256c³))`.
pub fn family_j(g: &PrincipalQuartic) -> QuadElement {
    let (b, c) = (&g.b, &g.c);
    let b2 = b * b;
    let b4 = &b2 * &b2;
    let c3 = c * c * c;
    let c6 = &c3 * &c3;
    let radicand = q(3) * (q(27) * &b4 - q(256) * &c3);
    let u = q(27) * (q(27) * &b4 * &b4 - q(207) * &b4 * &c3 + q(128) * &c6) / (q(2) * &c6);
    let v = q(81) * &b2 * (&b4 - q(3) * &c3) / (q(2) * &c6);
    QuadElement::new(u, v, radicand)
}

/// Rewrites `u + v√t` over the radicand `t·k²` for `k ≠ 0`.
pub fn rescale_radicand(x: &QuadElement, k: &BigRational) -> QuadElement {
    let t = x.radicand().cloned().unwrap_or_else(BigRational::zero);
    QuadElement::new(x.u.clone(), &x.v / k, t * k * k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;

    #[test]
    fn curve_at_minus_one() {
        let c = curve_from_t(&q(-1)).unwrap();
        assert_eq!(c.g_t, QPoly::from_i64s(&[24, 16, 0, 0, 1]));
        assert_eq!(c.h_t, QPoly::from_i64s(&[51, 8, -6, 0, 1]));
        assert!(matches!(curve_from_t(&q(4)), Err(Error::DegenerateParameter(_))));
        assert!(curve_from_t(&q(1)).is_err());
        // the two displayed forms of j agree
        let t = q(-1);
        let alt = QuadElement::new(
            q(64) * (q(27) - q(360) + q(125)) / q(4),
            q(128) * (q(-81) + q(175)) / q(4),
            t,
        );
        assert_eq!(c.j, alt);
    }

    #[test]
    fn principal_to_t() {
        let g = PrincipalQuartic::from_i64(1, -1).unwrap();
        let t = t_from_principal(&g).unwrap();
        assert_eq!(t, rat(283, 27));
        assert_eq!(squarefree_part_with(&t, 1000).unwrap(), BigInt::from(849));
        let ft = transform_to_ft(&g).unwrap();
        assert_eq!(ft, SymbolicFamily::standard().f_at(&t));
    }

    #[test]
    fn t_round_trip() {
        for t0 in [-1i64, 2, 3, -5, 7] {
            let t0 = q(t0);
            let g = curve_from_t(&t0).unwrap().g_t;
            let g = PrincipalQuartic::new(g.coeff(1), g.coeff(0)).unwrap();
            assert_eq!(t_from_principal(&g).unwrap(), t0);
        }
    }

    #[test]
    fn family_members() {
        let g = PrincipalQuartic::from_i64(1, -1).unwrap();
        let m = family(&g, &q(0)).unwrap();
        assert!(crate::quartic::is_principal(&m.quartic.reduced()).unwrap());
        assert!(crate::quartic::same_field(&g.poly(), &m.quartic.poly()).unwrap().is_some());
        assert!(matches!(family(&g, &rat(4, 3)), Err(Error::ExcludedParameter(_))));
        // the displayed j matches j_t up to the choice of square root
        let t = t_from_principal(&m.quartic).unwrap();
        let jt = rescale_radicand(&j_invariant(&t), &(q(9) * &m.quartic.b * &m.quartic.b));
        assert!(m.j == jt || m.j == jt.conjugate(), "{} vs {}", m.j, jt);
    }
}
