//! Solvability of the octahedral embedding problems `2^r S4^±` for a quartic
//! field, read off from its discriminant and Witt invariant.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::arith::integer::{factor, is_rational_square, is_square, squarefree_part_with, Cofactor, DEFAULT_FACTOR_BOUND};
use crate::brauer::{brauer_class_with, BrauerClass, Place};
use crate::error::{Error, Result};
use crate::quartic::{galois_is_s4, trace_form_with, ReducedQuartic};

fn q(n: &BigInt) -> BigRational {
    BigRational::from_integer(n.clone())
}

fn qi(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `d = sign · 2^nu · d1 · d3 · d5 · d7` with `d_i` the product of the primes
/// `≡ i mod 8` dividing the squarefree `d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiscDecomposition {
    pub sign: i8,
    pub nu: u8,
    pub d1: BigInt,
    pub d3: BigInt,
    pub d5: BigInt,
    pub d7: BigInt,
}

impl DiscDecomposition {
    pub fn value(&self) -> BigInt {
        let two = if self.nu == 1 { BigInt::from(2) } else { BigInt::one() };
        BigInt::from(self.sign) * two * &self.d1 * &self.d3 * &self.d5 * &self.d7
    }
}

fn primes_of(n: &BigInt, bound: u64) -> Result<Vec<u64>> {
    let f = factor(n, bound)?;
    let mut out: Vec<u64> = f.factors.keys().copied().collect();
    match f.cofactor {
        Cofactor::One => {}
        Cofactor::Prime(p) => out.push(p),
        Cofactor::Square(c) | Cofactor::Unknown(c) => {
            return Err(Error::FactorizationIncomplete {
                value: n.clone(),
                cofactor: c,
                bound,
            })
        }
    }
    Ok(out)
}

pub fn decompose_discriminant(d: &BigInt) -> Result<DiscDecomposition> {
    decompose_discriminant_with(d, DEFAULT_FACTOR_BOUND)
}

/// Accepts any nonzero integer; its squarefree part is decomposed.
pub fn decompose_discriminant_with(d: &BigInt, bound: u64) -> Result<DiscDecomposition> {
    let d = squarefree_part_with(&q(d), bound)?;
    let mut out = DiscDecomposition {
        sign: if d.is_negative() { -1 } else { 1 },
        nu: 0,
        d1: BigInt::one(),
        d3: BigInt::one(),
        d5: BigInt::one(),
        d7: BigInt::one(),
    };
    for p in primes_of(&d.abs(), bound)? {
        let bp = BigInt::from(p);
        match p % 8 {
            2 => out.nu = 1,
            1 => out.d1 *= bp,
            3 => out.d3 *= bp,
            5 => out.d5 *= bp,
            _ => out.d7 *= bp,
        }
    }
    Ok(out)
}

/// Strips 2 and the primes `≡ 1 mod m` (m = 8 or 4) from a squarefree integer.
fn canonical(x: &BigInt, m: u64, bound: u64) -> Result<BigInt> {
    let mut out = BigInt::from(if x.is_negative() { -1 } else { 1 });
    for p in primes_of(&x.abs(), bound)? {
        if p != 2 && p % m != 1 {
            out *= BigInt::from(p);
        }
    }
    Ok(out)
}

/// The pair `[b, r]` of an `8S4^-` solution, in the canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TypeParam {
    pub b: BigInt,
    pub r: BigInt,
}

impl TypeParam {
    pub fn canonical(&self, bound: u64) -> Result<TypeParam> {
        Ok(TypeParam {
            b: canonical(&self.b, 8, bound)?,
            r: canonical(&self.r, 4, bound)?,
        })
    }
}

impl fmt::Display for TypeParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.b, self.r)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Solvability {
    pub s2_plus: bool,
    pub s4_plus: bool,
    pub s4_minus: bool,
    pub s8_minus: bool,
    pub type_8s4_minus: Option<TypeParam>,
}

/// If `c = (-1, r)` for some `r`, that `r`: all odd ramified primes must be
/// `≡ 3 mod 4`, and the sign is read at infinity.
fn as_minus_one_symbol(c: &BrauerClass) -> Option<BigInt> {
    let odd = c.odd_primes();
    if odd.iter().any(|p| p % 4 != 3) {
        return None;
    }
    let mut r: BigInt = odd.iter().map(|&p| BigInt::from(p)).product();
    if c.contains(Place::Infinity) {
        r = -r;
    }
    Some(r)
}

/// `[s4^-] = w ⊗ (-2, d)`.
pub fn s4_minus_class(w: &BrauerClass, d: &BigInt, bound: u64) -> Result<BrauerClass> {
    Ok(w.product(&brauer_class_with(&qi(-2), &q(d), bound)?))
}

/// Solvability of each problem from `w` and `d` alone, with no principality
/// assumption.
pub fn solvability_from_witt(w: &BrauerClass, d: &BigInt, bound: u64) -> Result<Solvability> {
    let s4m = s4_minus_class(w, d, bound)?;
    let s2_plus = *w == brauer_class_with(&qi(2), &q(d), bound)?;
    let s4_plus = brauer_class_with(&qi(-1), &q(d), bound)?.is_trivial() && as_minus_one_symbol(w).is_some();
    let s4_minus = as_minus_one_symbol(&s4m).is_some();
    let odd = s4m.odd_primes();
    let s8_minus = !odd.iter().any(|p| p % 8 == 1);
    let type_8s4_minus = if s8_minus {
        let b: BigInt = odd.iter().filter(|&&p| p % 8 == 5).map(|&p| BigInt::from(p)).product();
        let c = s4m.product(&brauer_class_with(&q(&b), &qi(2), bound)?);
        let r = as_minus_one_symbol(&c).expect("remaining primes are 3 mod 4");
        Some(TypeParam { b, r }.canonical(bound)?)
    } else {
        None
    };
    Ok(Solvability {
        s2_plus,
        s4_plus,
        s4_minus,
        s8_minus,
        type_8s4_minus,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EmbeddingReport {
    /// Squarefree discriminant class.
    pub d: BigInt,
    pub decomposition: DiscDecomposition,
    pub witt: BrauerClass,
    pub principal: bool,
    pub solvable_2s4_plus: bool,
    pub solvable_4s4_plus: bool,
    pub solvable_4s4_minus: bool,
    pub solvable_8s4_minus: bool,
    pub type_8s4_minus: Option<TypeParam>,
    /// `(2, -3d) = 1`
    pub star_norm2: bool,
    /// `(-1, -3d) = 1`
    pub norm_minus1: bool,
    /// `(-2, -3d) = 1`
    pub norm_minus2: bool,
    /// Whether the closed criteria for principal fields agree with the
    /// general Brauer computation.
    pub criteria_agree: bool,
}

impl EmbeddingReport {
    /// Which of the five example tables the field belongs to.
    pub fn table(&self) -> u8 {
        if self.solvable_2s4_plus {
            1
        } else if self.solvable_4s4_minus {
            2
        } else if self.solvable_4s4_plus {
            3
        } else if self.norm_minus1 {
            5
        } else {
            4
        }
    }
}

pub fn classify(f: &ReducedQuartic) -> Result<EmbeddingReport> {
    classify_with(f, DEFAULT_FACTOR_BOUND)
}

pub fn classify_with(f: &ReducedQuartic, bound: u64) -> Result<EmbeddingReport> {
    if !galois_is_s4(f)? {
        return Err(Error::NotOctahedral);
    }
    let tf = trace_form_with(f, bound)?;
    report_from_invariants(&tf.disc_class, &tf.witt, bound)
}

/// The embedding report of a field with squarefree discriminant `d` and
/// trace-form Witt invariant `w`.
pub fn report_from_invariants(d: &BigInt, w: &BrauerClass, bound: u64) -> Result<EmbeddingReport> {
    let dec = decompose_discriminant_with(d, bound)?;
    let principal = *w == brauer_class_with(&qi(-1), &-q(d), bound)?;
    let general = solvability_from_witt(w, d, bound)?;
    let one = BigInt::one();
    let (sol, criteria_agree) = if principal {
        let closed_form = Solvability {
            s2_plus: d.is_negative() && dec.d5 == one && dec.d7 == one,
            s4_plus: d.is_positive() && dec.d3 == one && dec.d7 == one,
            s4_minus: dec.d5 == one,
            s8_minus: true,
            type_8s4_minus: Some(
                TypeParam {
                    b: dec.d5.clone(),
                    r: -dec.d3.clone(),
                }
                .canonical(bound)?,
            ),
        };
        let agree = closed_form == general;
        (closed_form, agree)
    } else {
        (general, true)
    };
    let m3d = -q(&(BigInt::from(3) * d));
    Ok(EmbeddingReport {
        d: d.clone(),
        decomposition: dec,
        witt: w.clone(),
        principal,
        solvable_2s4_plus: sol.s2_plus,
        solvable_4s4_plus: sol.s4_plus,
        solvable_4s4_minus: sol.s4_minus,
        solvable_8s4_minus: sol.s8_minus,
        type_8s4_minus: sol.type_8s4_minus,
        star_norm2: brauer_class_with(&qi(2), &m3d, bound)?.is_trivial(),
        norm_minus1: brauer_class_with(&qi(-1), &m3d, bound)?.is_trivial(),
        norm_minus2: brauer_class_with(&qi(-2), &m3d, bound)?.is_trivial(),
        criteria_agree,
    })
}

/// `w ⊗ (-2, d) ⊗ (2, b) ⊗ (-1, r)`: trivial iff `8S4^-` (or one of its
/// quotients) is solvable with type `[b, r]`.
pub fn obstruction(w: &BrauerClass, d: &BigInt, b: &BigRational, r: &BigRational) -> Result<BrauerClass> {
    obstruction_with(w, d, b, r, DEFAULT_FACTOR_BOUND)
}

pub fn obstruction_with(w: &BrauerClass, d: &BigInt, b: &BigRational, r: &BigRational, bound: u64) -> Result<BrauerClass> {
    if !brauer_class_with(&qi(-1), b, bound)?.is_trivial() {
        return Err(Error::InvalidTypeParameter(b.to_string()));
    }
    Ok(s4_minus_class(w, d, bound)?
        .product(&brauer_class_with(&qi(2), b, bound)?)
        .product(&brauer_class_with(&qi(-1), r, bound)?))
}

/// Fixed field of a determinant character, `Q(√r)` or `Q(√(r(b + x√b)))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum DetField {
    Quadratic { r: BigRational },
    Cyclic { r: BigRational, b: BigRational, x: BigRational },
}

impl fmt::Display for DetField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DetField::Quadratic { r } => write!(f, "Q(sqrt({r}))"),
            DetField::Cyclic { r, b, x } => write!(f, "Q(sqrt({r}*({b} + {x}*sqrt({b}))))"),
        }
    }
}

const DET_SEARCH_LIMIT: u64 = 10_000_000;

/// Smallest positive `x` (with the denominator of `b` cleared) such that
/// `b - x²` is a nonzero rational square.
pub fn sum_of_squares_witness(b: &BigRational) -> Result<BigRational> {
    let den = b.denom().clone();
    let scaled = (b * q(&den) * q(&den)).to_integer();
    let mut x = BigInt::one();
    let mut steps = 0u64;
    while &x * &x < scaled {
        if is_square(&(&scaled - &x * &x)) {
            return Ok(BigRational::new(x, den));
        }
        x += 1;
        steps += 1;
        if steps > DET_SEARCH_LIMIT {
            break;
        }
    }
    Err(Error::SearchExhausted(format!("no x with {b} - x^2 a nonzero square")))
}

pub fn det_field(b: &BigRational, r: &BigRational) -> Result<DetField> {
    if !brauer_class_with(&qi(-1), b, DEFAULT_FACTOR_BOUND)?.is_trivial() {
        return Err(Error::InvalidTypeParameter(b.to_string()));
    }
    if is_rational_square(b) {
        return Ok(DetField::Quadratic { r: r.clone() });
    }
    let x = sum_of_squares_witness(b)?;
    Ok(DetField::Cyclic {
        r: r.clone(),
        b: b.clone(),
        x,
    })
}

/// `w ⊗ (-2, d) ⊗ (-1, -3)`: the sign component of the cocycle of a
/// degree-2 Q-curve attached to the field.
pub fn splitting_obstruction(w: &BrauerClass, d: &BigInt) -> Result<BrauerClass> {
    Ok(s4_minus_class(w, d, DEFAULT_FACTOR_BOUND)?.product(&brauer_class_with(&qi(-1), &qi(-3), DEFAULT_FACTOR_BOUND)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum EndoAlgebra {
    #[serde(rename = "Q(sqrt(-2))")]
    SqrtMinus2,
    #[serde(rename = "Q(sqrt(2))")]
    Sqrt2,
    #[serde(rename = "Q(i)")]
    GaussianI,
    #[serde(rename = "Q(sqrt(2),sqrt(-2))")]
    Biquadratic,
}

impl fmt::Display for EndoAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            EndoAlgebra::SqrtMinus2 => "Q(sqrt(-2))",
            EndoAlgebra::Sqrt2 => "Q(sqrt(2))",
            EndoAlgebra::GaussianI => "Q(i)",
            EndoAlgebra::Biquadratic => "Q(sqrt(2),sqrt(-2))",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EndoCase {
    pub case: char,
    pub algebra: EndoAlgebra,
    pub b: BigInt,
    pub r: BigInt,
    /// Fixed field of the splitting character.
    pub k_eps: DetField,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EndoReport {
    pub cases: Vec<EndoCase>,
}

impl EndoReport {
    pub fn algebras(&self) -> Vec<EndoAlgebra> {
        let mut v: Vec<EndoAlgebra> = Vec::new();
        for c in &self.cases {
            if !v.contains(&c.algebra) {
                v.push(c.algebra);
            }
        }
        v
    }
}

/// Multipliers that keep a type parameter in its class.
fn class_multipliers(m: u64) -> impl Iterator<Item = BigInt> {
    let primes: Vec<u64> = (3u64..2000).filter(|&p| crate::arith::integer::is_prime_u64(p) && p % m == 1).take(6).collect();
    let mut mults: Vec<BigInt> = Vec::new();
    for mask in 0u32..(1 << (primes.len() + 1)) {
        let mut v = BigInt::one();
        if mask & 1 == 1 {
            v *= 2;
        }
        for (i, p) in primes.iter().enumerate() {
            if mask >> (i + 1) & 1 == 1 {
                v *= BigInt::from(*p);
            }
        }
        mults.push(v);
    }
    mults.sort_by_key(|a| a.abs());
    mults.into_iter()
}

fn same_class(a: &BigInt, b: &BigInt) -> bool {
    is_rational_square(&(q(a) * q(b)))
}

/// Splitting-character field `Q(√(-3r))` or `Q(√(-3r(b + x√b)))`.
fn k_eps(b: &BigInt, r: &BigInt) -> Result<DetField> {
    let minus_3r = q(&(BigInt::from(-3) * r));
    det_field(&q(b), &minus_3r)
}

/// The endomorphism-algebra cases available to a principal field.
pub fn endo_algebras(report: &EmbeddingReport) -> Result<EndoReport> {
    if !report.principal {
        return Err(Error::NotPrincipal);
    }
    let d = &report.d;
    if *d == BigInt::from(-3) {
        return Err(Error::CyclotomicExcluded);
    }
    let bound = DEFAULT_FACTOR_BOUND;
    let s4m = s4_minus_class(&report.witt, d, bound)?;
    let r_for = |b: &BigInt| -> Result<Option<BigInt>> {
        let c = s4m.product(&brauer_class_with(&qi(2), &q(b), bound)?);
        Ok(as_minus_one_symbol(&c))
    };
    let minus_3d = squarefree_part_with(&q(&(BigInt::from(-3) * d)), bound)?;
    let one = BigInt::one();
    let mut cases = Vec::new();
    if report.norm_minus2 {
        cases.push(EndoCase {
            case: 'a',
            algebra: EndoAlgebra::SqrtMinus2,
            b: one.clone(),
            r: d.clone(),
            k_eps: k_eps(&one, d)?,
        });
    }
    if report.star_norm2 {
        let r = BigInt::from(-3);
        cases.push(EndoCase {
            case: 'b',
            algebra: EndoAlgebra::Sqrt2,
            b: one.clone(),
            k_eps: k_eps(&one, &r)?,
            r,
        });
    }
    if report.norm_minus1 {
        let b = minus_3d.clone();
        if let Some(r) = r_for(&b)? {
            cases.push(EndoCase {
                case: 'c',
                algebra: EndoAlgebra::GaussianI,
                k_eps: k_eps(&b, &r)?,
                b,
                r,
            });
        }
    }
    if report.solvable_4s4_minus {
        if let Some(r0) = r_for(&one)? {
            let r = class_multipliers(4)
                .map(|m| &r0 * m)
                .find(|r| !same_class(r, d) && !same_class(r, &BigInt::from(-3)))
                .expect("class of r is infinite");
            cases.push(EndoCase {
                case: 'd',
                algebra: EndoAlgebra::Biquadratic,
                b: one.clone(),
                k_eps: k_eps(&one, &r)?,
                r,
            });
        }
    }
    if report.solvable_4s4_plus {
        let b = d.clone();
        if let Some(r) = r_for(&b)? {
            cases.push(EndoCase {
                case: 'e',
                algebra: EndoAlgebra::Biquadratic,
                k_eps: k_eps(&b, &r)?,
                b,
                r,
            });
        }
    }
    if !report.solvable_4s4_minus && !report.solvable_4s4_plus {
        let base = report.type_8s4_minus.as_ref().map(|t| t.b.clone()).unwrap_or_else(BigInt::one);
        let b = class_multipliers(8)
            .map(|m| &base * m)
            .find(|b| !same_class(b, &one) && !same_class(b, d) && !same_class(b, &minus_3d))
            .expect("class of b is infinite");
        if let Some(r) = r_for(&b)? {
            cases.push(EndoCase {
                case: 'f',
                algebra: EndoAlgebra::Biquadratic,
                k_eps: k_eps(&b, &r)?,
                b,
                r,
            });
        }
    }
    Ok(EndoReport { cases })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dec(d: i64) -> DiscDecomposition {
        decompose_discriminant(&BigInt::from(d)).unwrap()
    }

    #[test]
    fn decomposition_examples() {
        let x = dec(-283);
        assert_eq!((x.sign, x.nu), (-1, 0));
        assert_eq!(x.d3, BigInt::from(283));
        let y = dec(892);
        assert_eq!((y.sign, y.d7.clone()), (1, BigInt::from(223)));
        let z = dec(-848);
        assert_eq!((z.sign, z.d5.clone()), (-1, BigInt::from(53)));
        assert_eq!(z.value(), BigInt::from(-53));
    }

    #[test]
    fn det_field_examples() {
        assert_eq!(det_field(&qi(1), &qi(-283)).unwrap().to_string(), "Q(sqrt(-283))");
        assert_eq!(
            det_field(&qi(5), &qi(-3)).unwrap(),
            DetField::Cyclic {
                r: qi(-3),
                b: qi(5),
                x: qi(1)
            }
        );
        assert_eq!(
            det_field(&qi(2), &qi(-1)).unwrap(),
            DetField::Cyclic {
                r: qi(-1),
                b: qi(2),
                x: qi(1)
            }
        );
        assert!(det_field(&qi(3), &qi(-1)).is_err());
    }

    fn report(cs: &[i64]) -> EmbeddingReport {
        let f = crate::quartic::depress(&crate::QPoly::from_i64s(cs)).unwrap();
        classify(&f).unwrap()
    }

    #[test]
    fn classify_examples() {
        let r = report(&[-1, -1, 0, 0, 1]);
        assert!(r.principal && r.criteria_agree);
        assert!(r.solvable_2s4_plus && !r.solvable_4s4_plus && r.solvable_4s4_minus);
        assert_eq!(r.type_8s4_minus.clone().unwrap().to_string(), "[1, -283]");
        assert_eq!(r.table(), 1);

        let r = report(&[1, -1, 0, 0, 1]);
        assert!(!r.solvable_2s4_plus && r.solvable_4s4_plus && !r.solvable_4s4_minus);
        assert_eq!(r.type_8s4_minus.clone().unwrap().to_string(), "[229, -1]");
        assert_eq!(r.table(), 3);

        let r = report(&[1, -2, -1, 0, 1]);
        assert_eq!(r.d, BigInt::from(-53));
        assert!(!r.solvable_2s4_plus && !r.solvable_4s4_plus && !r.solvable_4s4_minus);
        assert_eq!(r.type_8s4_minus.clone().unwrap().to_string(), "[53, -1]");
        assert_eq!(r.table(), 4);
    }

    #[test]
    fn obstruction_examples() {
        let r = report(&[-1, -1, 0, 0, 1]);
        let d = q(&r.d);
        assert!(obstruction(&r.witt, &r.d, &qi(1), &d).unwrap().is_trivial());
        assert!(obstruction(&r.witt, &r.d, &qi(1), &qi(-1)).is_ok());
        assert!(matches!(obstruction(&r.witt, &r.d, &qi(3), &qi(-1)), Err(Error::InvalidTypeParameter(_))));
        let r = report(&[1, -2, -1, 0, 1]);
        assert!(obstruction(&r.witt, &r.d, &q(&r.decomposition.d5), &-q(&r.decomposition.d3)).unwrap().is_trivial());
    }

    #[test]
    fn splitting_examples() {
        let minus_one_minus_three = BrauerClass::from_places([Place::Prime(3), Place::Infinity]);
        assert_eq!(splitting_obstruction(&BrauerClass::trivial(), &BigInt::from(3)).unwrap(), minus_one_minus_three);
        let r = report(&[-1, -1, 0, 0, 1]);
        let c = splitting_obstruction(&r.witt, &r.d).unwrap();
        assert!(c.product(&c).is_trivial());
    }

    #[test]
    fn endo_examples() {
        let algs = |cs: &[i64]| endo_algebras(&report(cs)).unwrap().algebras();
        let a = algs(&[-1, -1, 0, 0, 1]);
        assert!(a.contains(&EndoAlgebra::SqrtMinus2) && a.contains(&EndoAlgebra::Biquadratic));
        let a = algs(&[-1, -2, 0, -1, 1]);
        for e in [EndoAlgebra::SqrtMinus2, EndoAlgebra::Sqrt2, EndoAlgebra::GaussianI, EndoAlgebra::Biquadratic] {
            assert!(a.contains(&e), "{e}");
        }
        let r = report(&[-3, 0, 0, -1, 1]);
        assert_eq!(r.d, BigInt::from(-795));
        assert!(!r.solvable_2s4_plus && !r.solvable_4s4_plus && !r.solvable_4s4_minus);
        assert_eq!(r.table(), 5);
        let a = endo_algebras(&r).unwrap().algebras();
        assert!(a.contains(&EndoAlgebra::GaussianI) && a.contains(&EndoAlgebra::Biquadratic));
    }
}
