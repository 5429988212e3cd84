use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::trace::{is_principal_with, trace_gram};
use super::{tschirnhaus, FieldCertificate, PrincipalQuartic, ReducedQuartic};
use crate::arith::integer::{factor, rational_sqrt, valuation, DEFAULT_FACTOR_BOUND};
use crate::error::{Error, Result};

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Largest `k` (up to sign) with `k³ | b` and `k⁴ | c`, over primes found by
/// trial division of `gcd(b, c)`.
fn scaling_content(b: &BigInt, c: &BigInt, bound: u64) -> BigInt {
    let g = b.gcd(c);
    if g.is_zero() || g.is_one() {
        return BigInt::one();
    }
    let Ok(f) = factor(&g, bound) else {
        return BigInt::one();
    };
    let mut k = BigInt::one();
    for &p in f.factors.keys() {
        let e = (valuation(b, p).0 / 3).min(valuation(c, p).0 / 4);
        k *= BigInt::from(p).pow(e);
    }
    k
}

/// Representative of `X⁴ + bX + c` under `Tsc(·; 0, 0, r)`: integral, with
/// no removable `(k³, k⁴)` content and `b ≥ 0`. Returns it with `r`.
pub fn normalize_principal(b: &BigRational, c: &BigRational, bound: u64) -> (PrincipalQuartic, BigRational) {
    // r = lcm of denominators makes b r³ and c r⁴ integral
    let mut r = BigRational::from_integer(b.denom().lcm(c.denom()));
    let bi = (b * &r * &r * &r).to_integer();
    let ci = (c * &r * &r * &r * &r).to_integer();
    let k = scaling_content(&bi, &ci, bound);
    r /= BigRational::from_integer(k);
    let mut nb = b * &r * &r * &r;
    let nc = c * &r * &r * &r * &r;
    if nb.is_negative() {
        r = -r;
        nb = -nb;
    }
    (PrincipalQuartic { b: nb, c: nc }, r)
}

fn height(p: &PrincipalQuartic) -> (BigInt, BigInt, BigInt) {
    let b = p.b.to_integer().abs();
    let c = p.c.to_integer().abs();
    (b.clone().max(c.clone()), b, c)
}

pub fn principalize(f: &ReducedQuartic, search_box: i64) -> Result<(PrincipalQuartic, FieldCertificate)> {
    principalize_with(f, search_box, DEFAULT_FACTOR_BOUND)
}

/// Finds a principal polynomial for the field of `f`: a trace-zero `γ`
/// with `Tr(γ²) = 0`, searched over integer `(n, m)` with `|n|, |m| <=
/// search_box` and rational `p`. The candidate of least height wins.
pub fn principalize_with(f: &ReducedQuartic, search_box: i64, bound: u64) -> Result<(PrincipalQuartic, FieldCertificate)> {
    if !is_principal_with(f, bound)? {
        return Err(Error::NotPrincipal);
    }
    let g = trace_gram(f);
    let mut best: Option<(PrincipalQuartic, FieldCertificate)> = None;
    let mut consider = |m: BigRational, n: BigRational, p: BigRational| -> Result<()> {
        let Ok(t) = tschirnhaus(f, &m, &n, &p) else {
            return Ok(());
        };
        debug_assert!(t.a.is_zero());
        let (pq, r) = normalize_principal(&t.b, &t.c, bound);
        let qc = (q(3) * &f.b * &m + q(2) * &f.a * &n) / q(4);
        let cert = FieldCertificate { m, n, p, q: qc }.scaled(&r);
        let better = match &best {
            None => true,
            Some((cur, _)) => height(&pq) < height(cur) || (height(&pq) == height(cur) && pq.b < cur.b),
        };
        if better {
            best = Some((pq, cert));
        }
        Ok(())
    };
    // v = (p, n, m); Tr(γ²) = vᵀ G v = A p² + 2 B p + C
    let a_coef = g[0][0].clone();
    for m in -search_box..=search_box {
        for n in -search_box..=search_box {
            let (mq, nq) = (q(m), q(n));
            let b_coef = &g[0][1] * &nq + &g[0][2] * &mq;
            let c_coef = &g[1][1] * &nq * &nq + q(2) * &g[1][2] * &nq * &mq + &g[2][2] * &mq * &mq;
            if a_coef.is_zero() {
                if !b_coef.is_zero() {
                    let p = -&c_coef / (q(2) * &b_coef);
                    consider(mq, nq, p)?;
                } else if c_coef.is_zero() {
                    consider(mq, nq, q(1))?;
                }
                continue;
            }
            let disc = &b_coef * &b_coef - &a_coef * &c_coef;
            let Some(root) = rational_sqrt(&disc) else {
                continue;
            };
            let p1 = (-&b_coef + &root) / &a_coef;
            consider(mq.clone(), nq.clone(), p1)?;
            if !root.is_zero() {
                let p2 = (-&b_coef - &root) / &a_coef;
                consider(mq, nq, p2)?;
            }
        }
    }
    let (pq, cert) = best.ok_or_else(|| Error::SearchExhausted(format!("no isotropic trace-zero element with |m|, |n| <= {search_box}")))?;
    assert!(cert.verify(&f.poly(), &pq.poly()), "principal certificate failed exact verification");
    Ok((pq, cert))
}
