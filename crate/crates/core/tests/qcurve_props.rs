use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use octahedral::arith::integer::is_rational_square;
use octahedral::brauer::brauer_class;
use octahedral::qcurve::{
    curve_from_t, family, j_invariant, rescale_radicand, t_from_principal, transform_to_ft, weil_restriction_at,
    SymbolicFamily,
};
use octahedral::quartic::{galois_is_s4, same_field, trace_form, FieldCertificate, PrincipalQuartic, ReducedQuartic};
use octahedral::{Error, QPoly};
use proptest::prelude::*;

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn admissible_t() -> impl Strategy<Value = BigRational> {
    (-60i64..=60, 1i64..=12)
        .prop_map(|(n, d)| rat(n, d))
        .prop_filter("t not 0, 1 or a square", |t| !t.is_zero() && !t.is_one() && !is_rational_square(t))
}

fn s4_principal(b: i64, c: i64) -> Option<PrincipalQuartic> {
    let g = PrincipalQuartic::from_i64(b, c).ok()?;
    galois_is_s4(&g.reduced()).unwrap().then_some(g)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn t_round_trip(t in admissible_t()) {
        let g = curve_from_t(&t).unwrap().g_t;
        let Ok(g) = PrincipalQuartic::new(g.coeff(1), g.coeff(0)) else { return Ok(()) };
        prop_assert_eq!(t_from_principal(&g).unwrap(), t);
    }

    /// `g` is a rescaling `X -> λX` of `g_t`, and its transform is `f_t`.
    #[test]
    fn field_coherence(b in 1i64..=20, c in -20i64..=20) {
        let Some(g) = s4_principal(b, c) else { return Ok(()) };
        let t = match t_from_principal(&g) {
            Err(Error::CyclotomicExcluded) => return Ok(()),
            r => r.unwrap(),
        };
        let gt = curve_from_t(&t).unwrap().g_t;
        let lambda = (gt.coeff(0) / &g.c) / (gt.coeff(1) / &g.b);
        let scaled = gt.compose(&QPoly::new(vec![q(0), lambda.clone()])).scale(&(q(1) / lambda.pow(4)));
        prop_assert_eq!(scaled, g.poly());
        prop_assert_eq!(transform_to_ft(&g).unwrap(), SymbolicFamily::standard().f_at(&t));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn family_members_are_principal_and_equivalent(b in 1i64..=12, c in -12i64..=12, sn in -6i64..=6, sd in 1i64..=4, idx in 0u32..10) {
        let Some(g) = s4_principal(b, c) else { return Ok(()) };
        let s = rat(sn, sd);
        let m = match family(&g, &s) {
            Err(Error::ExcludedParameter(_)) => return Ok(()),
            r => r.unwrap(),
        };
        let red = m.quartic.reduced();
        prop_assert!(red.a.is_zero());
        // the trace form sees it too, when its entries factor
        if let Ok(tf) = trace_form(&red) {
            let d = BigRational::from_integer(tf.disc_class.clone());
            prop_assert_eq!(tf.witt, brauer_class(&q(-1), &-d).unwrap());
        }
        // γ = β³ + sβ² + pβ + 3b/4, with p the trace condition
        let p = (q(3) * &g.b * &g.b - q(16) * &g.c * &s * &s) / (q(8) * (q(3) * &g.b * &s + q(4) * &g.c));
        let cert = FieldCertificate { m: q(1), n: s.clone(), p, q: q(3) * &g.b / q(4) };
        prop_assert!(cert.verify(&g.poly(), &m.quartic.poly()));
        if idx == 0 {
            prop_assert!(same_field(&g.poly(), &m.quartic.poly()).unwrap().is_some());
        }
        if let Ok(t) = t_from_principal(&m.quartic) {
            let jt = rescale_radicand(&j_invariant(&t), &(q(9) * &m.quartic.b * &m.quartic.b));
            prop_assert!(m.j == jt || m.j == jt.conjugate());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn witt_of_h_t(t in admissible_t()) {
        let h = curve_from_t(&t).unwrap().h_t;
        let Ok(h) = ReducedQuartic::from_poly(&h) else { return Ok(()) };
        let Ok(tf) = trace_form(&h) else { return Ok(()) };
        prop_assert_eq!(tf.witt, brauer_class(&q(-1), &(q(3) * &t)).unwrap());
    }
}

#[test]
fn h_t_divides_weil_resultant() {
    for t in [q(-1), q(2), q(3), rat(283, 27), rat(-7, 5)] {
        let rec = weil_restriction_at(&t);
        assert!(rec.divides, "t = {t}");
        assert_eq!(rec.resultant.degree(), Some(16));
    }
}

#[test]
fn degenerate_parameters() {
    for t in [q(0), q(1), q(4), rat(9, 4)] {
        assert!(matches!(curve_from_t(&t), Err(Error::DegenerateParameter(_))));
    }
}
