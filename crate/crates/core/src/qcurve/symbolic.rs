//! Exact checks of the Q-curve identities over `Q(s)` with `t = s²`, so
//! that `√t = s` is rational.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::weil::weil_restriction_factor;
use crate::brauer::brauer_class;
use crate::check::{CheckResult, SuiteReport};
use crate::field::Field;
use crate::quartic::algebra::tschirnhaus_poly;
use crate::quartic::{trace_form, ReducedQuartic};
use crate::{QPoly, QsPoly, QuadElement, QuadPoly, RatFunc};

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn rf(n: i64) -> RatFunc {
    RatFunc::from_i64(n)
}

fn rfq(n: i64, d: i64) -> RatFunc {
    RatFunc::from_rational(&BigRational::new(n.into(), d.into()))
}

/// Substitutes `t = s²`.
fn in_s(p: &QPoly) -> RatFunc {
    RatFunc::from_poly(p.compose(&QPoly::from_i64s(&[0, 0, 1])))
}

/// Coefficients of `f_t`, `g_t`, `h_t` as polynomials in `t`; the
/// coefficient of `X^k` in `f_t` is `f[k].0 + f[k].1 · √t`.
#[derive(Clone, Debug, PartialEq)]
pub struct SymbolicFamily {
    pub f: Vec<(QPoly, QPoly)>,
    pub g: Vec<QPoly>,
    pub h: Vec<QPoly>,
}

impl SymbolicFamily {
    pub fn standard() -> Self {
        let c = |cs: &[i64]| QPoly::from_i64s(cs);
        SymbolicFamily {
            f: vec![
                (c(&[-300, -108]), c(&[-360])),
                (c(&[224]), c(&[288])),
                (c(&[-60]), c(&[-36])),
                (c(&[]), c(&[])),
                (c(&[1]), c(&[])),
            ],
            g: vec![c(&[3, -9, 9, -3]), c(&[4, -8, 4]), c(&[]), c(&[]), c(&[1])],
            h: vec![c(&[24, -27]), c(&[8]), c(&[-6]), c(&[]), c(&[1])],
        }
    }

    pub fn f_at(&self, t: &BigRational) -> QuadPoly {
        QuadPoly::new(
            self.f
                .iter()
                .map(|(a, b)| QuadElement::new(a.eval(t), b.eval(t), t.clone()))
                .collect(),
        )
    }

    pub fn g_at(&self, t: &BigRational) -> QPoly {
        QPoly::new(self.g.iter().map(|c| c.eval(t)).collect())
    }

    pub fn h_at(&self, t: &BigRational) -> QPoly {
        QPoly::new(self.h.iter().map(|c| c.eval(t)).collect())
    }

    pub fn f_sym(&self) -> QsPoly {
        let s = RatFunc::s();
        QsPoly::new(self.f.iter().map(|(a, b)| in_s(a) + in_s(b) * s.clone()).collect())
    }

    pub fn g_sym(&self) -> QsPoly {
        QsPoly::new(self.g.iter().map(in_s).collect())
    }

    pub fn h_sym(&self) -> QsPoly {
        QsPoly::new(self.h.iter().map(in_s).collect())
    }
}

/// The parameters used for the sampled Witt check.
pub fn witt_samples() -> Vec<BigRational> {
    [2, 3, 5, 6, 7, 10, 11, 13, 14, 15]
        .iter()
        .flat_map(|&n| [q(n), q(-n)])
        .collect()
}

pub fn symbolic_suite() -> SuiteReport {
    symbolic_suite_with(&SymbolicFamily::standard())
}

pub fn symbolic_suite_with(fam: &SymbolicFamily) -> SuiteReport {
    let mut checks = Vec::new();
    let mut push = |name: &str, passed: bool, detail: String| {
        checks.push(CheckResult {
            name: name.to_string(),
            passed,
            detail,
        })
    };
    let s = RatFunc::s();
    let t = s.clone() * s.clone();
    let one = rf(1);
    let (f, g, h) = (fam.f_sym(), fam.g_sym(), fam.h_sym());

    let got = tschirnhaus_poly(&f, &rfq(1, 72), &rfq(-1, 36), &((rf(-37) - rf(27) * s.clone()) / rf(36)));
    push("tsc_f_to_g", got == g, format!("Tsc(f_t; 1/72, -1/36, -(37+27s)/36) = {got}"));

    let (b, c) = (g.coeff(1), g.coeff(0));
    let m = rf(-4) * (t.clone() + rf(3) * s.clone()) / (b.clone() * t.clone());
    let n = rf(16) * c.clone() * s.clone() / (Field::pow(&b, 2) * t.clone());
    let p = rf(-64) * Field::pow(&c, 2) * s.clone() / (rf(3) * Field::pow(&b, 3) * t.clone());
    let got = tschirnhaus_poly(&g, &m, &n, &p);
    push("tsc_g_to_f", got == f, format!("Tsc(g_t; ...) = {got}"));

    let t_back = -g.discriminant() / (rf(27) * Field::pow(&b, 4));
    push("t_round_trip", t_back == t, format!("-disc(g_t)/27b^4 = {t_back}"));

    let dg = g.discriminant();
    let want = rf(-(1 << 8) * 27) * t.clone() * Field::pow(&(t.clone() - one.clone()), 8);
    push("disc_g", dg == want, format!("disc(g_t) = {dg}"));

    let dh = h.discriminant();
    let want = rf(-(1 << 8) * 19683) * t.clone() * Field::pow(&(t.clone() - one.clone()), 2);
    push("disc_h", dh == want, format!("disc(h_t) = {dh}"));

    let got = tschirnhaus_poly(&h, &rfq(-1, 9), &rfq(-1, 9), &rfq(5, 9));
    push("tsc_h_to_g", got == g, format!("Tsc(h_t; -1/9, -1/9, 5/9) = {got}"));

    let alpha: Vec<RatFunc> = fam.f.iter().map(|(a, _)| in_s(a)).collect();
    let beta: Vec<RatFunc> = fam.f.iter().map(|(_, b)| in_s(b)).collect();
    let rec = weil_restriction_factor(&alpha, &beta, &t, &h);
    push(
        "h_divides_resultant",
        rec.divides,
        format!("Res_Y(P_t, R_t) has degree {:?}", rec.resultant.degree()),
    );

    let tm1 = t.clone() - one.clone();
    let sum_form = rf(64) * (rf(27) * t.clone() * t.clone() + rf(360) * t.clone() + rf(125)) / (tm1.clone() * tm1.clone())
        + rf(128) * (rf(81) * t.clone() + rf(175)) / (tm1.clone() * tm1) * s.clone();
    let cube_form = rf(64) * Field::pow(&(rf(5) + rf(3) * s.clone()), 3)
        / (Field::pow(&(s.clone() - one.clone()), 2) * (s.clone() + one));
    push("j_forms_agree", sum_form == cube_form, format!("j_t = {cube_form}"));

    let mut bad = Vec::new();
    for t0 in witt_samples() {
        let ok = (|| -> crate::Result<bool> {
            let hq = fam.h_at(&t0);
            let red = ReducedQuartic::from_poly(&hq)?;
            let tf = trace_form(&red)?;
            let want = brauer_class(&q(-1), &(q(3) * &t0))?;
            let principal = brauer_class(&q(-1), &-BigRational::from_integer(tf.disc_class.clone()))?;
            Ok(tf.witt == want && want == principal)
        })();
        if !matches!(ok, Ok(true)) {
            bad.push(t0.to_string());
        }
    }
    push(
        "witt_h",
        bad.is_empty(),
        if bad.is_empty() {
            format!("w(h_t) = (-1, 3t) at {} values of t", witt_samples().len())
        } else {
            format!("failed at t = {}", bad.join(", "))
        },
    );
    SuiteReport { checks }
}
