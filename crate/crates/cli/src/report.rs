//! JSON views of the library results. Numbers are rendered as strings so
//! that big integers and rationals survive any JSON reader.

use num_bigint::BigInt;
use num_rational::BigRational;
use octahedral::arith::integer::squarefree_part_with;
use octahedral::embedding::{classify_with, endo_algebras, EmbeddingReport, EndoReport};
use octahedral::qcurve::{curve_from_t, t_from_principal, transform_to_ft, weil_restriction_at, QCurveRecord};
use octahedral::quartic::{
    depress, galois_is_s4, is_irreducible, principalize_with, trace_form_with, witt_formula_with, FieldCertificate,
    PrincipalQuartic, ReducedQuartic,
};
use octahedral::{Config, Error, QPoly};
use serde::Serialize;

use crate::error::CliError;
use crate::SCHEMA;

fn coeffs(p: &QPoly) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

#[derive(Debug, Serialize)]
pub struct CertificateView {
    pub m: String,
    pub n: String,
    pub p: String,
    pub q: String,
}

impl From<&FieldCertificate> for CertificateView {
    fn from(c: &FieldCertificate) -> Self {
        CertificateView {
            m: c.m.to_string(),
            n: c.n.to_string(),
            p: c.p.to_string(),
            q: c.q.to_string(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct PrincipalView {
    pub b: String,
    pub c: String,
    pub polynomial: String,
    /// Maps a root of the reduced input to a root of `X⁴ + bX + c`.
    pub certificate: CertificateView,
    pub verified: bool,
}

#[derive(Debug, Serialize)]
pub struct DecompositionView {
    pub sign: i8,
    pub nu: u8,
    pub d1: String,
    pub d3: String,
    pub d5: String,
    pub d7: String,
}

#[derive(Debug, Serialize)]
pub struct EmbeddingView {
    pub d: String,
    pub decomposition: DecompositionView,
    pub witt: Vec<String>,
    pub principal: bool,
    #[serde(rename = "2S4+")]
    pub s2_plus: bool,
    #[serde(rename = "4S4+")]
    pub s4_plus: bool,
    #[serde(rename = "4S4-")]
    pub s4_minus: bool,
    #[serde(rename = "8S4-")]
    pub s8_minus: bool,
    pub type_8s4_minus: Option<String>,
    pub star: bool,
    pub norm_minus1: bool,
    pub norm_minus2: bool,
    pub criteria_agree: bool,
    pub table: u8,
}

impl From<&EmbeddingReport> for EmbeddingView {
    fn from(r: &EmbeddingReport) -> Self {
        let dec = &r.decomposition;
        EmbeddingView {
            d: r.d.to_string(),
            decomposition: DecompositionView {
                sign: dec.sign,
                nu: dec.nu,
                d1: dec.d1.to_string(),
                d3: dec.d3.to_string(),
                d5: dec.d5.to_string(),
                d7: dec.d7.to_string(),
            },
            witt: r.witt.ramified().iter().map(|p| p.to_string()).collect(),
            principal: r.principal,
            s2_plus: r.solvable_2s4_plus,
            s4_plus: r.solvable_4s4_plus,
            s4_minus: r.solvable_4s4_minus,
            s8_minus: r.solvable_8s4_minus,
            type_8s4_minus: r.type_8s4_minus.as_ref().map(|t| t.to_string()),
            star: r.star_norm2,
            norm_minus1: r.norm_minus1,
            norm_minus2: r.norm_minus2,
            criteria_agree: r.criteria_agree,
            table: r.table(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct EndoCaseView {
    pub case: String,
    pub algebra: String,
    #[serde(rename = "type")]
    pub type_param: String,
    pub k_eps: String,
}

#[derive(Debug, Serialize)]
pub struct EndoView {
    pub algebras: Vec<String>,
    pub cases: Vec<EndoCaseView>,
}

impl From<&EndoReport> for EndoView {
    fn from(r: &EndoReport) -> Self {
        EndoView {
            algebras: r.algebras().iter().map(|a| a.to_string()).collect(),
            cases: r
                .cases
                .iter()
                .map(|c| EndoCaseView {
                    case: c.case.to_string(),
                    algebra: c.algebra.to_string(),
                    type_param: format!("[{}, {}]", c.b, c.r),
                    k_eps: c.k_eps.to_string(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct QCurveView {
    pub t: String,
    /// `Q(√t)`.
    pub k: String,
    pub j: String,
    pub a: String,
    pub b: String,
    pub f_t: Vec<String>,
    pub g_t: Vec<String>,
    pub h_t: Vec<String>,
    pub h_t_divides_resultant: bool,
}

impl QCurveView {
    fn new(rec: &QCurveRecord, bound: u64) -> Result<Self, CliError> {
        let k = squarefree_part_with(&rec.t, bound)?;
        Ok(QCurveView {
            t: rec.t.to_string(),
            k: format!("Q(sqrt({k}))"),
            j: rec.j.to_string(),
            a: rec.a.to_string(),
            b: rec.b.to_string(),
            f_t: rec.f_t.coeffs().iter().map(|c| c.to_string()).collect(),
            g_t: coeffs(&rec.g_t),
            h_t: coeffs(&rec.h_t),
            h_t_divides_resultant: weil_restriction_at(&rec.t).divides,
        })
    }
}

#[derive(Debug, Serialize)]
pub struct QuarticReport {
    pub schema: u32,
    pub input: Vec<String>,
    pub reduced: Vec<String>,
    pub disc_class: String,
    pub s4: bool,
    pub witt: Vec<String>,
    pub witt_formula_agrees: bool,
    pub principal: bool,
    pub principal_form: Option<PrincipalView>,
    pub embedding: EmbeddingView,
    pub endo: Option<EndoView>,
    pub qcurve: Option<QCurveView>,
}

/// Checks the input and removes the cubic term.
pub fn prepare(f: &QPoly) -> Result<ReducedQuartic, CliError> {
    if f.degree() != Some(4) {
        return Err(Error::WrongDegree {
            expected: 4,
            found: f.degree(),
        }
        .into());
    }
    let f = f.monic();
    if !is_irreducible(&f)? {
        return Err(Error::Reducible.into());
    }
    Ok(depress(&f)?)
}

fn principal_view(red: &ReducedQuartic, cfg: &Config) -> Result<(PrincipalQuartic, PrincipalView), CliError> {
    let (g, cert) = principalize_with(red, cfg.search_box, cfg.factor_bound)?;
    let verified = cert.verify(&red.poly(), &g.poly());
    let view = PrincipalView {
        b: g.b.to_string(),
        c: g.c.to_string(),
        polynomial: g.poly().to_string(),
        certificate: CertificateView::from(&cert),
        verified,
    };
    Ok((g, view))
}

pub fn analyze(f: &QPoly, cfg: &Config) -> Result<QuarticReport, CliError> {
    let red = prepare(f)?;
    if !galois_is_s4(&red)? {
        return Err(Error::NotOctahedral.into());
    }
    let tf = trace_form_with(&red, cfg.factor_bound)?;
    let formula = witt_formula_with(&red, cfg.factor_bound)?;
    let emb = classify_with(&red, cfg.factor_bound)?;
    let minus3 = emb.d == BigInt::from(-3);

    let (mut principal_form, mut endo, mut qcurve) = (None, None, None);
    if emb.principal {
        match principal_view(&red, cfg) {
            Ok((g, view)) => {
                principal_form = Some(view);
                if !minus3 {
                    let t = t_from_principal(&g)?;
                    qcurve = Some(QCurveView::new(&curve_from_t(&t)?, cfg.factor_bound)?);
                }
            }
            Err(CliError::Core(Error::SearchExhausted(_))) => {}
            Err(e) => return Err(e),
        }
        if !minus3 {
            endo = Some(EndoView::from(&endo_algebras(&emb)?));
        }
    }
    Ok(QuarticReport {
        schema: SCHEMA,
        input: coeffs(&f.monic()),
        reduced: coeffs(&red.poly()),
        disc_class: emb.d.to_string(),
        s4: true,
        witt: tf.witt.ramified().iter().map(|p| p.to_string()).collect(),
        witt_formula_agrees: formula == tf.witt,
        principal: emb.principal,
        principal_form,
        embedding: EmbeddingView::from(&emb),
        endo,
        qcurve,
    })
}

#[derive(Debug, Serialize)]
pub struct PrincipalizeReport {
    pub schema: u32,
    pub input: Vec<String>,
    pub reduced: Vec<String>,
    pub principal_form: PrincipalView,
}

pub fn principalize(f: &QPoly, cfg: &Config) -> Result<PrincipalizeReport, CliError> {
    let red = prepare(f)?;
    let (_, view) = principal_view(&red, cfg)?;
    Ok(PrincipalizeReport {
        schema: SCHEMA,
        input: coeffs(&f.monic()),
        reduced: coeffs(&red.poly()),
        principal_form: view,
    })
}

#[derive(Debug, Serialize)]
pub struct ClassifyReport {
    pub schema: u32,
    pub embedding: EmbeddingView,
    pub endo: Option<EndoView>,
}

pub fn classify(f: &QPoly, cfg: &Config) -> Result<ClassifyReport, CliError> {
    let red = prepare(f)?;
    let emb = classify_with(&red, cfg.factor_bound)?;
    let endo = match endo_algebras(&emb) {
        Ok(e) => Some(EndoView::from(&e)),
        Err(Error::NotPrincipal | Error::CyclotomicExcluded) => None,
        Err(e) => return Err(e.into()),
    };
    Ok(ClassifyReport {
        schema: SCHEMA,
        embedding: EmbeddingView::from(&emb),
        endo,
    })
}

#[derive(Debug, Serialize)]
pub struct QCurveReport {
    pub schema: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub principal_form: Option<PrincipalView>,
    /// `Tsc(g; m, n, p) = f_t` over `Q(√t)`, when computed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub transform_matches_f_t: Option<bool>,
    pub curve: QCurveView,
}

pub fn qcurve_from_t(t: &BigRational, cfg: &Config) -> Result<QCurveReport, CliError> {
    let rec = curve_from_t(t)?;
    Ok(QCurveReport {
        schema: SCHEMA,
        principal_form: None,
        transform_matches_f_t: None,
        curve: QCurveView::new(&rec, cfg.factor_bound)?,
    })
}

pub fn qcurve_from_quartic(f: &QPoly, cfg: &Config) -> Result<QCurveReport, CliError> {
    let red = prepare(f)?;
    let (g, view) = principal_view(&red, cfg)?;
    let t = t_from_principal(&g)?;
    let rec = curve_from_t(&t)?;
    let matches = transform_to_ft(&g)? == rec.f_t;
    Ok(QCurveReport {
        schema: SCHEMA,
        principal_form: Some(view),
        transform_matches_f_t: Some(matches),
        curve: QCurveView::new(&rec, cfg.factor_bound)?,
    })
}
