//! Table files: one row per line, `table_id ; d ; c0,c1,c2,c3,c4 ; b,c ; star`.
//! Blank lines and lines starting with `#` are ignored.

use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use octahedral::arith::integer::squarefree_part_with;
use octahedral::embedding::classify_with;
use octahedral::quartic::{
    depress, galois_is_s4, is_irreducible, principalize_with, same_field_with, trace_form_with, witt_formula_with,
};
use octahedral::{Config, QPoly};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::CliError;
use crate::poly::parse_coeff_list;
use crate::SCHEMA;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub line: usize,
    pub table_id: u8,
    pub expected_disc: BigInt,
    /// Constant term first.
    pub source: Vec<BigInt>,
    pub principal_b: BigInt,
    pub principal_c: BigInt,
    pub star: bool,
}

fn to_poly(cs: &[BigInt]) -> QPoly {
    QPoly::new(cs.iter().map(|c| BigRational::from_integer(c.clone())).collect())
}

impl TableRow {
    pub fn source_poly(&self) -> QPoly {
        to_poly(&self.source)
    }

    pub fn principal_poly(&self) -> QPoly {
        to_poly(&[
            self.principal_c.clone(),
            self.principal_b.clone(),
            BigInt::from(0),
            BigInt::from(0),
            BigInt::from(1),
        ])
    }
}

fn integers(field: &str, line: usize) -> Result<Vec<BigInt>, CliError> {
    let p = parse_coeff_list(field).map_err(|message| CliError::Parse {
        line: Some(line),
        message,
    })?;
    let mut out: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| {
            c.is_integer().then(|| c.to_integer()).ok_or_else(|| CliError::Parse {
                line: Some(line),
                message: format!("non-integer coefficient {c}"),
            })
        })
        .collect::<Result<_, _>>()?;
    let listed = field.split(',').count();
    out.resize(listed.max(out.len()), BigInt::from(0));
    Ok(out)
}

pub fn parse_row(text: &str, line: usize) -> Result<TableRow, CliError> {
    let parse_err = |message: String| CliError::Parse {
        line: Some(line),
        message,
    };
    let fields: Vec<&str> = text.split(';').map(str::trim).collect();
    if fields.len() != 5 {
        return Err(parse_err(format!("expected 5 fields, found {}", fields.len())));
    }
    let table_id: u8 = fields[0]
        .parse()
        .map_err(|_| parse_err(format!("bad table id `{}`", fields[0])))?;
    let expected_disc: BigInt = fields[1]
        .parse()
        .map_err(|_| parse_err(format!("bad discriminant `{}`", fields[1])))?;
    let source = integers(fields[2], line)?;
    if source.len() != 5 {
        return Err(parse_err(format!("expected 5 source coefficients, found {}", source.len())));
    }
    let bc = integers(fields[3], line)?;
    if bc.len() != 2 {
        return Err(parse_err(format!("expected `b,c`, found {} values", bc.len())));
    }
    let star = match fields[4] {
        "0" | "" => false,
        "1" | "*" => true,
        s => return Err(parse_err(format!("bad star flag `{s}`"))),
    };
    Ok(TableRow {
        line,
        table_id,
        expected_disc,
        source,
        principal_b: bc[0].clone(),
        principal_c: bc[1].clone(),
        star,
    })
}

/// Checks the row invariants that do not depend on the table placement.
pub fn validate_row(row: &TableRow, bound: u64) -> Result<(), CliError> {
    let fail = |invariant: &str| CliError::Validation {
        line: row.line,
        invariant: invariant.to_string(),
    };
    if !(1..=5).contains(&row.table_id) {
        return Err(fail("table id in 1..5"));
    }
    let want = squarefree_part_with(&BigRational::from_integer(row.expected_disc.clone()), bound)?;
    for (name, p) in [("source", row.source_poly()), ("principal", row.principal_poly())] {
        if p.degree() != Some(4) || !p.is_monic() {
            return Err(fail(&format!("{name} polynomial is a monic quartic")));
        }
        if !is_irreducible(&p)? {
            return Err(fail(&format!("{name} polynomial is irreducible")));
        }
        if squarefree_part_with(&p.discriminant(), bound)? != want {
            return Err(fail(&format!("{name} discriminant is in the class of d = {}", row.expected_disc)));
        }
    }
    Ok(())
}

pub fn parse_table_str(text: &str, bound: u64) -> Result<Vec<TableRow>, CliError> {
    let mut rows = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let t = raw.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let row = parse_row(t, i + 1)?;
        validate_row(&row, bound)?;
        rows.push(row);
    }
    Ok(rows)
}

pub fn parse_table(path: &Path, bound: u64) -> Result<Vec<TableRow>, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    parse_table_str(&text, bound)
}

#[derive(Clone, Debug, Serialize)]
pub struct RowResult {
    pub line: usize,
    pub d: String,
    pub table: u8,
    pub classified_table: Option<u8>,
    pub star: bool,
    pub passed: bool,
    pub failures: Vec<String>,
    /// `[b, c]` found by the principal-form search.
    pub principalized: Option<[String; 2]>,
}

/// Runs every check for one row and lists the ones that failed.
pub fn verify_row(row: &TableRow, cfg: &Config) -> RowResult {
    let mut failures = Vec::new();
    let mut classified_table = None;
    let mut principalized = None;
    let levels: Vec<u32> = (0..4).map(|k| cfg.precision_digits << k).collect();
    let source = row.source_poly();

    let outcome = (|| -> Result<(), CliError> {
        let red = depress(&source)?;
        if !galois_is_s4(&red)? {
            failures.push("Galois group is not S4".to_string());
            return Ok(());
        }
        let tf = trace_form_with(&red, cfg.factor_bound)?;
        if witt_formula_with(&red, cfg.factor_bound)? != tf.witt {
            failures.push(format!("Witt invariants disagree: trace form {}", tf.witt));
        }
        let rep = classify_with(&red, cfg.factor_bound)?;
        if !rep.principal {
            failures.push("field is not principal".to_string());
        }
        if !rep.criteria_agree {
            failures.push("closed criteria disagree with the Brauer computation".to_string());
        }
        classified_table = Some(rep.table());
        if rep.table() != row.table_id {
            failures.push(format!("classified into table {}, listed in table {}", rep.table(), row.table_id));
        }
        if rep.star_norm2 != row.star {
            failures.push(format!("star mismatch: (2, -3d) trivial is {}, flag is {}", rep.star_norm2, row.star));
        }
        match same_field_with(&source, &row.principal_poly(), &levels, cfg.factor_bound)? {
            Some(cert) if cert.verify(&source, &row.principal_poly()) => {}
            Some(_) => failures.push("same-field certificate failed exact verification".to_string()),
            None => failures.push("no same-field certificate for the listed principal form".to_string()),
        }
        if rep.principal {
            let (g, cert) = principalize_with(&red, cfg.search_box, cfg.factor_bound)?;
            if !cert.verify(&red.poly(), &g.poly()) {
                failures.push("principalize certificate failed exact verification".to_string());
            }
            principalized = Some([g.b.to_string(), g.c.to_string()]);
        }
        Ok(())
    })();
    if let Err(e) = outcome {
        failures.push(e.to_string());
    }
    RowResult {
        line: row.line,
        d: row.expected_disc.to_string(),
        table: row.table_id,
        classified_table,
        star: row.star,
        passed: failures.is_empty(),
        failures,
        principalized,
    }
}

#[derive(Debug, Serialize)]
pub struct TableSummary {
    pub schema: u32,
    pub total: usize,
    pub passed: usize,
    pub failed: Vec<usize>,
    pub rows: Vec<RowResult>,
}

impl TableSummary {
    pub fn all_passed(&self) -> bool {
        self.failed.is_empty()
    }
}

/// Verifies rows in parallel; results keep the input order.
pub fn verify_rows(rows: &[TableRow], cfg: &Config) -> TableSummary {
    let results: Vec<RowResult> = rows.par_iter().map(|r| verify_row(r, cfg)).collect();
    TableSummary {
        schema: SCHEMA,
        total: results.len(),
        passed: results.iter().filter(|r| r.passed).count(),
        failed: results.iter().filter(|r| !r.passed).map(|r| r.line).collect(),
        rows: results,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_row_of_table_one() {
        let row = parse_row("1 ; -283 ; -1,-1,0,0,1 ; 1,-1 ; 0", 1).unwrap();
        assert_eq!(row.table_id, 1);
        assert_eq!(row.expected_disc, BigInt::from(-283));
        assert_eq!(row.principal_poly(), QPoly::from_i64s(&[-1, 1, 0, 0, 1]));
        assert!(!row.star);
        validate_row(&row, 1_000_000).unwrap();
    }

    #[test]
    fn malformed_rows() {
        for (text, what) in [
            ("1 ; -283 ; -1,-1,0,x,1 ; 1,-1 ; 0", "coefficient"),
            ("1 ; -283 ; -1,-1,0,0,1 ; 1,-1", "fields"),
            ("1 ; -283 ; -1,-1,0,1 ; 1,-1 ; 0", "source"),
            ("1 ; -283 ; -1,-1,0,0,1 ; 1,-1 ; maybe", "star"),
        ] {
            let e = parse_row(text, 7).unwrap_err();
            assert!(matches!(e, CliError::Parse { line: Some(7), .. }), "{what}: {e}");
        }
    }

    #[test]
    fn discriminant_mismatch() {
        let row = parse_row("1 ; -284 ; -1,-1,0,0,1 ; 1,-1 ; 0", 3).unwrap();
        let e = validate_row(&row, 1_000_000).unwrap_err();
        assert!(matches!(e, CliError::Validation { line: 3, .. }), "{e}");
    }
}
