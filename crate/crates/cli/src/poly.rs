//! Polynomial input: either a coefficient list (constant term first) or an
//! expression such as `x^4+37x-43`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use octahedral::arith::integer::parse_rational;
use octahedral::QPoly;

use crate::error::CliError;

pub fn parse_poly(s: &str) -> Result<QPoly, CliError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(CliError::Parse {
            line: None,
            message: "empty polynomial".into(),
        });
    }
    if !s.contains(['x', 'X']) && s.contains(',') {
        return parse_coeff_list(s).map_err(|message| CliError::Parse { line: None, message });
    }
    parse_expr(s).map_err(|message| CliError::Parse { line: None, message })
}

/// `c0,c1,...` with optional surrounding brackets.
pub fn parse_coeff_list(s: &str) -> Result<QPoly, String> {
    let s = s.trim().trim_start_matches('[').trim_end_matches(']');
    let coeffs = s
        .split(',')
        .map(|c| parse_rational(c.trim()).ok_or_else(|| format!("bad coefficient `{}`", c.trim())))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(QPoly::new(coeffs))
}

fn parse_expr(s: &str) -> Result<QPoly, String> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut terms = Vec::new();
    let mut start = 0;
    for (i, ch) in compact.char_indices() {
        if (ch == '+' || ch == '-') && i > start && !compact[..i].ends_with('^') {
            terms.push(&compact[start..i]);
            start = i;
        }
    }
    terms.push(&compact[start..]);

    let mut coeffs: Vec<BigRational> = Vec::new();
    for term in terms {
        let (deg, c) = parse_term(term)?;
        if coeffs.len() <= deg {
            coeffs.resize(deg + 1, BigRational::zero());
        }
        coeffs[deg] += c;
    }
    Ok(QPoly::new(coeffs))
}

fn parse_term(term: &str) -> Result<(usize, BigRational), String> {
    let bad = || format!("bad term `{term}`");
    let (sign, body) = match term.as_bytes().first() {
        Some(b'-') => (-1, &term[1..]),
        Some(b'+') => (1, &term[1..]),
        _ => (1, term),
    };
    if body.is_empty() {
        return Err(bad());
    }
    let sign = BigRational::from_integer(BigInt::from(sign));
    let Some(pos) = body.find(['x', 'X']) else {
        return Ok((0, sign * parse_rational(body).ok_or_else(bad)?));
    };
    let coeff = body[..pos].trim_end_matches('*');
    let coeff = if coeff.is_empty() {
        BigRational::from_integer(BigInt::from(1))
    } else {
        parse_rational(coeff).ok_or_else(bad)?
    };
    let rest = &body[pos + 1..];
    let deg = if rest.is_empty() {
        1
    } else {
        rest.strip_prefix('^')
            .and_then(|e| e.parse::<usize>().ok())
            .filter(|&e| e <= 64)
            .ok_or_else(bad)?
    };
    Ok((deg, sign * coeff))
}
