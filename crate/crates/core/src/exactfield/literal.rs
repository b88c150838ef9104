//! Scalar literals: polynomials in `z` with rational coefficients.
//!
//! `z` is the distinguished primitive n-th root of `Q(ζₙ)`. Prime fields take
//! plain (possibly negative) decimal integers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::field::{Field, FieldElem};
use super::FieldSpec;
use crate::error::{Error, Result};

fn bad(literal: &str, reason: impl Into<String>) -> Error {
    Error::BadLiteral {
        literal: literal.to_string(),
        reason: reason.into(),
    }
}

/// Parses a scalar literal in `field`.
///
/// ```
/// use gsla_core::exactfield::{parse_scalar, Field};
/// let k = Field::cyclotomic(4);
/// let x = parse_scalar(&k, "1/2 - 3*z^2").unwrap();
/// assert_eq!(x.to_string(), "7/2");
/// ```
pub fn parse_scalar(field: &Field, s: &str) -> Result<FieldElem> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(bad(s, "empty literal"));
    }
    if let FieldSpec::Prime { p } = field.spec() {
        let v: BigInt = compact.parse().map_err(|_| bad(s, "expected a decimal integer"))?;
        let _ = p;
        return Ok(field.from_rational(&BigRational::from_integer(v)));
    }
    let mut coords: Vec<BigRational> = Vec::new();
    let bytes = compact.as_bytes();
    let mut pos = 0;
    while pos < bytes.len() {
        let mut sign = BigRational::one();
        if bytes[pos] == b'+' || bytes[pos] == b'-' {
            if bytes[pos] == b'-' {
                sign = -sign;
            }
            pos += 1;
        } else if pos > 0 {
            return Err(bad(s, format!("unexpected character at offset {pos}")));
        }
        let end = bytes[pos..]
            .iter()
            .position(|&b| b == b'+' || b == b'-')
            .map_or(bytes.len(), |k| pos + k);
        let term = &compact[pos..end];
        if term.is_empty() {
            return Err(bad(s, "empty term"));
        }
        let (coef, power) = parse_term(s, term)?;
        if power > 0 && !matches!(field.spec(), FieldSpec::Cyclotomic { .. }) {
            return Err(bad(s, "`z` is only available in cyclotomic fields"));
        }
        if coords.len() <= power {
            coords.resize(power + 1, BigRational::zero());
        }
        coords[power] += sign * coef;
        pos = end;
    }
    Ok(field.from_power_coords(&coords))
}

fn parse_term(full: &str, term: &str) -> Result<(BigRational, usize)> {
    let (coef_part, z_part) = match term.find('z') {
        None => (term, None),
        Some(k) => {
            let coef = term[..k].strip_suffix('*').unwrap_or(&term[..k]);
            if k > 0 && coef.len() == term[..k].len() && !coef.is_empty() {
                return Err(bad(full, "missing `*` between coefficient and `z`"));
            }
            (coef, Some(&term[k + 1..]))
        }
    };
    let coef = if coef_part.is_empty() {
        if z_part.is_none() {
            return Err(bad(full, "empty term"));
        }
        BigRational::one()
    } else {
        parse_rational(coef_part).ok_or_else(|| bad(full, format!("bad coefficient {coef_part:?}")))?
    };
    let power = match z_part {
        None => 0,
        Some("") => 1,
        Some(rest) => {
            let digits = rest
                .strip_prefix('^')
                .ok_or_else(|| bad(full, format!("unexpected {rest:?} after `z`")))?;
            digits
                .parse::<usize>()
                .map_err(|_| bad(full, format!("bad exponent {digits:?}")))?
        }
    };
    Ok((coef, power))
}

fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
        Some((n, d)) => {
            let n: BigInt = n.parse().ok()?;
            let d: BigInt = d.parse().ok()?;
            if d.is_zero() || d.is_negative() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
    }
}

/// Canonical text form, lowest power of `z` first.
pub fn format_scalar(x: &FieldElem) -> String {
    match x {
        FieldElem::Rat(q) => q.to_string(),
        FieldElem::Fp(v, _) => v.to_string(),
        FieldElem::Cyc(_, coords) => {
            let mut out = String::new();
            for (k, c) in coords.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let neg = c.is_negative();
                let mag = c.abs();
                if out.is_empty() {
                    if neg {
                        out.push('-');
                    }
                } else {
                    out.push_str(if neg { " - " } else { " + " });
                }
                let z = match k {
                    0 => String::new(),
                    1 => "z".to_string(),
                    _ => format!("z^{k}"),
                };
                if k == 0 {
                    out.push_str(&mag.to_string());
                } else if mag.is_one() {
                    out.push_str(&z);
                } else {
                    out.push_str(&format!("{mag}*{z}"));
                }
            }
            if out.is_empty() {
                "0".to_string()
            } else {
                out
            }
        }
    }
}
