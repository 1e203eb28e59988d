//! Input formats: polynomial JSON, polytope JSON and Laurent text.

use std::str::FromStr;

use num_rational::BigRational;
use num_traits::Zero;
use qfact_core::{parse_laurent, LatticePoint, LaurentPolynomial};
use serde::Deserialize;

use crate::certify::Source;

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("cannot parse polynomial: {0}")]
    Laurent(#[from] qfact_core::Error),
    #[error("{0}")]
    Shape(String),
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Coefficient {
    Int(i64),
    Text(String),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TermJson {
    exponents: Vec<i64>,
    coefficient: Coefficient,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PolynomialJson {
    variables: Vec<String>,
    terms: Vec<TermJson>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PolytopeJson {
    vertices: Vec<Vec<i64>>,
}

fn rational(c: &Coefficient) -> Result<BigRational, FormatError> {
    match c {
        Coefficient::Int(n) => Ok(BigRational::from_integer((*n).into())),
        Coefficient::Text(s) => {
            let q = BigRational::from_str(s.trim())
                .map_err(|_| FormatError::Shape(format!("bad coefficient {s:?}")))?;
            Ok(q)
        }
    }
}

/// `{"variables": [...], "terms": [{"exponents": [...], "coefficient": "p/q"}]}`.
///
/// Any variable count other than three yields [`Source::UnsupportedDimension`].
pub fn parse_polynomial_json(text: &str) -> Result<Source, FormatError> {
    let p: PolynomialJson = serde_json::from_str(text)?;
    let d = p.variables.len();
    for (i, t) in p.terms.iter().enumerate() {
        if t.exponents.len() != d {
            return Err(FormatError::Shape(format!(
                "term {i} has {} exponents for {d} variables",
                t.exponents.len()
            )));
        }
        rational(&t.coefficient)?;
    }
    if d != 3 {
        return Ok(Source::UnsupportedDimension(d));
    }
    let mut f = LaurentPolynomial::new();
    for t in &p.terms {
        let c = rational(&t.coefficient)?;
        if !c.is_zero() {
            f.add_term([t.exponents[0], t.exponents[1], t.exponents[2]], c);
        }
    }
    Ok(Source::Laurent(f))
}

/// `{"vertices": [[i, j, k], ...]}`.
pub fn parse_polytope_json(text: &str) -> Result<Source, FormatError> {
    let p: PolytopeJson = serde_json::from_str(text)?;
    let Some(first) = p.vertices.first() else {
        return Err(FormatError::Shape("polytope has no vertices".into()));
    };
    let d = first.len();
    if p.vertices.iter().any(|v| v.len() != d) {
        return Err(FormatError::Shape("vertices have mixed dimensions".into()));
    }
    if d != 3 {
        return Ok(Source::UnsupportedDimension(d));
    }
    Ok(Source::Polytope(
        p.vertices
            .iter()
            .map(|v| LatticePoint::new(v[0], v[1], v[2]))
            .collect(),
    ))
}

/// Laurent text in `x`, `y`, `z`.
pub fn parse_polynomial_text(text: &str) -> Result<Source, FormatError> {
    Ok(Source::Laurent(parse_laurent(text)?))
}

/// A polynomial file is JSON when its first non-blank character is `{`,
/// Laurent text otherwise.
pub fn parse_polynomial_file(text: &str) -> Result<Source, FormatError> {
    if text.trim_start().starts_with('{') {
        parse_polynomial_json(text)
    } else {
        parse_polynomial_text(text)
    }
}
