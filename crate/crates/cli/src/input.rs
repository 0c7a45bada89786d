//! Input files and inline scalars.
//!
//! Scalars are JSON arrays of decimal strings: `["rat", num, den]` or
//! `["quad", a_num, a_den, b_num, b_den]` for `a + b√d`, where `d` comes from
//! the top-level field descriptor.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use wfdim_core::{ExactScalar, FactoredInput, FieldDescriptor, Poly};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum JsonField {
    Rational,
    Quadratic { d: i64 },
}

impl JsonField {
    pub fn descriptor(self) -> Result<FieldDescriptor, CliError> {
        match self {
            JsonField::Rational => Ok(FieldDescriptor::Rational),
            JsonField::Quadratic { d } => {
                FieldDescriptor::quadratic(d).map_err(|e| CliError::Parse(format!("field d = {d}: {e}")))
            }
        }
    }

    pub fn from_descriptor(f: FieldDescriptor) -> Self {
        match f.d() {
            None => JsonField::Rational,
            Some(d) => JsonField::Quadratic { d },
        }
    }
}

pub type JsonScalar = Vec<String>;

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputSpec {
    pub field: JsonField,
    #[serde(default)]
    pub roots: Option<Vec<(JsonScalar, usize)>>,
    #[serde(default)]
    pub coefficients: Option<Vec<JsonScalar>>,
    #[serde(default)]
    pub leading: Option<JsonScalar>,
    #[serde(default)]
    pub precision_bits: Option<u32>,
}

/// A parsed input: either factored (all routes) or bare coefficients (oracle only).
#[derive(Clone, Debug)]
pub enum Parsed {
    Factored(FactoredInput),
    Coefficients(Poly),
}

fn integer(s: &str) -> Result<BigInt, CliError> {
    s.trim()
        .parse::<BigInt>()
        .map_err(|_| CliError::Parse(format!("not a decimal integer: {s:?}")))
}

fn ratio(num: &str, den: &str) -> Result<BigRational, CliError> {
    let (n, d) = (integer(num)?, integer(den)?);
    if d == BigInt::from(0) {
        return Err(CliError::Parse(format!("zero denominator in {num}/{den}")));
    }
    Ok(BigRational::new(n, d))
}

pub fn scalar_from_json(v: &[String], field: FieldDescriptor) -> Result<ExactScalar, CliError> {
    let tag = v.first().map(String::as_str);
    match (tag, v.len()) {
        (Some("rat"), 3) => Ok(ExactScalar::from_rational_in(ratio(&v[1], &v[2])?, field)),
        (Some("quad"), 5) => {
            if field.d().is_none() {
                return Err(CliError::Parse("\"quad\" scalar in a rational field".into()));
            }
            ExactScalar::new(ratio(&v[1], &v[2])?, ratio(&v[3], &v[4])?, field)
                .map_err(|e| CliError::Parse(e.to_string()))
        }
        _ => Err(CliError::Parse(format!(
            "expected [\"rat\", n, d] or [\"quad\", an, ad, bn, bd], got {v:?}"
        ))),
    }
}

pub fn scalar_to_json(x: &ExactScalar) -> JsonScalar {
    let (a, b) = (x.a(), x.b());
    match x.field() {
        FieldDescriptor::Rational => vec!["rat".into(), a.numer().to_string(), a.denom().to_string()],
        FieldDescriptor::Quadratic(_) => vec![
            "quad".into(),
            a.numer().to_string(),
            a.denom().to_string(),
            b.numer().to_string(),
            b.denom().to_string(),
        ],
    }
}

pub fn parse_spec(text: &str) -> Result<(InputSpec, Parsed), CliError> {
    let spec: InputSpec = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
    let field = spec.field.descriptor()?;
    let parsed = match (&spec.roots, &spec.coefficients) {
        (Some(roots), None) => {
            let roots = roots
                .iter()
                .map(|(s, m)| {
                    if *m == 0 {
                        return Err(CliError::Parse("multiplicity must be at least 1".into()));
                    }
                    Ok((scalar_from_json(s, field)?, *m))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let lead = match &spec.leading {
                Some(l) => scalar_from_json(l, field)?,
                None => ExactScalar::one_in(field),
            };
            Parsed::Factored(FactoredInput::new(roots, lead).map_err(CliError::Core)?)
        }
        (None, Some(coeffs)) => {
            if spec.leading.is_some() {
                return Err(CliError::Parse("\"leading\" applies to the roots form only".into()));
            }
            let cs = coeffs
                .iter()
                .map(|c| scalar_from_json(c, field))
                .collect::<Result<Vec<_>, _>>()?;
            Parsed::Coefficients(Poly::from_coeffs(cs, field).map_err(CliError::Core)?)
        }
        _ => {
            return Err(CliError::Parse(
                "exactly one of \"roots\" or \"coefficients\" is required".into(),
            ))
        }
    };
    Ok((spec, parsed))
}

/// Inline scalar: `p`, `p/q`, or `a|b` for `a + b√d` (needs a quadratic field).
pub fn inline_scalar(s: &str, field: FieldDescriptor) -> Result<ExactScalar, CliError> {
    let rat = |t: &str| -> Result<BigRational, CliError> {
        match t.trim().split_once('/') {
            Some((n, d)) => ratio(n, d),
            None => Ok(BigRational::from_integer(integer(t)?)),
        }
    };
    match s.split_once('|') {
        Some((a, b)) => {
            if field.d().is_none() {
                return Err(CliError::Parse(format!("{s:?} needs a quadratic field (--d)")));
            }
            ExactScalar::new(rat(a)?, rat(b)?, field).map_err(|e| CliError::Parse(e.to_string()))
        }
        None => Ok(ExactScalar::from_rational_in(rat(s)?, field)),
    }
}

pub fn inline_list(s: &str, field: FieldDescriptor) -> Result<Vec<ExactScalar>, CliError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|t| inline_scalar(t, field)).collect()
}
