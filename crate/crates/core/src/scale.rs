//! Exact conversion of decimal edge weights to integers.
//!
//! Instance files carry integer weights only. A file whose weights are
//! decimals (`[0, 1, 2.75]`) is converted by multiplying every weight by a
//! declared integer factor; conversion fails unless every product is an
//! exact integer. Scaling by a positive constant leaves the set of
//! optimal trees unchanged.

use crate::instance::{ConstraintEntry, InstanceFile};
use serde::Deserialize;
use serde_json::value::RawValue;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScaleError {
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("scale factor must be positive")]
    ZeroFactor,
    #[error("edges[{index}]: weight {text} is not a decimal number")]
    NotDecimal { index: usize, text: String },
    #[error("edges[{index}]: weight {text} times {factor} is not an integer")]
    Inexact {
        index: usize,
        text: String,
        factor: u64,
    },
    #[error("edges[{index}]: weight {text} times {factor} overflows a 64-bit integer")]
    Overflow {
        index: usize,
        text: String,
        factor: u64,
    },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DecimalInstance {
    n: i64,
    edges: Vec<(i64, i64, Box<RawValue>)>,
    #[serde(default)]
    constrained: Vec<ConstraintEntry>,
}

enum LiteralError {
    NotDecimal,
    Inexact,
    Overflow,
}

/// Exact `text * factor` for a JSON number literal.
fn scale_literal(text: &str, factor: u64) -> Result<i64, LiteralError> {
    let (negative, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let (number, exponent) = match body.find(['e', 'E']) {
        Some(i) => (
            &body[..i],
            body[i + 1..]
                .parse::<i32>()
                .map_err(|_| LiteralError::NotDecimal)?,
        ),
        None => (body, 0),
    };
    let (int_part, frac_part) = number.split_once('.').unwrap_or((number, ""));
    if int_part.is_empty()
        || !int_part.bytes().all(|c| c.is_ascii_digit())
        || !frac_part.bytes().all(|c| c.is_ascii_digit())
    {
        return Err(LiteralError::NotDecimal);
    }
    let digits = format!("{int_part}{frac_part}");
    let digits = digits.trim_start_matches('0');
    let mantissa: i128 = if digits.is_empty() {
        0
    } else {
        digits.parse().map_err(|_| LiteralError::Overflow)?
    };
    let mut value = mantissa
        .checked_mul(i128::from(factor))
        .ok_or(LiteralError::Overflow)?;
    let shift = exponent - frac_part.len() as i32;
    for _ in 0..shift.max(0) {
        value = value.checked_mul(10).ok_or(LiteralError::Overflow)?;
    }
    for _ in 0..(-shift).max(0) {
        if value % 10 != 0 {
            return Err(LiteralError::Inexact);
        }
        value /= 10;
    }
    let value = if negative { -value } else { value };
    i64::try_from(value).map_err(|_| LiteralError::Overflow)
}

/// Multiplies every edge weight by `factor`, requiring exact integer results.
pub fn scale_weights(text: &str, factor: u64) -> Result<InstanceFile, ScaleError> {
    if factor == 0 {
        return Err(ScaleError::ZeroFactor);
    }
    let raw: DecimalInstance =
        serde_json::from_str(text).map_err(|e| ScaleError::Json(e.to_string()))?;
    let mut edges = Vec::with_capacity(raw.edges.len());
    for (index, (u, v, w)) in raw.edges.iter().enumerate() {
        let text = w.get().trim().to_string();
        let value = scale_literal(&text, factor).map_err(|e| match e {
            LiteralError::NotDecimal => ScaleError::NotDecimal {
                index,
                text: text.clone(),
            },
            LiteralError::Inexact => ScaleError::Inexact {
                index,
                text: text.clone(),
                factor,
            },
            LiteralError::Overflow => ScaleError::Overflow {
                index,
                text: text.clone(),
                factor,
            },
        })?;
        edges.push([*u, *v, value]);
    }
    Ok(InstanceFile {
        n: raw.n,
        edges,
        constrained: raw.constrained,
    })
}
