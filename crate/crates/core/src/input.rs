//! Parsing of type literals.
//!
//! A line is a JSON array, either flat (`[1,1,2,3,3]`) or compact pairs
//! (`[[1,1],[75,2]]`, each pair `[dim, multiplicity]`).

use serde_json::Value;
use thiserror::Error;

use crate::fusion_type::{FusionType, TypeError};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("malformed JSON: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("expected a JSON array")]
    NotArray,
    #[error("element {0} is not an integer")]
    NotInteger(usize),
    #[error("element {0} is not a [dim, multiplicity] pair")]
    BadPair(usize),
    #[error("array mixes plain integers and [dim, multiplicity] pairs")]
    Mixed,
    #[error(transparent)]
    Type(#[from] TypeError),
}

fn as_int(v: &Value) -> Option<i128> {
    v.as_i64()
        .map(i128::from)
        .or_else(|| v.as_u64().map(i128::from))
}

/// Parses one type literal, auto-detecting the flat or compact form.
pub fn parse_type(line: &str) -> Result<FusionType, ParseError> {
    let value: Value = serde_json::from_str(line.trim())?;
    let Value::Array(items) = value else {
        return Err(ParseError::NotArray);
    };
    if items.is_empty() {
        return Err(TypeError::Empty.into());
    }
    let compact = items[0].is_array();
    if items.iter().any(|v| v.is_array() != compact) {
        return Err(ParseError::Mixed);
    }

    if compact {
        let mut pairs = Vec::with_capacity(items.len());
        for (i, item) in items.iter().enumerate() {
            let pair = item
                .as_array()
                .filter(|p| p.len() == 2)
                .ok_or(ParseError::BadPair(i))?;
            let dim = as_int(&pair[0]).ok_or(ParseError::BadPair(i))?;
            let mult = as_int(&pair[1]).ok_or(ParseError::BadPair(i))?;
            pairs.push((dim, mult));
        }
        Ok(FusionType::from_compact(&pairs)?)
    } else {
        let raw = items
            .iter()
            .enumerate()
            .map(|(i, v)| as_int(v).ok_or(ParseError::NotInteger(i)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FusionType::new(&raw)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flat_literal() {
        let t = parse_type("[1,1,2,3,3]").unwrap();
        assert_eq!(t.dims(), &[1, 1, 2, 3, 3]);
        assert_eq!(parse_type("  [3, 1]\n").unwrap().dims(), &[1, 3]);
    }

    #[test]
    fn compact_literal() {
        let t = parse_type(
            "[[1,1],[135,4],[165,2],[189,2],[315,2],[385,2],[1155,2],[2079,2],[3465,8]]",
        )
        .unwrap();
        assert_eq!(t.rank(), 25);
        assert_eq!(t.pt(), 1);
    }

    #[test]
    fn errors() {
        assert!(matches!(
            parse_type("[2,3]"),
            Err(ParseError::Type(TypeError::NoUnit))
        ));
        assert!(matches!(parse_type("[1,2"), Err(ParseError::Syntax(_))));
        assert!(matches!(parse_type("{\"a\":1}"), Err(ParseError::NotArray)));
        assert!(matches!(parse_type("[1,[2,1]]"), Err(ParseError::Mixed)));
        assert!(matches!(
            parse_type("[[1,1],[2]]"),
            Err(ParseError::BadPair(1))
        ));
        assert!(matches!(
            parse_type("[1,2.5]"),
            Err(ParseError::NotInteger(1))
        ));
        assert!(matches!(
            parse_type("[]"),
            Err(ParseError::Type(TypeError::Empty))
        ));
        assert!(matches!(
            parse_type("[1,0]"),
            Err(ParseError::Type(TypeError::NonPositive { .. }))
        ));
        assert!(matches!(
            parse_type("[[1,1],[3,0]]"),
            Err(ParseError::Type(TypeError::ZeroMultiplicity {
                position: 1
            }))
        ));
    }
}
