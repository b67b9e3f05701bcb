use std::fs;

use bellpoly::arith::parse_rational;
use bellpoly::{IndexVector, Rational, RationalSequence};
use serde_json::Value;

/// Resolves `--x`: a keyword (`ones`, `factorials`, `identity-j`, `random`)
/// or a path to a JSON array of rational strings. Keyword sequences get
/// `len` entries; a file gives whatever it holds.
pub fn load_sequence(
    spec: &str,
    len: usize,
    seed: Option<u64>,
) -> Result<RationalSequence, String> {
    match spec {
        "ones" => Ok(RationalSequence::ones(len)),
        "factorials" => Ok(RationalSequence::factorials(len)),
        "identity-j" => Ok(RationalSequence::identity(len)),
        "random" => {
            let seed = seed.ok_or("--x random needs --seed")?;
            Ok(RationalSequence::small_random(seed, len))
        }
        path => {
            let text = fs::read_to_string(path)
                .map_err(|e| format!("cannot read sequence file {path}: {e}"))?;
            parse_sequence_json(&text).map_err(|e| format!("{path}: {e}"))
        }
    }
}

/// Accepts `["1/2", "3"]` and the nested form `[["1/2", "3"]]`.
pub fn parse_sequence_json(text: &str) -> Result<RationalSequence, String> {
    let value: Value = serde_json::from_str(text).map_err(|e| format!("invalid JSON: {e}"))?;
    let items = match &value {
        Value::Array(outer) if outer.len() == 1 && outer[0].is_array() => {
            outer[0].as_array().unwrap()
        }
        Value::Array(items) => items,
        _ => return Err("expected a JSON array of rational strings".into()),
    };
    let strings = items
        .iter()
        .map(|v| match v {
            Value::String(s) => Ok(s.clone()),
            Value::Number(n) if n.is_i64() => Ok(n.to_string()),
            other => Err(format!("not a rational string: {other}")),
        })
        .collect::<Result<Vec<_>, _>>()?;
    RationalSequence::parse(&strings).map_err(|e| e.to_string())
}

pub fn rational(text: &str) -> Result<Rational, String> {
    parse_rational(text).map_err(|e| e.to_string())
}

/// `"2,1"` -> `v = (2, 1)`.
pub fn index_vector(text: &str) -> Result<IndexVector, String> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| format!("bad index vector entry {s:?}"))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(IndexVector::new)
}

/// Comma-separated rationals, e.g. polynomial coefficients.
pub fn rational_list(text: &str) -> Result<Vec<Rational>, String> {
    text.split(',').map(|s| rational(s.trim())).collect()
}
