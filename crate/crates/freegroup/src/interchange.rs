//! Structured text interchange for word vectors.
//!
//! A vector serializes as a list of words, each word a list of
//! `[symbol, exponent]` integer pairs: `[[[1,2],[2,-3]]]`. Deserialization
//! validates every pair (positive symbol, nonzero in-range exponent) and
//! reduces words whose adjacent pairs share a symbol.

use serde_json::Value;

use crate::error::{Error, Result};
use crate::vector::WordVector;
use crate::word::Word;
use crate::AbelianWord;

/// Serializes a vector of words; the output is a single line.
pub fn serialize(words: &WordVector) -> String {
    let value = Value::Array(
        words
            .iter()
            .map(|w| {
                Value::Array(
                    w.pairs()
                        .map(|(s, e)| Value::Array(vec![Value::from(s), Value::from(e)]))
                        .collect(),
                )
            })
            .collect(),
    );
    value.to_string()
}

/// Serializes abelian words in the same pair-list shape.
pub fn serialize_abelian(words: &[AbelianWord]) -> String {
    let value = Value::Array(
        words
            .iter()
            .map(|w| {
                Value::Array(
                    w.terms()
                        .iter()
                        .map(|&(s, e)| Value::Array(vec![Value::from(s), Value::from(e)]))
                        .collect(),
                )
            })
            .collect(),
    );
    value.to_string()
}

fn pair_error(word: usize, pair: usize, message: impl Into<String>) -> Error {
    Error::InterchangePair {
        word,
        pair,
        message: message.into(),
    }
}

/// Parses the output of [`serialize`] back into a vector of words.
pub fn deserialize(input: &str) -> Result<WordVector> {
    let value: Value =
        serde_json::from_str(input).map_err(|e| Error::InterchangeSyntax(e.to_string()))?;
    let Value::Array(words) = value else {
        return Err(Error::InterchangeSyntax(
            "expected a top-level list of words".into(),
        ));
    };
    let mut items = Vec::with_capacity(words.len());
    for (wi, word_value) in words.into_iter().enumerate() {
        let Value::Array(pairs) = word_value else {
            return Err(Error::InterchangeWord {
                word: wi,
                message: "expected a list of [symbol, exponent] pairs".into(),
            });
        };
        let mut raw = Vec::with_capacity(pairs.len());
        for (pi, pair_value) in pairs.into_iter().enumerate() {
            let Value::Array(entries) = pair_value else {
                return Err(pair_error(wi, pi, "expected a [symbol, exponent] pair"));
            };
            if entries.len() != 2 {
                return Err(pair_error(
                    wi,
                    pi,
                    format!("expected 2 entries, got {}", entries.len()),
                ));
            }
            let symbol = entries[0]
                .as_u64()
                .filter(|&s| s >= 1)
                .ok_or_else(|| pair_error(wi, pi, "symbol must be a positive integer"))?;
            let exponent = entries[1]
                .as_i64()
                .filter(|&e| e != i64::MIN)
                .ok_or_else(|| pair_error(wi, pi, "exponent must be an in-range integer"))?;
            if exponent == 0 {
                return Err(pair_error(wi, pi, "zero exponent"));
            }
            raw.push((symbol, exponent));
        }
        let word = Word::reduce(raw).map_err(|e| Error::InterchangeWord {
            word: wi,
            message: e.to_string(),
        })?;
        items.push(word);
    }
    Ok(WordVector::new(items))
}
