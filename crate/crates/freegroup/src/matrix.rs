//! Two-row integer matrix form: symbols on top, powers below.

use crate::error::{Error, Result};
use crate::word::Word;

/// Builds a word from the two rows of the matrix form, reducing as needed.
/// The rows must have equal length and every top-row entry must be ≥ 1;
/// zero powers in the bottom row are dropped by reduction.
pub fn from_rows(symbols: &[i64], exponents: &[i64]) -> Result<Word> {
    if symbols.len() != exponents.len() {
        return Err(Error::RowLengthMismatch {
            top: symbols.len(),
            bottom: exponents.len(),
        });
    }
    let pairs = symbols
        .iter()
        .zip(exponents)
        .map(|(&s, &e)| {
            if s < 1 {
                Err(Error::InvalidSymbol(s))
            } else {
                Ok((s as u64, e))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Word::reduce(pairs)
}

/// The reduced word's columns: (top row of symbols, bottom row of powers).
pub fn to_rows(word: &Word) -> (Vec<u64>, Vec<i64>) {
    word.pairs().unzip()
}
