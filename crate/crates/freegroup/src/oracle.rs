//! Brute-force letter-level reference implementation.
//!
//! Everything here exists so tests can check the stack-based reducer against
//! an independent algorithm family: words are expanded into individual
//! signed letters and cancelling neighbours are deleted until a fixpoint.
//! It is deliberately quadratic; do not use it outside tests.

use rand::Rng;

use crate::error::{Error, Result};
use crate::word::{Syllable, Word};

/// A fully expanded word: `+s` is generator `s`, `-s` its inverse.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LetterString {
    letters: Vec<i64>,
}

/// Cap on how many letters [`expand`] will materialize.
pub const MAX_EXPANSION_LETTERS: u128 = 1 << 22;

impl LetterString {
    pub fn new(letters: Vec<i64>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::InvalidSymbol(0));
        }
        Ok(LetterString { letters })
    }

    pub fn letters(&self) -> &[i64] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

/// Expands raw (symbol, exponent) pairs into one signed letter per unit of
/// exponent. Fails if the expansion would exceed [`MAX_EXPANSION_LETTERS`].
pub fn expand(pairs: &[(u64, i64)]) -> Result<LetterString> {
    let required: u128 = pairs
        .iter()
        .map(|&(_, e)| u128::from(e.unsigned_abs()))
        .sum();
    if required > MAX_EXPANSION_LETTERS {
        return Err(Error::ExpansionTooLarge {
            required,
            limit: MAX_EXPANSION_LETTERS,
        });
    }
    let mut letters = Vec::with_capacity(required as usize);
    for &(symbol, exponent) in pairs {
        if symbol == 0 {
            return Err(Error::InvalidSymbol(0));
        }
        let signed = i64::try_from(symbol).map_err(|_| Error::SymbolTooLarge(symbol))?;
        let letter = if exponent < 0 { -signed } else { signed };
        for _ in 0..exponent.unsigned_abs() {
            letters.push(letter);
        }
    }
    Ok(LetterString { letters })
}

/// Deletes the leftmost adjacent inverse pair, over and over, until none
/// remains. Cancellation is confluent, so the deletion order is irrelevant
/// to the result (see [`reduce_letters_shuffled`] for the check).
pub fn reduce_letters(ls: &LetterString) -> LetterString {
    let mut letters = ls.letters.clone();
    loop {
        let cancel = letters
            .windows(2)
            .position(|pair| pair[0] == -pair[1]);
        match cancel {
            Some(i) => {
                letters.drain(i..i + 2);
            }
            None => break,
        }
    }
    LetterString { letters }
}

/// Same fixpoint as [`reduce_letters`] but deleting a randomly chosen
/// cancellable pair at each step.
pub fn reduce_letters_shuffled<R: Rng + ?Sized>(ls: &LetterString, rng: &mut R) -> LetterString {
    let mut letters = ls.letters.clone();
    loop {
        let candidates: Vec<usize> = letters
            .windows(2)
            .enumerate()
            .filter(|(_, pair)| pair[0] == -pair[1])
            .map(|(i, _)| i)
            .collect();
        if candidates.is_empty() {
            break;
        }
        let i = candidates[rng.random_range(0..candidates.len())];
        letters.drain(i..i + 2);
    }
    LetterString { letters }
}

/// Groups a reduced letter string back into syllables by run-length over the
/// symbols. Errors if the input still contains a cancelling pair.
pub fn regroup(ls: &LetterString) -> Result<Word> {
    let mut runs: Vec<(u64, i64)> = Vec::new();
    for &letter in &ls.letters {
        if letter == 0 {
            return Err(Error::InvalidSymbol(0));
        }
        let symbol = letter.unsigned_abs();
        let step: i64 = if letter > 0 { 1 } else { -1 };
        match runs.last_mut() {
            Some((top, exponent)) if *top == symbol => {
                *exponent += step;
                if *exponent == 0 {
                    return Err(Error::NotReduced);
                }
            }
            _ => runs.push((symbol, step)),
        }
    }
    let syllables = runs
        .into_iter()
        .map(|(s, e)| Syllable::new(s, e))
        .collect::<Result<Vec<_>>>()?;
    Ok(Word::from_reduced(syllables))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_pair_cancels() {
        let ls = LetterString::new(vec![1, -1]).unwrap();
        assert!(reduce_letters(&ls).is_empty());
    }

    #[test]
    fn nested_pairs_cancel() {
        let ls = LetterString::new(vec![1, 2, -2, -1]).unwrap();
        assert!(reduce_letters(&ls).is_empty());
    }

    #[test]
    fn informal_example_reduces() {
        // c^-4 b b^2 a a^-1 c a collapses to c^-4 b^3 c a
        let raw = [(3u64, -4i64), (2, 1), (2, 2), (1, 1), (1, -1), (3, 1), (1, 1)];
        let reduced = reduce_letters(&expand(&raw).unwrap());
        let expected = expand(&[(3, -4), (2, 3), (3, 1), (1, 1)]).unwrap();
        assert_eq!(reduced, expected);
        assert_eq!(
            regroup(&reduced).unwrap(),
            Word::reduce([(3u64, -4i64), (2, 3), (3, 1), (1, 1)]).unwrap()
        );
    }

    #[test]
    fn expand_unrolls_exponents() {
        assert_eq!(expand(&[(1, 2)]).unwrap().letters(), &[1, 1]);
        assert_eq!(expand(&[(2, -3)]).unwrap().letters(), &[-2, -2, -2]);
        assert!(expand(&[]).unwrap().is_empty());
    }

    #[test]
    fn regroup_runs_length_encodes() {
        let ls = LetterString::new(vec![1, 1, -2]).unwrap();
        assert_eq!(
            regroup(&ls).unwrap(),
            Word::reduce([(1u64, 2i64), (2, -1)]).unwrap()
        );
    }

    #[test]
    fn regroup_rejects_unreduced_input() {
        let ls = LetterString::new(vec![1, -1]).unwrap();
        assert_eq!(regroup(&ls), Err(Error::NotReduced));
    }

    #[test]
    fn matrix_example_agrees_with_reduced_form() {
        let raw = [(1u64, 2i64), (2, -3), (3, 2), (3, 3), (1, -2)];
        let via_oracle = regroup(&reduce_letters(&expand(&raw).unwrap())).unwrap();
        assert_eq!(
            via_oracle,
            Word::reduce([(1u64, 2i64), (2, -3), (3, 5), (1, -2)]).unwrap()
        );
    }

    #[test]
    fn expansion_limit_is_enforced() {
        let err = expand(&[(1, i64::MAX)]).unwrap_err();
        assert!(matches!(err, Error::ExpansionTooLarge { .. }));
    }

    #[test]
    fn letters_must_be_nonzero() {
        assert_eq!(
            LetterString::new(vec![1, 0]),
            Err(Error::InvalidSymbol(0))
        );
    }
}
