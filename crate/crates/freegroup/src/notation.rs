//! Canonical text notation, and the compact letter form.
//!
//! The canonical grammar is
//!
//! ```text
//! word  := "0" | term ("." term)*
//! term  := name ("^" signed-nonzero-integer)?
//! ```
//!
//! where an exponent of 1 is always omitted when printing (`a`, not `a^1`)
//! and the identity prints as `0`. Formatting a generator that has no name
//! in the alphabet is an error in strict mode and the literal token `NA`
//! otherwise.

use std::fmt::{self, Write as _};

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::word::Word;
use crate::AbelianWord;

/// Token printed for out-of-alphabet generators in lenient mode.
pub const NA_TOKEN: &str = "NA";

fn push_term(
    out: &mut String,
    symbol: u64,
    exponent: i64,
    alphabet: &Alphabet,
    strict: bool,
) -> Result<()> {
    match alphabet.name(symbol) {
        Some(name) => out.push_str(name),
        None if strict => {
            return Err(Error::SymbolOutsideAlphabet {
                symbol,
                alphabet_len: alphabet.len(),
            })
        }
        None => out.push_str(NA_TOKEN),
    }
    if exponent != 1 {
        write!(out, "^{exponent}").expect("writing to a String");
    }
    Ok(())
}

/// Renders a word in canonical notation.
pub fn format_word(word: &Word, alphabet: &Alphabet, strict: bool) -> Result<String> {
    if word.is_identity() {
        return Ok("0".to_owned());
    }
    let mut out = String::new();
    for (i, syllable) in word.syllables().iter().enumerate() {
        if i > 0 {
            out.push('.');
        }
        push_term(&mut out, syllable.symbol(), syllable.exponent(), alphabet, strict)?;
    }
    Ok(out)
}

/// Renders an abelian word in the same notation, terms sorted by symbol.
pub fn format_abelian(word: &AbelianWord, alphabet: &Alphabet, strict: bool) -> Result<String> {
    if word.is_identity() {
        return Ok("0".to_owned());
    }
    let mut out = String::new();
    for (i, &(symbol, exponent)) in word.terms().iter().enumerate() {
        if i > 0 {
            out.push('.');
        }
        push_term(&mut out, symbol, exponent, alphabet, strict)?;
    }
    Ok(out)
}

fn parse_error(position: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        position,
        message: message.into(),
    }
}

/// Parses canonical notation back into a reduced word.
///
/// The input need not be reduced (`a.a^-1` parses to the identity), but
/// every exponent must be a nonzero integer and every name must belong to
/// the alphabet. Inverse of [`format_word`] on reduced words.
pub fn parse_canonical(input: &str, alphabet: &Alphabet) -> Result<Word> {
    let base = input.len() - input.trim_start().len();
    let s = input.trim();
    if s.is_empty() {
        return Err(parse_error(base, "empty word; the identity is written `0`"));
    }
    if s == "0" {
        return Ok(Word::identity());
    }
    let mut pairs: Vec<(u64, i64)> = Vec::new();
    let mut pos = 0;
    loop {
        let term_end = s[pos..].find('.').map_or(s.len(), |i| pos + i);
        let term = &s[pos..term_end];
        let (name, exponent) = match term.find('^') {
            Some(caret) => {
                let exp_pos = base + pos + caret + 1;
                let exp_str = &term[caret + 1..];
                let digits = exp_str.strip_prefix('-').unwrap_or(exp_str);
                if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(parse_error(
                        exp_pos,
                        format!("malformed exponent `{exp_str}`"),
                    ));
                }
                let value: i64 = exp_str.parse().map_err(|_| {
                    parse_error(exp_pos, format!("exponent `{exp_str}` is out of range"))
                })?;
                if value == 0 {
                    return Err(parse_error(exp_pos, "zero exponent"));
                }
                if value == i64::MIN {
                    return Err(parse_error(
                        exp_pos,
                        format!("exponent `{exp_str}` is out of range"),
                    ));
                }
                (&term[..caret], value)
            }
            None => (term, 1),
        };
        if name.is_empty() {
            return Err(parse_error(base + pos, "missing generator name"));
        }
        let symbol = alphabet.symbol_for(name).ok_or_else(|| {
            parse_error(base + pos, format!("unknown generator name `{name}`"))
        })?;
        pairs.push((symbol, exponent));
        if term_end == s.len() {
            break;
        }
        pos = term_end + 1;
        if pos == s.len() {
            return Err(parse_error(base + term_end, "trailing `.`"));
        }
    }
    Word::reduce(pairs)
}

/// Parses the compact letter form over the default 26-letter alphabet:
/// a lowercase letter is that generator, an uppercase letter its inverse.
pub fn parse_compact(input: &str) -> Result<Word> {
    let mut pairs = Vec::with_capacity(input.len());
    for (i, c) in input.char_indices() {
        let pair = if c.is_ascii_lowercase() {
            (c as u64 - 'a' as u64 + 1, 1)
        } else if c.is_ascii_uppercase() {
            (c as u64 - 'A' as u64 + 1, -1)
        } else {
            return Err(parse_error(
                i,
                format!("invalid character {c:?}; compact words use ascii letters only"),
            ));
        };
        pairs.push(pair);
    }
    Word::reduce(pairs)
}

impl fmt::Display for Word {
    /// Canonical notation over the default alphabet, lenient about
    /// out-of-alphabet symbols.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = format_word(self, Alphabet::latin(), false)
            .expect("lenient formatting cannot fail");
        f.write_str(&text)
    }
}

impl fmt::Display for AbelianWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = format_abelian(self, Alphabet::latin(), false)
            .expect("lenient formatting cannot fail");
        f.write_str(&text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const STATE_ABBREVIATIONS: [&str; 50] = [
        "AL", "AK", "AZ", "AR", "CA", "CO", "CT", "DE", "FL", "GA", "HI", "ID", "IL", "IN", "IA",
        "KS", "KY", "LA", "ME", "MD", "MA", "MI", "MN", "MS", "MO", "MT", "NE", "NV", "NH", "NJ",
        "NM", "NY", "NC", "ND", "OH", "OK", "OR", "PA", "RI", "SC", "SD", "TN", "TX", "UT", "VT",
        "VA", "WA", "WV", "WI", "WY",
    ];

    fn word(pairs: &[(u64, i64)]) -> Word {
        Word::reduce(pairs.iter().copied()).unwrap()
    }

    #[test]
    fn formats_the_matrix_example() {
        let w = word(&[(1, 2), (2, -3), (3, 5), (1, -2)]);
        assert_eq!(
            format_word(&w, Alphabet::latin(), true).unwrap(),
            "a^2.b^-3.c^5.a^-2"
        );
    }

    #[test]
    fn identity_prints_as_zero() {
        assert_eq!(
            format_word(&Word::identity(), Alphabet::latin(), true).unwrap(),
            "0"
        );
    }

    #[test]
    fn unit_exponents_are_omitted() {
        let w = word(&[(4, 2), (3, -1), (4, -3)]).inverse();
        assert_eq!(format_word(&w, Alphabet::latin(), true).unwrap(), "d^3.c.d^-2");
    }

    #[test]
    fn out_of_alphabet_symbols_print_na_or_error() {
        let w = word(&[(27, 1)]);
        assert_eq!(format_word(&w, Alphabet::latin(), false).unwrap(), "NA");
        assert_eq!(
            format_word(&w, Alphabet::latin(), true),
            Err(Error::SymbolOutsideAlphabet {
                symbol: 27,
                alphabet_len: 26
            })
        );
    }

    #[test]
    fn wider_alphabets_keep_naming() {
        let states = Alphabet::new(STATE_ABBREVIATIONS).unwrap();
        let w = word(&[(27, 1)]);
        assert_eq!(format_word(&w, &states, true).unwrap(), "NE");
    }

    #[test]
    fn parses_the_matrix_example() {
        assert_eq!(
            parse_canonical("a^2.b^-3.c^5.a^-2", Alphabet::latin()).unwrap(),
            word(&[(1, 2), (2, -3), (3, 5), (1, -2)])
        );
    }

    #[test]
    fn parses_identity_and_reduces_input() {
        assert!(parse_canonical("0", Alphabet::latin()).unwrap().is_identity());
        assert!(parse_canonical("a.a^-1", Alphabet::latin())
            .unwrap()
            .is_identity());
    }

    #[test]
    fn parse_rejects_bad_input_with_positions() {
        let latin = Alphabet::latin();
        assert_eq!(
            parse_canonical("a.q1.b", latin),
            Err(Error::Parse {
                position: 2,
                message: "unknown generator name `q1`".into()
            })
        );
        assert_eq!(
            parse_canonical("a^0", latin),
            Err(Error::Parse {
                position: 2,
                message: "zero exponent".into()
            })
        );
        assert_eq!(
            parse_canonical("a^x", latin),
            Err(Error::Parse {
                position: 2,
                message: "malformed exponent `x`".into()
            })
        );
        assert_eq!(
            parse_canonical("a.", latin),
            Err(Error::Parse {
                position: 1,
                message: "trailing `.`".into()
            })
        );
        assert_eq!(
            parse_canonical("", latin),
            Err(Error::Parse {
                position: 0,
                message: "empty word; the identity is written `0`".into()
            })
        );
        assert!(parse_canonical("a^99999999999999999999", latin).is_err());
    }

    #[test]
    fn parse_round_trips_formatting() {
        let w = word(&[(1, 2), (2, -3), (3, 5), (1, -2)]);
        let text = format_word(&w, Alphabet::latin(), true).unwrap();
        assert_eq!(parse_canonical(&text, Alphabet::latin()).unwrap(), w);

        let states = Alphabet::new(STATE_ABBREVIATIONS).unwrap();
        let w = word(&[(27, 2), (30, -1), (1, 4)]);
        let text = format_word(&w, &states, true).unwrap();
        assert_eq!(text, "NE^2.NJ^-1.AL^4");
        assert_eq!(parse_canonical(&text, &states).unwrap(), w);
    }

    #[test]
    fn compact_form_parses_letters() {
        assert_eq!(
            parse_compact("aabbbcccc").unwrap(),
            word(&[(1, 2), (2, 3), (3, 4)])
        );
        assert!(parse_compact("").unwrap().is_identity());
        assert!(parse_compact("aA").unwrap().is_identity());
        assert_eq!(parse_compact("Ba").unwrap(), word(&[(2, -1), (1, 1)]));
    }

    #[test]
    fn compact_form_rejects_non_letters() {
        assert_eq!(
            parse_compact("ab3"),
            Err(Error::Parse {
                position: 2,
                message: "invalid character '3'; compact words use ascii letters only".into()
            })
        );
    }

    #[test]
    fn display_uses_the_default_alphabet() {
        let w = word(&[(1, 2), (2, -3), (3, 5), (1, -2)]);
        assert_eq!(w.to_string(), "a^2.b^-3.c^5.a^-2");
        assert_eq!(Word::identity().to_string(), "0");
        assert_eq!(word(&[(27, 1)]).to_string(), "NA");
        assert_eq!(
            w.abelianize().unwrap().to_string(),
            "b^-3.c^5"
        );
    }
}
