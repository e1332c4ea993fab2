//! Display names for generators.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// An ordered list of distinct display names; name `i` (1-based) labels
/// generator `i`. Only printing and parsing consult the alphabet — the
/// group structure never depends on it.
#[derive(Clone, Debug)]
pub struct Alphabet {
    names: Vec<String>,
    index: HashMap<String, u64>,
}

/// Characters an alphabet name may not contain, because the canonical
/// notation claims them: the separator, the exponent marker, the sign,
/// digits and whitespace.
fn reserved(c: char) -> bool {
    c == '^' || c == '.' || c == '-' || c.is_ascii_digit() || c.is_whitespace()
}

impl Alphabet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::InvalidAlphabet(format!("name {} is empty", i + 1)));
            }
            if let Some(c) = name.chars().find(|&c| reserved(c)) {
                return Err(Error::InvalidAlphabet(format!(
                    "name {name:?} contains the reserved character {c:?}"
                )));
            }
            if index.insert(name.clone(), (i + 1) as u64).is_some() {
                return Err(Error::InvalidAlphabet(format!("duplicate name {name:?}")));
            }
        }
        Ok(Alphabet { names, index })
    }

    /// The default alphabet: the 26 lowercase latin letters.
    pub fn latin() -> &'static Alphabet {
        static LATIN: OnceLock<Alphabet> = OnceLock::new();
        LATIN.get_or_init(|| {
            Alphabet::new(('a'..='z').map(String::from)).expect("latin names are valid")
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Display name of a 1-based generator id, if the alphabet is long enough.
    pub fn name(&self, symbol: u64) -> Option<&str> {
        if symbol == 0 {
            return None;
        }
        usize::try_from(symbol - 1)
            .ok()
            .and_then(|i| self.names.get(i))
            .map(String::as_str)
    }

    /// Generator id carrying `name`, if any.
    pub fn symbol_for(&self, name: &str) -> Option<u64> {
        self.index.get(name).copied()
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.names.iter().map(String::as_str)
    }
}

impl Default for Alphabet {
    fn default() -> Self {
        Alphabet::latin().clone()
    }
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
    }
}

impl Eq for Alphabet {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn latin_names_the_first_26_generators() {
        let latin = Alphabet::latin();
        assert_eq!(latin.len(), 26);
        assert_eq!(latin.name(1), Some("a"));
        assert_eq!(latin.name(26), Some("z"));
        assert_eq!(latin.name(27), None);
        assert_eq!(latin.symbol_for("q"), Some(17));
        assert_eq!(latin.symbol_for("aa"), None);
    }

    #[test]
    fn symbol_zero_has_no_name() {
        assert_eq!(Alphabet::latin().name(0), None);
    }

    #[test]
    fn rejects_empty_duplicate_and_reserved_names() {
        assert!(matches!(
            Alphabet::new(["a", ""]),
            Err(Error::InvalidAlphabet(_))
        ));
        assert!(matches!(
            Alphabet::new(["a", "a"]),
            Err(Error::InvalidAlphabet(_))
        ));
        for bad in ["a^b", "a.b", "a-b", "a1", "a b"] {
            assert!(
                matches!(Alphabet::new([bad]), Err(Error::InvalidAlphabet(_))),
                "{bad:?} should be rejected"
            );
        }
    }

    #[test]
    fn multi_character_names_are_fine() {
        let states = Alphabet::new(["AL", "AK", "AZ"]).unwrap();
        assert_eq!(states.name(2), Some("AK"));
        assert_eq!(states.symbol_for("AZ"), Some(3));
    }
}
