//! Seeded random word generation.
//!
//! Draws are taken from a ChaCha8 stream seeded with [`RandomSpec::seed`],
//! so a spec fully determines its output on every platform. Symbols are
//! uniform on `1..=max_symbol` and exponents uniform on the nonzero range
//! `-max_abs_exponent..=max_abs_exponent`; reduction can merge raw
//! syllables, so generated words may be shorter than requested.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::vector::WordVector;
use crate::word::Word;

/// Parameters for [`rfree`]. Also carried as `key=value` text, e.g.
/// `count=7,syllables=5,max_symbol=3,max_abs_exponent=4,seed=0`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RandomSpec {
    /// Number of words to generate.
    pub count: usize,
    /// Raw syllables per word, before reduction.
    pub syllables: usize,
    /// Symbols are drawn uniformly from `1..=max_symbol`.
    pub max_symbol: u64,
    /// Exponent magnitudes are drawn uniformly from `1..=max_abs_exponent`,
    /// with a uniform sign.
    pub max_abs_exponent: i64,
    /// Seed of the ChaCha8 stream.
    pub seed: u64,
}

impl Default for RandomSpec {
    fn default() -> Self {
        RandomSpec {
            count: 7,
            syllables: 5,
            max_symbol: 3,
            max_abs_exponent: 4,
            seed: 0,
        }
    }
}

impl RandomSpec {
    /// `count` words of `syllables` raw syllables over `1..=syllables`
    /// symbols, everything else default.
    pub fn new(count: usize, syllables: usize) -> Self {
        RandomSpec {
            count,
            syllables,
            max_symbol: syllables as u64,
            ..RandomSpec::default()
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.syllables == 0 {
            return Err(Error::InvalidRandomSpec("syllables must be ≥ 1".into()));
        }
        if self.max_symbol == 0 {
            return Err(Error::InvalidRandomSpec("max_symbol must be ≥ 1".into()));
        }
        if self.max_abs_exponent < 1 {
            return Err(Error::InvalidRandomSpec(
                "max_abs_exponent must be ≥ 1".into(),
            ));
        }
        Ok(())
    }

    /// Renders the spec as `key=value` pairs, comma separated.
    pub fn to_kv(&self) -> String {
        format!(
            "count={},syllables={},max_symbol={},max_abs_exponent={},seed={}",
            self.count, self.syllables, self.max_symbol, self.max_abs_exponent, self.seed
        )
    }

    /// Parses `key=value` pairs separated by commas or whitespace; keys not
    /// mentioned keep their default. Unknown keys are errors.
    pub fn from_kv(input: &str) -> Result<Self> {
        let mut spec = RandomSpec::default();
        let mut offset = 0;
        for token in input.split([',', ' ', '\t', '\n']) {
            let position = offset;
            offset += token.len() + 1;
            if token.is_empty() {
                continue;
            }
            let (key, value) = token.split_once('=').ok_or_else(|| Error::Parse {
                position,
                message: format!("expected key=value, got `{token}`"),
            })?;
            let bad_value = |_| Error::Parse {
                position,
                message: format!("invalid value `{value}` for `{key}`"),
            };
            match key {
                "count" => spec.count = value.parse().map_err(bad_value)?,
                "syllables" => spec.syllables = value.parse().map_err(bad_value)?,
                "max_symbol" => spec.max_symbol = value.parse().map_err(bad_value)?,
                "max_abs_exponent" => spec.max_abs_exponent = value.parse().map_err(bad_value)?,
                "seed" => spec.seed = value.parse().map_err(bad_value)?,
                _ => {
                    return Err(Error::Parse {
                        position,
                        message: format!("unknown key `{key}`"),
                    })
                }
            }
        }
        spec.validate()?;
        Ok(spec)
    }
}

/// Generates `spec.count` random reduced words, deterministically in the
/// seed.
pub fn rfree(spec: &RandomSpec) -> Result<WordVector> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut items = Vec::with_capacity(spec.count);
    for _ in 0..spec.count {
        items.push(random_word(spec, &mut rng)?);
    }
    Ok(WordVector::new(items))
}

fn random_word<R: Rng>(spec: &RandomSpec, rng: &mut R) -> Result<Word> {
    let mut pairs = Vec::with_capacity(spec.syllables);
    for _ in 0..spec.syllables {
        let symbol = rng.random_range(1..=spec.max_symbol);
        let magnitude = rng.random_range(1..=spec.max_abs_exponent);
        let exponent = if rng.random_bool(0.5) {
            magnitude
        } else {
            -magnitude
        };
        pairs.push((symbol, exponent));
    }
    Word::reduce(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_seed_is_reproducible() {
        let spec = RandomSpec::new(10, 4).with_seed(42);
        assert_eq!(rfree(&spec).unwrap(), rfree(&spec).unwrap());
        let other = rfree(&spec.with_seed(43)).unwrap();
        assert_ne!(rfree(&spec).unwrap(), other);
    }

    #[test]
    fn count_zero_gives_an_empty_vector() {
        let spec = RandomSpec {
            count: 0,
            ..RandomSpec::default()
        };
        assert!(rfree(&spec).unwrap().is_empty());
    }

    #[test]
    fn words_respect_the_spec_bounds() {
        // spot the paper-shaped call: 10 words, 4 syllables, symbols a..d
        let spec = RandomSpec::new(10, 4).with_seed(7);
        let words = rfree(&spec).unwrap();
        assert_eq!(words.len(), 10);
        for w in &words {
            assert!(w.syllable_count() <= 4);
            for (symbol, exponent) in w.pairs() {
                assert!((1..=4).contains(&symbol));
                assert_ne!(exponent, 0);
            }
        }
    }

    #[test]
    fn generated_words_are_reduced_in_bulk() {
        // invariants over well past 10^4 generations
        for seed in 0..15 {
            let spec = RandomSpec {
                count: 1000,
                syllables: 6,
                max_symbol: 3,
                max_abs_exponent: 4,
                seed,
            };
            for w in &rfree(&spec).unwrap() {
                assert_eq!(Word::reduce(w.pairs()).unwrap(), *w);
                assert!(w
                    .syllables()
                    .windows(2)
                    .all(|pair| pair[0].symbol() != pair[1].symbol()));
                assert!(w.pairs().all(|(s, e)| (1..=3).contains(&s) && e != 0));
            }
        }
    }

    #[test]
    fn kv_round_trips() {
        let spec = RandomSpec {
            count: 12,
            syllables: 9,
            max_symbol: 5,
            max_abs_exponent: 2,
            seed: 99,
        };
        assert_eq!(RandomSpec::from_kv(&spec.to_kv()).unwrap(), spec);
    }

    #[test]
    fn kv_defaults_and_errors() {
        assert_eq!(RandomSpec::from_kv("").unwrap(), RandomSpec::default());
        assert_eq!(
            RandomSpec::from_kv("seed=5").unwrap(),
            RandomSpec::default().with_seed(5)
        );
        assert!(matches!(
            RandomSpec::from_kv("sides=3"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            RandomSpec::from_kv("count"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            RandomSpec::from_kv("count=x"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn invalid_specs_are_rejected() {
        let spec = RandomSpec {
            syllables: 0,
            ..RandomSpec::default()
        };
        assert!(matches!(
            rfree(&spec),
            Err(Error::InvalidRandomSpec(_))
        ));
        assert!(matches!(
            RandomSpec::from_kv("max_symbol=0"),
            Err(Error::InvalidRandomSpec(_))
        ));
    }
}
