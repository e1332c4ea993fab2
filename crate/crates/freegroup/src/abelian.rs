//! Abelianization: per-generator exponent totals.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::word::Word;

/// The image of a word in the free abelian group: a canonical, symbol-sorted
/// list of nonzero exponent totals. Structural equality is group equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct AbelianWord {
    terms: Vec<(u64, i64)>,
}

impl AbelianWord {
    pub fn identity() -> Self {
        AbelianWord::default()
    }

    /// Terms as (symbol, total exponent), strictly increasing in symbol.
    pub fn terms(&self) -> &[(u64, i64)] {
        &self.terms
    }

    pub fn is_identity(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total exponent of `symbol`, zero when absent.
    pub fn exponent_of(&self, symbol: u64) -> i64 {
        self.terms
            .binary_search_by_key(&symbol, |&(s, _)| s)
            .map(|i| self.terms[i].1)
            .unwrap_or(0)
    }

    /// The abelian group operation: pointwise exponent addition.
    pub fn combine(&self, other: &AbelianWord) -> Result<AbelianWord> {
        let mut totals: BTreeMap<u64, i64> = self.terms.iter().copied().collect();
        for &(symbol, exponent) in &other.terms {
            let slot = totals.entry(symbol).or_insert(0);
            *slot = slot
                .checked_add(exponent)
                .filter(|&e| e != i64::MIN)
                .ok_or(Error::ExponentOverflow)?;
            if *slot == 0 {
                totals.remove(&symbol);
            }
        }
        Ok(AbelianWord {
            terms: totals.into_iter().collect(),
        })
    }

    pub fn inverse(&self) -> AbelianWord {
        AbelianWord {
            terms: self.terms.iter().map(|&(s, e)| (s, -e)).collect(),
        }
    }
}

impl Word {
    /// Sums the exponents of each generator; zero totals are omitted and the
    /// terms come out sorted by symbol.
    pub fn abelianize(&self) -> Result<AbelianWord> {
        let mut totals: BTreeMap<u64, i64> = BTreeMap::new();
        for (symbol, exponent) in self.pairs() {
            let slot = totals.entry(symbol).or_insert(0);
            *slot = slot
                .checked_add(exponent)
                .filter(|&e| e != i64::MIN)
                .ok_or(Error::ExponentOverflow)?;
        }
        Ok(AbelianWord {
            terms: totals.into_iter().filter(|&(_, e)| e != 0).collect(),
        })
    }
}
