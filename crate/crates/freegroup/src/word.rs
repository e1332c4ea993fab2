//! Reduced words over a countable set of generators.
//!
//! A [`Word`] is the canonical form of a free-group element: a sequence of
//! [`Syllable`]s (generator, exponent) in which no exponent is zero and no
//! two adjacent syllables share a generator. Equality of reduced words is
//! equality of group elements, so `PartialEq` decides the word problem.
//!
//! Exponents are `i64` and kept inside the negation-closed range
//! `[-(2^63 - 1), 2^63 - 1]`; any merge or repetition that would leave it
//! reports [`Error::ExponentOverflow`](crate::Error::ExponentOverflow)
//! instead of wrapping.

use crate::error::{Error, Result};

/// One maximal run `symbol^exponent` inside a reduced word.
///
/// This is one column of the two-row matrix form: the top row holds the
/// 1-based generator id and the bottom row its (nonzero) power.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Syllable {
    symbol: u64,
    exponent: i64,
}

impl Syllable {
    pub fn new(symbol: u64, exponent: i64) -> Result<Self> {
        if symbol == 0 {
            return Err(Error::InvalidSymbol(0));
        }
        if exponent == 0 {
            return Err(Error::ZeroExponent { symbol });
        }
        if exponent == i64::MIN {
            return Err(Error::ExponentOverflow);
        }
        Ok(Syllable { symbol, exponent })
    }

    /// 1-based generator id.
    pub fn symbol(&self) -> u64 {
        self.symbol
    }

    /// Nonzero power, never `i64::MIN`.
    pub fn exponent(&self) -> i64 {
        self.exponent
    }
}

/// A free-group element in reduced form. The empty word is the identity.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word {
    syllables: Vec<Syllable>,
}

/// Appends `symbol^exponent` to a stack of syllables, merging with the top
/// when the symbols match and popping the top when the merge cancels.
/// Zero exponents are dropped. Keeps the stack reduced at every step.
pub(crate) fn push_syllable(stack: &mut Vec<Syllable>, symbol: u64, exponent: i64) -> Result<()> {
    if symbol == 0 {
        return Err(Error::InvalidSymbol(0));
    }
    if exponent == i64::MIN {
        return Err(Error::ExponentOverflow);
    }
    if exponent == 0 {
        return Ok(());
    }
    match stack.last_mut() {
        Some(top) if top.symbol == symbol => {
            let merged = top
                .exponent
                .checked_add(exponent)
                .filter(|&e| e != i64::MIN)
                .ok_or(Error::ExponentOverflow)?;
            if merged == 0 {
                stack.pop();
            } else {
                top.exponent = merged;
            }
        }
        _ => stack.push(Syllable { symbol, exponent }),
    }
    Ok(())
}

impl Word {
    /// The group identity: the empty word.
    pub fn identity() -> Self {
        Word::default()
    }

    /// The word consisting of the single letter `symbol`.
    pub fn generator(symbol: u64) -> Result<Self> {
        Ok(Word {
            syllables: vec![Syllable::new(symbol, 1)?],
        })
    }

    /// Reduces a raw sequence of (symbol, exponent) pairs to normal form.
    ///
    /// Zero exponents are dropped and adjacent equal symbols are merged; a
    /// merge that cancels to zero deletes the syllable, which may expose
    /// further merges (the whole cascade is handled by a single stack pass).
    pub fn reduce<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u64, i64)>,
    {
        let iter = pairs.into_iter();
        let mut stack = Vec::with_capacity(iter.size_hint().0);
        for (symbol, exponent) in iter {
            push_syllable(&mut stack, symbol, exponent)?;
        }
        Ok(Word { syllables: stack })
    }

    /// Builds a word from syllables already known to satisfy the invariants.
    pub(crate) fn from_reduced(syllables: Vec<Syllable>) -> Self {
        debug_assert!(
            syllables
                .windows(2)
                .all(|pair| pair[0].symbol != pair[1].symbol),
            "adjacent syllables share a symbol"
        );
        Word { syllables }
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    /// Number of syllables in the reduced form.
    pub fn syllable_count(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Raw (symbol, exponent) pairs of the reduced form.
    pub fn pairs(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.syllables.iter().map(|s| (s.symbol, s.exponent))
    }

    /// Juxtaposition: `self` followed by `other`, reduced. Cancellation can
    /// only happen at the junction.
    pub fn concat(&self, other: &Word) -> Result<Word> {
        let mut stack = Vec::with_capacity(self.syllables.len() + other.syllables.len());
        stack.extend_from_slice(&self.syllables);
        for s in &other.syllables {
            push_syllable(&mut stack, s.symbol, s.exponent)?;
        }
        Ok(Word { syllables: stack })
    }

    /// The group inverse: syllables reversed with exponents negated.
    pub fn inverse(&self) -> Word {
        let syllables = self
            .syllables
            .iter()
            .rev()
            .map(|s| Syllable {
                symbol: s.symbol,
                // safe: exponents are never i64::MIN
                exponent: -s.exponent,
            })
            .collect();
        Word { syllables }
    }

    /// `n` juxtaposed copies of `self`; negative `n` repeats the inverse,
    /// so `repeat` is the action of the integers on the group.
    pub fn repeat(&self, n: i64) -> Result<Word> {
        let mut base = if n < 0 { self.inverse() } else { self.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = Word::identity();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.concat(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.concat(&base)?;
            }
        }
        Ok(acc)
    }

    /// Conjugation `self^by = by^-1 · self · by`.
    pub fn conjugate(&self, by: &Word) -> Result<Word> {
        by.inverse().concat(self)?.concat(by)
    }

    /// Commutator `[self, other] = self^-1 · other^-1 · self · other`.
    pub fn commutator(&self, other: &Word) -> Result<Word> {
        self.inverse()
            .concat(&other.inverse())?
            .concat(self)?
            .concat(other)
    }
}

// Operator sugar mirroring the additive idiom: `+` juxtaposes, unary `-`
// inverts, `a - b` is `a + (-b)`, `*` repeats, `^` conjugates. These panic
// on exponent overflow; use the named methods to handle that case.

macro_rules! forward_binop {
    ($trait:ident, $method:ident, |$a:ident, $b:ident| $body:expr) => {
        impl std::ops::$trait<&Word> for &Word {
            type Output = Word;
            fn $method(self, rhs: &Word) -> Word {
                let $a = self;
                let $b = rhs;
                $body
            }
        }
        impl std::ops::$trait<Word> for Word {
            type Output = Word;
            fn $method(self, rhs: Word) -> Word {
                std::ops::$trait::$method(&self, &rhs)
            }
        }
        impl std::ops::$trait<&Word> for Word {
            type Output = Word;
            fn $method(self, rhs: &Word) -> Word {
                std::ops::$trait::$method(&self, rhs)
            }
        }
        impl std::ops::$trait<Word> for &Word {
            type Output = Word;
            fn $method(self, rhs: Word) -> Word {
                std::ops::$trait::$method(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.concat(b).expect("exponent overflow"));
forward_binop!(Sub, sub, |a, b| a
    .concat(&b.inverse())
    .expect("exponent overflow"));
forward_binop!(BitXor, bitxor, |a, b| a
    .conjugate(b)
    .expect("exponent overflow"));

impl std::ops::Neg for &Word {
    type Output = Word;
    fn neg(self) -> Word {
        self.inverse()
    }
}

impl std::ops::Neg for Word {
    type Output = Word;
    fn neg(self) -> Word {
        self.inverse()
    }
}

impl std::ops::Mul<i64> for &Word {
    type Output = Word;
    fn mul(self, n: i64) -> Word {
        self.repeat(n).expect("exponent overflow")
    }
}

impl std::ops::Mul<i64> for Word {
    type Output = Word;
    fn mul(self, n: i64) -> Word {
        (&self).mul(n)
    }
}

impl std::ops::Mul<&Word> for i64 {
    type Output = Word;
    fn mul(self, w: &Word) -> Word {
        w.mul(self)
    }
}

impl std::ops::Mul<Word> for i64 {
    type Output = Word;
    fn mul(self, w: Word) -> Word {
        (&w).mul(self)
    }
}
