//! Ordered collections of words with elementwise (recycled) operations.
//!
//! Binary operations recycle the shorter operand cyclically, and only when
//! its length divides the longer one; partial recycling is an error rather
//! than a warning. Elementwise work runs on rayon when the `parallel`
//! feature is enabled and the output is long enough to be worth it; the
//! observable result is always the sequential specification, which the
//! explicit `*_sequential` / `*_parallel` entry points pin down for tests
//! and benchmarks.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::word::Word;

/// Output length below which dispatching to rayon is not worth the setup.
pub const PARALLEL_THRESHOLD: usize = 1024;

/// Length of the result of recycling operands of lengths `a` and `b`:
/// the maximum, provided the minimum divides it (0 only pairs with 0).
pub fn recycled_len(a: usize, b: usize) -> Result<usize> {
    let (short, long) = if a <= b { (a, b) } else { (b, a) };
    if short == long || (short > 0 && long % short == 0) {
        Ok(long)
    } else {
        Err(Error::RecycleMismatch(a, b))
    }
}

/// An ordered sequence of reduced words.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct WordVector {
    items: Vec<Word>,
}

impl WordVector {
    pub fn new(items: Vec<Word>) -> Self {
        WordVector { items }
    }

    /// The first `n` generators as one-letter words.
    pub fn generators(range: std::ops::RangeInclusive<u64>) -> Result<Self> {
        range.map(Word::generator).collect()
    }

    /// Cumulative products of the first `n` generators:
    /// `g1, g1·g2, …, g1·…·gn`.
    pub fn generator_prefixes(n: u64) -> Result<Self> {
        let mut items = Vec::new();
        let mut acc = Word::identity();
        for symbol in 1..=n {
            acc = acc.concat(&Word::generator(symbol)?)?;
            items.push(acc.clone());
        }
        Ok(WordVector { items })
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Word> {
        self.items.iter()
    }

    pub fn as_slice(&self) -> &[Word] {
        &self.items
    }

    pub fn into_vec(self) -> Vec<Word> {
        self.items
    }

    pub fn get(&self, index: usize) -> Option<&Word> {
        self.items.get(index)
    }

    pub fn push(&mut self, word: Word) {
        self.items.push(word);
    }

    /// Applies `op` elementwise with recycling. Result length is the longer
    /// operand's; element `i` is `op(self[i % len], other[i % len])`.
    pub fn zip_with<F>(&self, other: &WordVector, op: F) -> Result<WordVector>
    where
        F: Fn(&Word, &Word) -> Result<Word> + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if recycled_len(self.len(), other.len())? >= PARALLEL_THRESHOLD {
            return self.zip_with_parallel(other, op);
        }
        self.zip_with_sequential(other, op)
    }

    /// [`zip_with`](Self::zip_with), pinned to the sequential path.
    pub fn zip_with_sequential<F>(&self, other: &WordVector, op: F) -> Result<WordVector>
    where
        F: Fn(&Word, &Word) -> Result<Word>,
    {
        let n = recycled_len(self.len(), other.len())?;
        let items = (0..n)
            .map(|i| op(&self.items[i % self.len()], &other.items[i % other.len()]))
            .collect::<Result<Vec<_>>>()?;
        Ok(WordVector { items })
    }

    /// [`zip_with`](Self::zip_with), always on the rayon pool.
    #[cfg(feature = "parallel")]
    pub fn zip_with_parallel<F>(&self, other: &WordVector, op: F) -> Result<WordVector>
    where
        F: Fn(&Word, &Word) -> Result<Word> + Sync + Send,
    {
        let n = recycled_len(self.len(), other.len())?;
        let items = (0..n)
            .into_par_iter()
            .map(|i| op(&self.items[i % self.len()], &other.items[i % other.len()]))
            .collect::<Result<Vec<_>>>()?;
        Ok(WordVector { items })
    }

    /// Applies `op` to every element.
    pub fn map_with<F>(&self, op: F) -> Result<WordVector>
    where
        F: Fn(&Word) -> Result<Word> + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.len() >= PARALLEL_THRESHOLD {
            return self.map_with_parallel(op);
        }
        self.map_with_sequential(op)
    }

    pub fn map_with_sequential<F>(&self, op: F) -> Result<WordVector>
    where
        F: Fn(&Word) -> Result<Word>,
    {
        let items = self.items.iter().map(op).collect::<Result<Vec<_>>>()?;
        Ok(WordVector { items })
    }

    #[cfg(feature = "parallel")]
    pub fn map_with_parallel<F>(&self, op: F) -> Result<WordVector>
    where
        F: Fn(&Word) -> Result<Word> + Sync + Send,
    {
        let items = self.items.par_iter().map(op).collect::<Result<Vec<_>>>()?;
        Ok(WordVector { items })
    }

    /// Juxtaposes all elements left to right; the empty vector sums to the
    /// identity. Associativity makes the parallel reduction exact, not just
    /// equivalent.
    pub fn sum(&self) -> Result<Word> {
        #[cfg(feature = "parallel")]
        if self.len() >= PARALLEL_THRESHOLD {
            return self.sum_parallel();
        }
        self.sum_sequential()
    }

    pub fn sum_sequential(&self) -> Result<Word> {
        let mut acc = Word::identity();
        for w in &self.items {
            acc = acc.concat(w)?;
        }
        Ok(acc)
    }

    #[cfg(feature = "parallel")]
    pub fn sum_parallel(&self) -> Result<Word> {
        self.items
            .par_iter()
            .try_fold(Word::identity, |acc, w| acc.concat(w))
            .try_reduce(Word::identity, |a, b| a.concat(&b))
    }

    /// Elementwise integer repetition, recycling words against counts.
    pub fn repeat_each(&self, counts: &[i64]) -> Result<WordVector> {
        let n = recycled_len(self.len(), counts.len())?;
        let items = (0..n)
            .map(|i| self.items[i % self.len()].repeat(counts[i % counts.len()]))
            .collect::<Result<Vec<_>>>()?;
        Ok(WordVector { items })
    }

    /// Per-element identity test.
    pub fn is_identity_vec(&self) -> Vec<bool> {
        self.items.iter().map(Word::is_identity).collect()
    }

    /// Per-element equality with recycling.
    pub fn equal_vec(&self, other: &WordVector) -> Result<Vec<bool>> {
        let n = recycled_len(self.len(), other.len())?;
        Ok((0..n)
            .map(|i| self.items[i % self.len()] == other.items[i % other.len()])
            .collect())
    }
}

impl From<Vec<Word>> for WordVector {
    fn from(items: Vec<Word>) -> Self {
        WordVector { items }
    }
}

impl From<Word> for WordVector {
    fn from(word: Word) -> Self {
        WordVector { items: vec![word] }
    }
}

impl FromIterator<Word> for WordVector {
    fn from_iter<I: IntoIterator<Item = Word>>(iter: I) -> Self {
        WordVector {
            items: iter.into_iter().collect(),
        }
    }
}

impl std::ops::Index<usize> for WordVector {
    type Output = Word;
    fn index(&self, index: usize) -> &Word {
        &self.items[index]
    }
}

impl IntoIterator for WordVector {
    type Item = Word;
    type IntoIter = std::vec::IntoIter<Word>;
    fn into_iter(self) -> Self::IntoIter {
        self.items.into_iter()
    }
}

impl<'a> IntoIterator for &'a WordVector {
    type Item = &'a Word;
    type IntoIter = std::slice::Iter<'a, Word>;
    fn into_iter(self) -> Self::IntoIter {
        self.items.iter()
    }
}
