//! The free group on a finite set of generators.
//!
//! A group element is a [`Word`]: a reduced sequence of syllables
//! `symbol^exponent` over 1-based integer generator ids. Reduction merges
//! adjacent powers of the same generator and drops the zeros, so structural
//! equality decides the word problem. On top of the single-word operations
//! (juxtaposition, inverse, integer repetition, conjugation, commutator,
//! abelianization) the crate provides:
//!
//! - [`WordVector`]: elementwise operations with strict recycling, run on
//!   rayon for large vectors when the `parallel` feature (default) is on;
//! - [`Alphabet`], [`notation`]: configurable printing and parsing of the
//!   canonical `a^2.b^-3` notation and the compact `aabB` letter form;
//! - [`matrix`], [`interchange`]: the two-row integer matrix form and a
//!   structured text format for vectors of words;
//! - [`random`]: seeded, platform-stable random word generation (ChaCha8);
//! - [`oracle`]: a deliberately naive letter-level reducer kept around as
//!   an independent reference for tests.
//!
//! Words are immutable values; every operation is a pure function and all
//! types are `Send + Sync`. Exponents are checked `i64`s — operations that
//! could overflow return `Result`, while the operator sugar (`+`, `-`, `*`,
//! `^`) panics on overflow.

pub mod abelian;
pub mod alphabet;
pub mod error;
pub mod interchange;
pub mod matrix;
pub mod notation;
pub mod oracle;
pub mod random;
pub mod vector;
pub mod word;

pub use abelian::AbelianWord;
pub use alphabet::Alphabet;
pub use error::{Error, Result};
pub use random::{rfree, RandomSpec};
pub use vector::WordVector;
pub use word::{Syllable, Word};
