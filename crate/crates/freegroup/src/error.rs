use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A generator id was zero or negative. Symbols are 1-based.
    #[error("symbol must be a positive integer, got {0}")]
    InvalidSymbol(i64),

    /// A syllable was constructed with exponent zero.
    #[error("zero exponent for symbol {symbol}")]
    ZeroExponent { symbol: u64 },

    /// An exponent left the representable range during a merge or repetition.
    #[error("exponent overflow")]
    ExponentOverflow,

    /// Elementwise operation on vectors whose lengths cannot be recycled.
    #[error("cannot recycle vectors of lengths {0} and {1}")]
    RecycleMismatch(usize, usize),

    /// Strict formatting hit a generator with no name in the alphabet.
    #[error("symbol {symbol} has no name in the {alphabet_len}-name alphabet")]
    SymbolOutsideAlphabet { symbol: u64, alphabet_len: usize },

    /// Text that does not match the expected grammar.
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    /// An alphabet with empty, duplicate, or reserved-character names.
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    /// Two-row matrix input whose rows differ in length.
    #[error("matrix rows have different lengths: {top} vs {bottom}")]
    RowLengthMismatch { top: usize, bottom: usize },

    /// Interchange text that is not syntactically a list of words.
    #[error("interchange syntax error: {0}")]
    InterchangeSyntax(String),

    /// Interchange pair that violates a word invariant.
    #[error("interchange error in word {word}, pair {pair}: {message}")]
    InterchangePair {
        word: usize,
        pair: usize,
        message: String,
    },

    /// Interchange word that cannot be assembled.
    #[error("interchange error in word {word}: {message}")]
    InterchangeWord { word: usize, message: String },

    /// Random generation parameters outside their documented bounds.
    #[error("invalid random spec: {0}")]
    InvalidRandomSpec(String),

    /// Letter-level expansion would exceed the materialization limit.
    #[error("expansion of {required} letters exceeds the limit of {limit}")]
    ExpansionTooLarge { required: u128, limit: u128 },

    /// A symbol too large to be represented as a signed letter.
    #[error("symbol {0} is too large to expand into letters")]
    SymbolTooLarge(u64),

    /// A letter string handed to `regroup` still contains a cancelling pair.
    #[error("letter string is not reduced")]
    NotReduced,
}

pub type Result<T> = std::result::Result<T, Error>;
