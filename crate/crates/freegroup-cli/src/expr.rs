//! Free-group expressions over word vectors.
//!
//! Grammar, loosest binding first:
//!
//! ```text
//! expr    := mul (("+" | "-") mul)*          juxtaposition / difference
//! mul     := conj ("*" conj)*                integer repetition
//! conj    := unary ("^" unary)*              conjugation, left associative
//! unary   := "-" unary | primary             inverse
//! primary := word | ints | "(" expr ")" | "[" expr "," expr "]"
//! ```
//!
//! A `word` is canonical notation over the active alphabet (`a^2.b^-3`);
//! a bare name that matches a binding refers to the bound vector instead.
//! `ints` is an integer literal or inclusive range `0:3`, valid only as an
//! operand of `*`, except that a lone `0` may stand for the identity word.
//! All operations are elementwise with recycling.

use std::collections::HashMap;

use freegroup::notation::parse_canonical;
use freegroup::{Alphabet, Error, Result, WordVector};

const MAX_RANGE_LEN: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq)]
enum TokenKind {
    Term(String),
    Ints(Vec<i64>),
    Plus,
    Minus,
    Star,
    Caret,
    LBracket,
    RBracket,
    LParen,
    RParen,
    Comma,
}

#[derive(Clone, Debug)]
struct Token {
    kind: TokenKind,
    pos: usize,
}

fn parse_error(position: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        position,
        message: message.into(),
    }
}

/// Characters that may appear in a generator or binding name. Everything
/// structural to expressions or canonical notation is excluded.
fn is_name_char(c: char) -> bool {
    !(c.is_whitespace()
        || c.is_ascii_digit()
        || matches!(
            c,
            '+' | '-' | '*' | '^' | '.' | '[' | ']' | '(' | ')' | ',' | ':' | '=' | ';'
        ))
}

/// True when `name` can be written as a bare token inside an expression.
pub fn is_valid_name(name: &str) -> bool {
    !name.is_empty() && name != "0" && name.chars().all(is_name_char)
}

struct Lexer<'a> {
    src: &'a str,
    chars: Vec<(usize, char)>,
    i: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src,
            chars: src.char_indices().collect(),
            i: 0,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.i).map(|&(_, c)| c)
    }

    fn peek_at(&self, ahead: usize) -> Option<char> {
        self.chars.get(self.i + ahead).map(|&(_, c)| c)
    }

    fn pos(&self) -> usize {
        self.chars
            .get(self.i)
            .map_or(self.src.len(), |&(byte, _)| byte)
    }

    fn slice(&self, from: usize, to: usize) -> &'a str {
        let start = self.chars[from].0;
        let end = self
            .chars
            .get(to)
            .map_or(self.src.len(), |&(byte, _)| byte);
        &self.src[start..end]
    }

    fn lex_integer(&mut self) -> Result<i64> {
        let start = self.i;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.i += 1;
        }
        let text = self.slice(start, self.i);
        text.parse()
            .map_err(|_| parse_error(self.chars[start].0, format!("integer `{text}` is out of range")))
    }

    fn lex_ints(&mut self) -> Result<TokenKind> {
        let first = self.lex_integer()?;
        if self.peek() == Some(':') && self.peek_at(1).is_some_and(|c| c.is_ascii_digit()) {
            let colon = self.pos();
            self.i += 1;
            let last = self.lex_integer()?;
            let span = first.abs_diff(last);
            if span >= MAX_RANGE_LEN {
                return Err(parse_error(colon, format!("range {first}:{last} is too long")));
            }
            let values: Vec<i64> = if first <= last {
                (first..=last).collect()
            } else {
                (last..=first).rev().collect()
            };
            return Ok(TokenKind::Ints(values));
        }
        Ok(TokenKind::Ints(vec![first]))
    }

    /// A word literal: name segments separated by `.`, each optionally
    /// carrying a `^` exponent. `^` not followed by an integer is left for
    /// the conjugation operator, and `.` not followed by a name stays
    /// outside the literal.
    fn lex_term(&mut self) -> TokenKind {
        let start = self.i;
        loop {
            while self.peek().is_some_and(is_name_char) {
                self.i += 1;
            }
            if self.peek() == Some('^') {
                let mut j = self.i + 1;
                if self.peek_at(1) == Some('-') {
                    j += 1;
                }
                let digits_start = j;
                while self
                    .chars
                    .get(j)
                    .is_some_and(|&(_, c)| c.is_ascii_digit())
                {
                    j += 1;
                }
                if j > digits_start {
                    self.i = j;
                }
            }
            if self.peek() == Some('.') && self.peek_at(1).is_some_and(is_name_char) {
                self.i += 1;
                continue;
            }
            break;
        }
        TokenKind::Term(self.slice(start, self.i).to_owned())
    }

    fn run(mut self) -> Result<Vec<Token>> {
        let mut tokens = Vec::new();
        while let Some(c) = self.peek() {
            let pos = self.pos();
            let kind = match c {
                _ if c.is_whitespace() => {
                    self.i += 1;
                    continue;
                }
                '+' => {
                    self.i += 1;
                    TokenKind::Plus
                }
                '-' => {
                    self.i += 1;
                    TokenKind::Minus
                }
                '*' => {
                    self.i += 1;
                    TokenKind::Star
                }
                '^' => {
                    self.i += 1;
                    TokenKind::Caret
                }
                '[' => {
                    self.i += 1;
                    TokenKind::LBracket
                }
                ']' => {
                    self.i += 1;
                    TokenKind::RBracket
                }
                '(' => {
                    self.i += 1;
                    TokenKind::LParen
                }
                ')' => {
                    self.i += 1;
                    TokenKind::RParen
                }
                ',' => {
                    self.i += 1;
                    TokenKind::Comma
                }
                _ if c.is_ascii_digit() => self.lex_ints()?,
                _ if is_name_char(c) => self.lex_term(),
                _ => return Err(parse_error(pos, format!("unexpected character {c:?}"))),
            };
            tokens.push(Token { kind, pos });
        }
        Ok(tokens)
    }
}

#[derive(Clone, Debug)]
enum Expr {
    Term { text: String, pos: usize },
    Ints { values: Vec<i64>, pos: usize },
    Neg(Box<Expr>),
    Concat(Box<Expr>, Box<Expr>),
    Diff(Box<Expr>, Box<Expr>),
    Repeat { lhs: Box<Expr>, rhs: Box<Expr>, pos: usize },
    Conjugate { lhs: Box<Expr>, rhs: Box<Expr>, pos: usize },
    Commutator(Box<Expr>, Box<Expr>),
}

struct Parser {
    tokens: Vec<Token>,
    i: usize,
    len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&TokenKind> {
        self.tokens.get(self.i).map(|t| &t.kind)
    }

    fn pos(&self) -> usize {
        self.tokens.get(self.i).map_or(self.len, |t| t.pos)
    }

    fn advance(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.i).cloned();
        self.i += 1;
        t
    }

    fn expect(&mut self, kind: &TokenKind, what: &str) -> Result<()> {
        match self.peek() {
            Some(k) if k == kind => {
                self.i += 1;
                Ok(())
            }
            _ => Err(parse_error(self.pos(), format!("expected {what}"))),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.mul()?;
        loop {
            match self.peek() {
                Some(TokenKind::Plus) => {
                    self.i += 1;
                    let rhs = self.mul()?;
                    lhs = Expr::Concat(Box::new(lhs), Box::new(rhs));
                }
                Some(TokenKind::Minus) => {
                    self.i += 1;
                    let rhs = self.mul()?;
                    lhs = Expr::Diff(Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn mul(&mut self) -> Result<Expr> {
        let mut lhs = self.conj()?;
        while let Some(TokenKind::Star) = self.peek() {
            let pos = self.pos();
            self.i += 1;
            let rhs = self.conj()?;
            lhs = Expr::Repeat {
                lhs: Box::new(lhs),
                rhs: Box::new(rhs),
                pos,
            };
        }
        Ok(lhs)
    }

    fn conj(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        while let Some(TokenKind::Caret) = self.peek() {
            let pos = self.pos();
            self.i += 1;
            let rhs = self.unary()?;
            lhs = Expr::Conjugate {
                lhs: Box::new(lhs),
                rhs: Box::new(rhs),
                pos,
            };
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr> {
        if let Some(TokenKind::Minus) = self.peek() {
            self.i += 1;
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Expr> {
        let pos = self.pos();
        match self.advance().map(|t| t.kind) {
            Some(TokenKind::Term(text)) => Ok(Expr::Term { text, pos }),
            Some(TokenKind::Ints(values)) => Ok(Expr::Ints { values, pos }),
            Some(TokenKind::LParen) => {
                let inner = self.expr()?;
                self.expect(&TokenKind::RParen, "`)`")?;
                Ok(inner)
            }
            Some(TokenKind::LBracket) => {
                let lhs = self.expr()?;
                self.expect(&TokenKind::Comma, "`,` in commutator")?;
                let rhs = self.expr()?;
                self.expect(&TokenKind::RBracket, "`]`")?;
                Ok(Expr::Commutator(Box::new(lhs), Box::new(rhs)))
            }
            Some(_) => Err(parse_error(pos, "expected a word, integer, `(` or `[`")),
            None => Err(parse_error(pos, "unexpected end of expression")),
        }
    }
}

#[derive(Clone, Debug)]
enum Value {
    Words(WordVector),
    Ints(Vec<i64>),
}

impl Value {
    /// Word context: a lone literal `0` stands for the identity.
    fn into_words(self, pos: usize) -> Result<WordVector> {
        match self {
            Value::Words(v) => Ok(v),
            Value::Ints(values) if values == [0] => {
                Ok(WordVector::from(freegroup::Word::identity()))
            }
            Value::Ints(_) => Err(parse_error(
                pos,
                "integer literal is only valid as an operand of `*`",
            )),
        }
    }
}

fn expr_pos(expr: &Expr) -> usize {
    match expr {
        Expr::Term { pos, .. } | Expr::Ints { pos, .. } => *pos,
        Expr::Neg(inner) => expr_pos(inner),
        Expr::Concat(lhs, _) | Expr::Diff(lhs, _) | Expr::Commutator(lhs, _) => expr_pos(lhs),
        Expr::Repeat { lhs, .. } | Expr::Conjugate { lhs, .. } => expr_pos(lhs),
    }
}

fn eval(expr: &Expr, bindings: &HashMap<String, WordVector>, alphabet: &Alphabet) -> Result<Value> {
    match expr {
        Expr::Term { text, pos } => {
            if let Some(bound) = bindings.get(text) {
                return Ok(Value::Words(bound.clone()));
            }
            let head = text.split(['.', '^']).next().unwrap_or_default();
            if bindings.contains_key(head) {
                return Err(parse_error(
                    *pos,
                    format!("`{head}` is bound by --let and cannot appear inside the literal `{text}`"),
                ));
            }
            let word = parse_canonical(text, alphabet).map_err(|e| match e {
                Error::Parse { position, message } => Error::Parse {
                    position: pos + position,
                    message,
                },
                other => other,
            })?;
            Ok(Value::Words(WordVector::from(word)))
        }
        Expr::Ints { values, pos } => {
            let _ = pos;
            Ok(Value::Ints(values.clone()))
        }
        Expr::Neg(inner) => {
            let pos = expr_pos(inner);
            match eval(inner, bindings, alphabet)? {
                Value::Words(v) => Ok(Value::Words(v.map_with(|w| Ok(w.inverse()))?)),
                Value::Ints(values) => {
                    let negated = values
                        .iter()
                        .map(|v| v.checked_neg().ok_or(Error::ExponentOverflow))
                        .collect::<Result<Vec<_>>>()
                        .map_err(|_| parse_error(pos, "integer negation overflowed"))?;
                    Ok(Value::Ints(negated))
                }
            }
        }
        Expr::Concat(lhs, rhs) => {
            let a = eval(lhs, bindings, alphabet)?.into_words(expr_pos(lhs))?;
            let b = eval(rhs, bindings, alphabet)?.into_words(expr_pos(rhs))?;
            Ok(Value::Words(a.zip_with(&b, |x, y| x.concat(y))?))
        }
        Expr::Diff(lhs, rhs) => {
            let a = eval(lhs, bindings, alphabet)?.into_words(expr_pos(lhs))?;
            let b = eval(rhs, bindings, alphabet)?.into_words(expr_pos(rhs))?;
            Ok(Value::Words(a.zip_with(&b, |x, y| x.concat(&y.inverse()))?))
        }
        Expr::Conjugate { lhs, rhs, pos } => {
            let a = eval(lhs, bindings, alphabet)?;
            let b = eval(rhs, bindings, alphabet)?;
            match (a, b) {
                (Value::Words(a), Value::Words(b)) => {
                    Ok(Value::Words(a.zip_with(&b, |x, y| x.conjugate(y))?))
                }
                _ => Err(parse_error(
                    *pos,
                    "`^` conjugates by a word; use `*` for integer repetition",
                )),
            }
        }
        Expr::Repeat { lhs, rhs, pos } => {
            let a = eval(lhs, bindings, alphabet)?;
            let b = eval(rhs, bindings, alphabet)?;
            match (a, b) {
                (Value::Words(words), Value::Ints(counts))
                | (Value::Ints(counts), Value::Words(words)) => {
                    Ok(Value::Words(words.repeat_each(&counts)?))
                }
                (Value::Words(_), Value::Words(_)) => Err(parse_error(
                    *pos,
                    "`*` needs an integer operand; use `+` to juxtapose words",
                )),
                (Value::Ints(_), Value::Ints(_)) => {
                    Err(parse_error(*pos, "`*` needs a word operand"))
                }
            }
        }
        Expr::Commutator(lhs, rhs) => {
            let a = eval(lhs, bindings, alphabet)?.into_words(expr_pos(lhs))?;
            let b = eval(rhs, bindings, alphabet)?.into_words(expr_pos(rhs))?;
            Ok(Value::Words(a.zip_with(&b, |x, y| x.commutator(y))?))
        }
    }
}

/// Parses and evaluates `src` with elementwise semantics. Bindings shadow
/// bare generator names; everything else is canonical notation over
/// `alphabet`.
pub fn eval_expression(
    src: &str,
    bindings: &HashMap<String, WordVector>,
    alphabet: &Alphabet,
) -> Result<WordVector> {
    let tokens = Lexer::new(src).run()?;
    if tokens.is_empty() {
        return Err(parse_error(0, "empty expression"));
    }
    let len = src.len();
    let mut parser = Parser { tokens, i: 0, len };
    let expr = parser.expr()?;
    if parser.i != parser.tokens.len() {
        return Err(parse_error(parser.pos(), "unexpected trailing input"));
    }
    let pos = expr_pos(&expr);
    eval(&expr, bindings, alphabet)?.into_words(pos)
}
