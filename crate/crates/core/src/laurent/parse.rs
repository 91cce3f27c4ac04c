//! Text syntax for Laurent polynomials.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (['*'] factor | '/' number)*
//! factor := (name | number | '(' expr ')') ['^' ['-'] digits]
//! ```
//!
//! Whitespace is ignored. Negative exponents are only accepted on names.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{LaurentPoly, Monomial};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

/// Restrictions applied while parsing.
#[derive(Clone, Debug, Default)]
pub struct ParseOptions {
    /// Accepted generator names; `None` accepts any name.
    pub alphabet: Option<BTreeSet<String>>,
    /// Names that may carry negative exponents; `None` allows all.
    pub invertible: Option<BTreeSet<String>>,
}

impl ParseOptions {
    pub fn new(
        alphabet: impl IntoIterator<Item = String>,
        invertible: impl IntoIterator<Item = String>,
    ) -> Self {
        ParseOptions {
            alphabet: Some(alphabet.into_iter().collect()),
            invertible: Some(invertible.into_iter().collect()),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Number(BigInt),
    Name(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Open,
    Close,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        let simple = match c {
            '+' => Some(Token::Plus),
            '-' => Some(Token::Minus),
            '*' => Some(Token::Star),
            '/' => Some(Token::Slash),
            '^' => Some(Token::Caret),
            '(' => Some(Token::Open),
            ')' => Some(Token::Close),
            _ => None,
        };
        if let Some(tok) = simple {
            out.push((pos, tok));
            chars.next();
        } else if c.is_whitespace() {
            chars.next();
        } else if c.is_ascii_digit() {
            let mut end = pos;
            while let Some(&(i, d)) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                end = i + d.len_utf8();
                chars.next();
            }
            let value = text[pos..end].parse().expect("digits");
            out.push((pos, Token::Number(value)));
        } else if c.is_alphabetic() || c == '_' {
            let mut end = pos;
            while let Some(&(i, d)) = chars.peek() {
                if !(d.is_alphanumeric() || d == '_') {
                    break;
                }
                end = i + d.len_utf8();
                chars.next();
            }
            out.push((pos, Token::Name(text[pos..end].to_string())));
        } else {
            return Err(ParseError {
                position: pos,
                message: format!("unexpected character `{c}`"),
            });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<(usize, Token)>,
    index: usize,
    end: usize,
    options: &'a ParseOptions,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.index).map(|(_, t)| t)
    }

    fn position(&self) -> usize {
        self.tokens.get(self.index).map_or(self.end, |(p, _)| *p)
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            position: self.position(),
            message: message.into(),
        }
    }

    fn eat(&mut self, token: &Token) -> bool {
        if self.peek() == Some(token) {
            self.index += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<LaurentPoly, ParseError> {
        let mut negate = false;
        if self.eat(&Token::Minus) {
            negate = true;
        } else {
            self.eat(&Token::Plus);
        }
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            if self.eat(&Token::Plus) {
                acc = &acc + &self.term()?;
            } else if self.eat(&Token::Minus) {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(
            self.peek(),
            Some(Token::Number(_) | Token::Name(_) | Token::Open)
        )
    }

    fn term(&mut self) -> Result<LaurentPoly, ParseError> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(&Token::Star) {
                acc = &acc * &self.factor()?;
            } else if self.eat(&Token::Slash) {
                let divisor = match self.peek() {
                    Some(Token::Number(n)) => n.clone(),
                    _ => return Err(self.error("expected a number after `/`")),
                };
                if divisor.is_zero() {
                    return Err(self.error("division by zero"));
                }
                self.index += 1;
                acc = acc.scale(&BigRational::new(1.into(), divisor));
            } else if self.starts_factor() {
                acc = &acc * &self.factor()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn exponent(&mut self) -> Result<Option<(usize, i64)>, ParseError> {
        if !self.eat(&Token::Caret) {
            return Ok(None);
        }
        let pos = self.position();
        let negative = self.eat(&Token::Minus);
        if !negative {
            self.eat(&Token::Plus);
        }
        match self.peek() {
            Some(Token::Number(n)) => {
                let magnitude: i64 = n.try_into().map_err(|_| self.error("exponent too large"))?;
                self.index += 1;
                Ok(Some((pos, if negative { -magnitude } else { magnitude })))
            }
            _ => Err(self.error("malformed exponent")),
        }
    }

    fn factor(&mut self) -> Result<LaurentPoly, ParseError> {
        let pos = self.position();
        let base = match self.peek().cloned() {
            Some(Token::Number(n)) => {
                self.index += 1;
                LaurentPoly::constant(BigRational::from_integer(n))
            }
            Some(Token::Name(name)) => {
                self.index += 1;
                if let Some(alphabet) = &self.options.alphabet {
                    if !alphabet.contains(&name) {
                        return Err(ParseError {
                            position: pos,
                            message: format!("unknown generator `{name}`"),
                        });
                    }
                }
                let Some((epos, e)) = self.exponent()? else {
                    return Ok(LaurentPoly::var(&name));
                };
                if e < 0
                    && self
                        .options
                        .invertible
                        .as_ref()
                        .is_some_and(|inv| !inv.contains(&name))
                {
                    return Err(ParseError {
                        position: epos,
                        message: format!("negative exponent on non-invertible generator `{name}`"),
                    });
                }
                return Ok(LaurentPoly::monomial(Monomial::from_exponents([(name, e)])));
            }
            Some(Token::Open) => {
                self.index += 1;
                let inner = self.expr()?;
                if !self.eat(&Token::Close) {
                    return Err(self.error("expected `)`"));
                }
                inner
            }
            _ => return Err(self.error("expected a number, generator or `(`")),
        };
        match self.exponent()? {
            None => Ok(base),
            Some((epos, e)) if e < 0 => Err(ParseError {
                position: epos,
                message: "negative exponents are only allowed on generators".into(),
            }),
            Some((_, e)) => Ok(base.pow(e as u32)),
        }
    }
}

pub fn parse_poly(text: &str, options: &ParseOptions) -> Result<LaurentPoly, ParseError> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(ParseError {
            position: 0,
            message: "empty input".into(),
        });
    }
    let mut parser = Parser {
        tokens,
        index: 0,
        end: text.len(),
        options,
    };
    let poly = parser.expr()?;
    if parser.index < parser.tokens.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(poly)
}
