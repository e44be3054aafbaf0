use std::fmt;

use thiserror::Error;

use super::{Factor, Index, ProductExpr};
use crate::series::{Monomial, Sign};

/// Largest magnitude accepted for any integer literal. Keeps expansions of
/// hostile inputs like `(q^-999999999;q)_inf` from exhausting memory.
pub const MAX_LITERAL: u64 = 1000;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("parse error at offset {position}: expected {expected}, found {found}")]
pub struct ParseError {
    pub position: usize,
    pub expected: String,
    pub found: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    LParen,
    RParen,
    Comma,
    Semi,
    Underscore,
    Caret,
    Star,
    Slash,
    Minus,
    Int(String),
    Word(String),
    Bad(char),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::LParen => f.write_str("'('"),
            Tok::RParen => f.write_str("')'"),
            Tok::Comma => f.write_str("','"),
            Tok::Semi => f.write_str("';'"),
            Tok::Underscore => f.write_str("'_'"),
            Tok::Caret => f.write_str("'^'"),
            Tok::Star => f.write_str("'*'"),
            Tok::Slash => f.write_str("'/'"),
            Tok::Minus => f.write_str("'-'"),
            Tok::Int(s) | Tok::Word(s) => write!(f, "'{s}'"),
            Tok::Bad(c) => write!(f, "'{c}'"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

fn lex(text: &str) -> Vec<(usize, Tok)> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        let tok = match c {
            c if c.is_whitespace() => {
                chars.next();
                continue;
            }
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            ';' => Tok::Semi,
            '_' => Tok::Underscore,
            '^' => Tok::Caret,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '-' => Tok::Minus,
            c if c.is_ascii_digit() || c.is_alphabetic() => {
                let digits = c.is_ascii_digit();
                let mut s = String::new();
                while let Some(&(_, d)) = chars.peek() {
                    let same = if digits { d.is_ascii_digit() } else { d.is_alphabetic() };
                    if !same {
                        break;
                    }
                    s.push(d);
                    chars.next();
                }
                out.push((pos, if digits { Tok::Int(s) } else { Tok::Word(s) }));
                continue;
            }
            other => Tok::Bad(other),
        };
        chars.next();
        out.push((pos, tok));
    }
    out.push((text.len(), Tok::End));
    out
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

type PResult<T> = Result<T, ParseError>;

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &str) -> PResult<T> {
        Err(ParseError { position: self.pos(), expected: expected.to_string(), found: self.peek().to_string() })
    }

    fn expect(&mut self, tok: Tok, expected: &str) -> PResult<()> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.fail(expected)
        }
    }

    fn is_word(&self, w: &str) -> bool {
        matches!(self.peek(), Tok::Word(s) if s.eq_ignore_ascii_case(w))
    }

    fn uint(&mut self) -> PResult<i64> {
        match self.peek() {
            Tok::Int(s) => match s.parse::<u64>() {
                Ok(v) if v <= MAX_LITERAL => {
                    self.bump();
                    Ok(v as i64)
                }
                _ => self.fail(&format!("an integer of magnitude at most {MAX_LITERAL}")),
            },
            _ => self.fail("an integer"),
        }
    }

    fn sint(&mut self) -> PResult<i64> {
        if *self.peek() == Tok::Minus {
            self.bump();
            Ok(-self.uint()?)
        } else {
            self.uint()
        }
    }

    fn mono(&mut self) -> PResult<Monomial> {
        let sign = if *self.peek() == Tok::Minus {
            self.bump();
            Sign::Minus
        } else {
            Sign::Plus
        };
        match self.peek() {
            Tok::Int(s) if s == "1" => {
                self.bump();
                Ok(Monomial::new(sign, 0))
            }
            Tok::Word(s) if s == "q" => {
                self.bump();
                let exp = if *self.peek() == Tok::Caret {
                    self.bump();
                    self.sint()?
                } else {
                    1
                };
                Ok(Monomial::new(sign, exp))
            }
            _ => self.fail("'1' or 'q'"),
        }
    }

    fn base(&mut self) -> PResult<i64> {
        if !matches!(self.peek(), Tok::Word(s) if s == "q") {
            return self.fail("a base of the form q or q^k");
        }
        self.bump();
        if *self.peek() != Tok::Caret {
            return Ok(1);
        }
        self.bump();
        let at = self.pos();
        let b = self.uint()?;
        if b < 1 {
            return Err(ParseError { position: at, expected: "a base exponent >= 1".into(), found: b.to_string() });
        }
        Ok(b)
    }

    fn poch(&mut self) -> PResult<Factor> {
        self.expect(Tok::LParen, "'('")?;
        let mut args = vec![self.mono()?];
        while *self.peek() == Tok::Comma {
            self.bump();
            args.push(self.mono()?);
        }
        self.expect(Tok::Semi, "',' or ';'")?;
        let base = self.base()?;
        self.expect(Tok::RParen, "')'")?;
        self.expect(Tok::Underscore, "'_'")?;
        let index = if self.is_word("inf") {
            self.bump();
            Index::Infinite
        } else if matches!(self.peek(), Tok::Int(_) | Tok::Minus) {
            Index::Finite(self.sint()?)
        } else {
            return self.fail("'inf' or an integer subscript");
        };
        let mut power = 1;
        if *self.peek() == Tok::Caret {
            self.bump();
            let at = self.pos();
            power = self.sint()?;
            if power == 0 {
                return Err(ParseError { position: at, expected: "a nonzero power".into(), found: "0".into() });
            }
        }
        Ok(Factor::Poch { args, base, index, power })
    }

    fn factor(&mut self) -> PResult<Factor> {
        match self.peek() {
            Tok::LParen => self.poch(),
            Tok::Minus | Tok::Int(_) | Tok::Word(_) => Ok(Factor::Mono(self.mono()?)),
            _ => self.fail("a Pochhammer symbol or a monomial"),
        }
    }

    fn expr(&mut self) -> PResult<ProductExpr> {
        let mut factors = vec![self.factor()?];
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    factors.push(self.factor()?);
                }
                Tok::Slash => {
                    self.bump();
                    factors.push(invert(self.factor()?));
                }
                Tok::End => return Ok(ProductExpr { factors }),
                _ => return self.fail("'*', '/' or end of input"),
            }
        }
    }
}

fn invert(f: Factor) -> Factor {
    match f {
        Factor::Mono(m) => Factor::Mono(m.recip()),
        Factor::Poch { args, base, index, power } => Factor::Poch { args, base, index, power: -power },
    }
}

/// Parses a product expression. Whitespace between tokens is ignored.
pub fn parse(text: &str) -> Result<ProductExpr, ParseError> {
    Parser { toks: lex(text), at: 0 }.expr()
}
