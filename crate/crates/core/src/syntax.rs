//! Shared text grammar for ordinal and tree-ordinal terms.
//!
//! ```text
//! sum      := summand ('+' summand)*
//! summand  := atom ('*' nat)?
//! atom     := nat | 'w' ('^' exponent)? | '(' sum ')'
//! exponent := nat | 'w' ('^' exponent)? | '(' sum ')'
//! ```
//!
//! `w^(w^2*3+1)*2+5` is a typical canonical ordinal. `ω` is accepted for `w`.

use crate::error::ParseError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Atom {
    Nat(u64),
    /// `w^exponent`; a bare `w` has exponent `1`.
    Power(Box<Sum>),
    Group(Sum),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Summand {
    pub atom: Atom,
    pub coeff: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Sum(pub Vec<Summand>);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tok {
    Nat(u64),
    Omega,
    Caret,
    Star,
    Plus,
    Open,
    Close,
}

struct Lexer<'a> {
    src: &'a str,
    toks: Vec<(usize, usize, Tok)>,
}

impl<'a> Lexer<'a> {
    fn run(src: &'a str) -> Result<Self, ParseError> {
        let mut toks = Vec::new();
        let mut it = src.char_indices().peekable();
        while let Some(&(i, c)) = it.peek() {
            match c {
                c if c.is_whitespace() => {
                    it.next();
                }
                '0'..='9' => {
                    let mut end = i;
                    while let Some(&(j, d)) = it.peek() {
                        if d.is_ascii_digit() {
                            end = j + d.len_utf8();
                            it.next();
                        } else {
                            break;
                        }
                    }
                    let text = &src[i..end];
                    let n = text.parse::<u64>().map_err(|_| ParseError {
                        offset: i,
                        token: text.to_string(),
                        message: "natural number does not fit in 64 bits".into(),
                    })?;
                    toks.push((i, end, Tok::Nat(n)));
                }
                _ => {
                    let tok = match c {
                        'w' | 'ω' => Tok::Omega,
                        '^' => Tok::Caret,
                        '*' => Tok::Star,
                        '+' => Tok::Plus,
                        '(' => Tok::Open,
                        ')' => Tok::Close,
                        other => {
                            return Err(ParseError {
                                offset: i,
                                token: other.to_string(),
                                message: "unexpected character".into(),
                            })
                        }
                    };
                    it.next();
                    toks.push((i, i + c.len_utf8(), tok));
                }
            }
        }
        Ok(Lexer { src, toks })
    }
}

pub(crate) struct Parser<'a> {
    lex: Lexer<'a>,
    pos: usize,
    depth: usize,
}

const MAX_DEPTH: usize = 512;

impl<'a> Parser<'a> {
    pub(crate) fn parse(src: &'a str) -> Result<Sum, ParseError> {
        let lex = Lexer::run(src)?;
        let mut p = Parser { lex, pos: 0, depth: 0 };
        if p.lex.toks.is_empty() {
            return Err(ParseError { offset: 0, token: String::new(), message: "empty term".into() });
        }
        let sum = p.sum()?;
        if p.pos < p.lex.toks.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(sum)
    }

    fn peek(&self) -> Option<Tok> {
        self.lex.toks.get(self.pos).map(|t| t.2)
    }

    fn error(&self, message: &str) -> ParseError {
        match self.lex.toks.get(self.pos) {
            Some(&(start, end, _)) => ParseError {
                offset: start,
                token: self.lex.src[start..end].to_string(),
                message: message.to_string(),
            },
            None => ParseError {
                offset: self.lex.src.len(),
                token: "<end>".into(),
                message: message.to_string(),
            },
        }
    }

    fn expect(&mut self, tok: Tok, message: &str) -> Result<(), ParseError> {
        if self.peek() == Some(tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(message))
        }
    }

    fn enter(&mut self) -> Result<(), ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(self.error("term nested too deeply"));
        }
        Ok(())
    }

    fn sum(&mut self) -> Result<Sum, ParseError> {
        self.enter()?;
        let mut items = vec![self.summand()?];
        while self.peek() == Some(Tok::Plus) {
            self.pos += 1;
            items.push(self.summand()?);
        }
        self.depth -= 1;
        Ok(Sum(items))
    }

    fn summand(&mut self) -> Result<Summand, ParseError> {
        let atom = self.atom()?;
        let mut coeff = 1u64;
        while self.peek() == Some(Tok::Star) {
            self.pos += 1;
            match self.peek() {
                Some(Tok::Nat(n)) => {
                    self.pos += 1;
                    coeff = coeff.checked_mul(n).ok_or_else(|| self.error("coefficient overflow"))?;
                }
                _ => return Err(self.error("expected a natural-number coefficient after `*`")),
            }
        }
        Ok(Summand { atom, coeff })
    }

    fn atom(&mut self) -> Result<Atom, ParseError> {
        match self.peek() {
            Some(Tok::Nat(n)) => {
                self.pos += 1;
                Ok(Atom::Nat(n))
            }
            Some(Tok::Omega) => {
                self.pos += 1;
                self.power_tail()
            }
            Some(Tok::Open) => {
                self.pos += 1;
                let inner = self.sum()?;
                self.expect(Tok::Close, "expected `)`")?;
                Ok(Atom::Group(inner))
            }
            _ => Err(self.error("expected a natural number, `w` or `(`")),
        }
    }

    fn power_tail(&mut self) -> Result<Atom, ParseError> {
        if self.peek() != Some(Tok::Caret) {
            return Ok(Atom::Power(Box::new(Sum(vec![Summand { atom: Atom::Nat(1), coeff: 1 }]))));
        }
        self.pos += 1;
        self.enter()?;
        let exponent = match self.peek() {
            Some(Tok::Nat(n)) => {
                self.pos += 1;
                Sum(vec![Summand { atom: Atom::Nat(n), coeff: 1 }])
            }
            Some(Tok::Omega) => {
                self.pos += 1;
                Sum(vec![Summand { atom: self.power_tail()?, coeff: 1 }])
            }
            Some(Tok::Open) => {
                self.pos += 1;
                let inner = self.sum()?;
                self.expect(Tok::Close, "expected `)`")?;
                inner
            }
            _ => return Err(self.error("expected an exponent after `^`")),
        };
        self.depth -= 1;
        Ok(Atom::Power(Box::new(exponent)))
    }
}
