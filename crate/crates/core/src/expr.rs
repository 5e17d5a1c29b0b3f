//! A small expression language for exact inputs such as `sqrt(2+i)-2` or
//! `(2+i)/(9+8i)`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := '-' factor | atom
//! atom   := uint ['i'] | 'i' | 'sqrt' '(' gaussint ')' | '(' expr ')'
//! ```
//!
//! At most one radicand may appear. A radicand that is a square in `Z[i]`
//! evaluates to its principal root.

use crate::error::{Error, Result};
use crate::exactnum::{sqrt_gaussian, FieldElement, GaussianInt};
use crate::notation::parse_gaussian;

use num_bigint::BigInt;
use std::str::FromStr;

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    radicand: Option<GaussianInt>,
}

fn err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse { pos, msg: msg.into() }
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(err(self.pos, format!("expected '{c}'")))
        }
    }

    /// Attaches the operator position to arithmetic failures.
    fn at<T>(&self, pos: usize, r: Result<T>) -> Result<T> {
        r.map_err(|e| match e {
            Error::FieldMismatch(..) => err(pos, "expressions may use only one radicand"),
            Error::DivisionByZero => err(pos, "division by zero"),
            other => other,
        })
    }

    fn expr(&mut self) -> Result<FieldElement> {
        let mut acc = self.term()?;
        loop {
            let pos = self.pos;
            if self.eat('+') {
                let rhs = self.term()?;
                acc = self.at(pos, acc.try_add(&rhs))?;
            } else if self.eat('-') {
                let rhs = self.term()?;
                acc = self.at(pos, acc.try_sub(&rhs))?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<FieldElement> {
        let mut acc = self.factor()?;
        loop {
            let pos = self.pos;
            if self.eat('*') {
                let rhs = self.factor()?;
                acc = self.at(pos, acc.try_mul(&rhs))?;
            } else if self.eat('/') {
                let rhs = self.factor()?;
                acc = self.at(pos, acc.try_div(&rhs))?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<FieldElement> {
        if self.eat('-') {
            return Ok(-self.factor()?);
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<FieldElement> {
        let start = self.pos;
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(')')?;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let begin = self.pos;
                while self.src[self.pos..].starts_with(|c: char| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let n = BigInt::from_str(&self.src[begin..self.pos]).expect("digits");
                if self.src[self.pos..].starts_with('i') && !self.src[self.pos..].starts_with("i(") {
                    self.pos += 1;
                    return Ok(GaussianInt { re: 0.into(), im: n }.into());
                }
                Ok(GaussianInt { re: n, im: 0.into() }.into())
            }
            Some('s') if self.src[self.pos..].starts_with("sqrt") => {
                self.pos += 4;
                self.expect('(')?;
                let begin = self.pos;
                let close = self.src[begin..]
                    .find(')')
                    .map(|p| begin + p)
                    .ok_or_else(|| err(begin, "unterminated sqrt("))?;
                let d = parse_gaussian(&self.src[begin..close]).map_err(|e| match e {
                    Error::Parse { pos, msg } => err(begin + pos, msg),
                    other => other,
                })?;
                self.pos = close + 1;
                if d.sqrt_exact().is_none() {
                    if let Some(r) = &self.radicand {
                        if *r != d {
                            return Err(err(start, "expressions may use only one radicand"));
                        }
                    }
                    self.radicand = Some(d.clone());
                }
                sqrt_gaussian(&d)
            }
            Some('i') => {
                self.pos += 1;
                Ok(GaussianInt::i().into())
            }
            Some(c) => Err(err(self.pos, format!("unexpected character '{c}'"))),
            None => Err(err(self.pos, "unexpected end of input")),
        }
    }
}

pub fn parse_expr(text: &str) -> Result<FieldElement> {
    let mut p = Parser { src: text, pos: 0, radicand: None };
    let v = p.expr()?;
    if p.peek().is_some() {
        return Err(err(p.pos, "trailing input"));
    }
    Ok(v)
}
