//! Parser for the textual form of [`ParamRational`].

use num_bigint::BigInt;

use super::poly::Param;
use super::ratfun::ParamRational;
use super::Rational;
use crate::error::{Error, Result};

pub fn parse(s: &str) -> Result<ParamRational> {
    let toks: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser { s: &toks, pos: 0 };
    let v = p.expr()?;
    if p.pos != toks.len() {
        return Err(Error::Parse(format!("unexpected trailing input in {:?}", s)));
    }
    Ok(v)
}

struct Parser<'a> {
    s: &'a [char],
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.s.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<ParamRational> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                '+' => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                '-' => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<ParamRational> {
        let mut acc = self.unary()?;
        while let Some(c) = self.peek() {
            match c {
                '*' => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                '/' => {
                    self.pos += 1;
                    let d = self.unary()?;
                    acc = acc.try_div(&d)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<ParamRational> {
        if self.peek() == Some('-') {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        if self.peek() == Some('+') {
            self.pos += 1;
        }
        self.power()
    }

    fn power(&mut self) -> Result<ParamRational> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let neg = if self.peek() == Some('-') {
                self.pos += 1;
                true
            } else {
                false
            };
            let e = self.integer()?;
            let e: i32 = e
                .try_into()
                .map_err(|_| Error::Parse("exponent too large".into()))?;
            return base.pow(if neg { -e } else { e });
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().map(|c| c.is_ascii_digit()).unwrap_or(false) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::Parse(format!("expected integer at offset {}", start)));
        }
        let s: String = self.s[start..self.pos].iter().collect();
        s.parse()
            .map_err(|_| Error::Parse(format!("bad integer {:?}", s)))
    }

    fn atom(&mut self) -> Result<ParamRational> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(Error::Parse("missing ')'".into()));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(ParamRational::from_rational(Rational::from_integer(n)))
            }
            Some(c) => match Param::from_symbol(c) {
                Some(p) => {
                    self.pos += 1;
                    Ok(ParamRational::param(p))
                }
                None => Err(Error::Parse(format!("unknown symbol {:?}", c))),
            },
            None => Err(Error::Parse("unexpected end of expression".into())),
        }
    }
}
