//! Polynomial grammar: identifiers `[a-zA-Z][a-zA-Z0-9]*`, integer and
//! rational literals, `+ - * ^`, parentheses. Juxtaposition (`3x`, `x y`) is
//! rejected.

use num_bigint::BigInt;

use super::polynomial::Poly;
use super::ring::RingRef;
use crate::arith::{Field, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            out.push((start, Tok::Num(text[start..i].parse().unwrap())));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push((start, Tok::Ident(text[start..i].to_string())));
        } else if "+-*^/()".contains(c) {
            out.push((i, Tok::Op(c)));
            i += 1;
        } else {
            return Err(Error::Parse { pos: i, msg: format!("unexpected character '{c}'") });
        }
    }
    Ok(out)
}

struct Parser<'a, F: Field> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    ring: &'a RingRef,
    _f: std::marker::PhantomData<F>,
}

impl<F: Field> Parser<'_, F> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.offset(), msg: msg.into() })
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Poly<F>> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly<F>> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else {
                match self.peek() {
                    Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::Op('(')) => {
                        return self.err("implicit multiplication is not allowed; use '*'")
                    }
                    _ => return Ok(acc),
                }
            }
        }
    }

    fn unary(&mut self) -> Result<Poly<F>> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Poly<F>> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    let e: u32 = n
                        .try_into()
                        .ok()
                        .filter(|&e: &u32| e <= 10_000)
                        .map_or_else(|| self.err("exponent too large"), Ok)?;
                    self.pos += 1;
                    Ok(base.pow(e))
                }
                _ => self.err("expected a nonnegative integer exponent"),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Poly<F>> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                let mut value = Rational::from_integer(n);
                if self.eat('/') {
                    match self.peek().cloned() {
                        Some(Tok::Num(d)) if d != BigInt::from(0) => {
                            self.pos += 1;
                            value /= Rational::from_integer(d);
                        }
                        Some(Tok::Num(_)) => return self.err("zero denominator"),
                        _ => return self.err("'/' only forms rational literals"),
                    }
                }
                Ok(Poly::constant(self.ring, F::from_rational(value)))
            }
            Some(Tok::Ident(name)) => match self.ring.index_of(&name) {
                Some(i) => {
                    self.pos += 1;
                    Ok(Poly::var(self.ring, i))
                }
                None => self.err(format!("unknown variable '{name}'")),
            },
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected ')'");
                }
                Ok(inner)
            }
            Some(Tok::Op(c)) => self.err(format!("unexpected '{c}'")),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses a polynomial over `ring`.
pub fn parse_poly<F: Field>(text: &str, ring: &RingRef) -> Result<Poly<F>> {
    let mut p = Parser { toks: lex(text)?, pos: 0, end: text.len(), ring, _f: std::marker::PhantomData };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(out)
}
