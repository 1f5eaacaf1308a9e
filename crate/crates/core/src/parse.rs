//! Polynomial expression grammar and the canonical printer.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := factor ('*' factor)*
//! factor  := '-' factor | '+' factor | primary ('^' nat)?
//! primary := integer ('/' integer)? | variable | '(' expr ')'
//! ```
//!
//! Whitespace is insignificant. The printer emits terms in descending
//! monomial order, so printing is canonical and parses back to the same
//! polynomial.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{Polynomial, RingRef};

pub fn parse_polynomial<F: Field>(text: &str, ring: &RingRef<F>) -> Result<Polynomial<F>> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, ring };
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.syntax("unexpected trailing input"));
    }
    Ok(poly)
}

struct Parser<'a, F: Field> {
    src: &'a [u8],
    pos: usize,
    ring: &'a RingRef<F>,
}

impl<F: Field> Parser<'_, F> {
    fn syntax(&self, message: &str) -> Error {
        Error::Syntax { pos: self.pos, message: message.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial<F>> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial<F>> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial<F>> {
        if self.eat(b'-') {
            return Ok(self.factor()?.neg());
        }
        if self.eat(b'+') {
            return self.factor();
        }
        let base = self.primary()?;
        if self.eat(b'^') {
            self.skip_ws();
            let start = self.pos;
            let digits = self.digits();
            if digits.is_empty() {
                return Err(self.syntax("expected a natural-number exponent"));
            }
            let e: u32 = digits
                .parse()
                .map_err(|_| Error::Syntax { pos: start, message: "exponent too large".into() })?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn primary(&mut self) -> Result<Polynomial<F>> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.syntax("expected `)`"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                let num: BigInt = self.digits().parse().expect("digit string");
                let field = self.ring.field();
                let value = if self.eat(b'/') {
                    self.skip_ws();
                    let den_text = self.digits();
                    if den_text.is_empty() {
                        return Err(self.syntax("expected a denominator"));
                    }
                    let den: BigInt = den_text.parse().expect("digit string");
                    field.from_ratio(&num, &den).ok_or_else(|| Error::CoefficientNotInField {
                        text: String::from_utf8_lossy(&self.src[start..self.pos]).into_owned(),
                        field: field.name(),
                    })?
                } else {
                    field.from_bigint(&num)
                };
                Ok(Polynomial::constant(self.ring, value))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                match self.ring.var_index(name) {
                    Some(i) => Ok(Polynomial::var(self.ring, i)),
                    None => Err(Error::UnknownVariable { name: name.to_string(), pos: start }),
                }
            }
            Some(_) => Err(self.syntax("unexpected character")),
            None => Err(self.syntax("unexpected end of input")),
        }
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let field = self.field();
        let names = self.ring().names();
        for (i, (m, c)) in self.terms().iter().enumerate() {
            let negative = field.is_negative(c);
            let abs = if negative { field.neg(c) } else { c.clone() };
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors = Vec::new();
            if !field.is_one(&abs) || m.is_one() {
                factors.push(field.format(&abs));
            }
            for (v, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(names[v].clone()),
                    _ => factors.push(format!("{}^{}", names[v], e)),
                }
            }
            if m.component() > 0 {
                factors.push(format!("<e{}>", m.component()));
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}
