//! Recursive-descent parser for the identity language.
//!
//! Grammar (ASCII, whitespace insignificant between tokens):
//!
//! ```text
//! identity := poly | poly '=' poly        ('lhs = rhs' becomes lhs - rhs)
//! poly     := '0' | ['-'] term (('+'|'-') term)*
//! term     := [rational] monomial
//! rational := INT | INT '/' INT
//! monomial := 'x' INT | '(' monomial op monomial ')'
//! op       := ('*'|'>'|'<'|'.') [INT]     (index defaults to 1)
//! ```
//!
//! Parenthesization is mandatory: the operations are nonassociative.

use super::{Monomial, OpFamily, OpSymbol, Polynomial, Signature};
use crate::error::Error;
use crate::Q;
use num_bigint::BigInt;
use num_traits::One;

/// Parses one identity; `lhs = rhs` sugar becomes `lhs - rhs`.
pub fn parse_polynomial(text: &str, sig: &Signature) -> Result<Polynomial, Error> {
    let mut p = Parser {
        bytes: text.as_bytes(),
        pos: 0,
        sig: *sig,
    };
    let lhs = p.parse_poly()?;
    p.skip_ws();
    let out = if p.peek() == Some(b'=') {
        p.pos += 1;
        let rhs = p.parse_poly()?;
        lhs.sub(&rhs)
    } else {
        lhs
    };
    p.skip_ws();
    if let Some(c) = p.peek() {
        return Err(Error::syntax(
            p.pos,
            format!("unexpected character `{}` after polynomial", c as char),
        ));
    }
    Ok(out)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    sig: Signature,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ') | Some(b'\t')) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), Error> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::syntax(
                self.pos,
                format!(
                    "expected `{}`{}",
                    c as char,
                    match self.peek() {
                        Some(g) => format!(", found `{}`", g as char),
                        None => ", found end of input".to_string(),
                    }
                ),
            ))
        }
    }

    fn parse_poly(&mut self) -> Result<Polynomial, Error> {
        self.skip_ws();
        // Lone zero.
        if self.peek() == Some(b'0') && !matches!(self.bytes.get(self.pos + 1), Some(b'0'..=b'9')) {
            let save = self.pos;
            self.pos += 1;
            self.skip_ws();
            match self.peek() {
                None | Some(b'=') => return Ok(Polynomial::zero(self.sig)),
                _ => self.pos = save,
            }
        }
        let mut negative = false;
        if self.peek() == Some(b'-') {
            negative = true;
            self.pos += 1;
        } else if self.peek() == Some(b'+') {
            self.pos += 1;
        }
        let mut poly = Polynomial::zero(self.sig);
        let (m, c) = self.parse_term()?;
        poly.add_term(m, if negative { -c } else { c });
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let (m, c) = self.parse_term()?;
                    poly.add_term(m, c);
                }
                Some(b'-') => {
                    self.pos += 1;
                    let (m, c) = self.parse_term()?;
                    poly.add_term(m, -c);
                }
                _ => break,
            }
        }
        Ok(poly)
    }

    fn parse_term(&mut self) -> Result<(Monomial, Q), Error> {
        self.skip_ws();
        let coeff = if matches!(self.peek(), Some(b'0'..=b'9')) {
            self.parse_rational()?
        } else {
            Q::one()
        };
        let m = self.parse_monomial()?;
        Ok((m, coeff))
    }

    fn parse_rational(&mut self) -> Result<Q, Error> {
        let numer = self.parse_uint()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let offset = self.pos;
            let denom = self.parse_uint()?;
            if denom == BigInt::from(0) {
                return Err(Error::syntax(offset, "zero denominator"));
            }
            Ok(Q::new(numer, denom))
        } else {
            Ok(Q::from_integer(numer))
        }
    }

    fn parse_uint(&mut self) -> Result<BigInt, Error> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::syntax(self.pos, "expected an integer"));
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        Ok(text.parse().unwrap())
    }

    fn parse_monomial(&mut self) -> Result<Monomial, Error> {
        self.skip_ws();
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                let offset = self.pos;
                let v = self.parse_uint()?;
                let v: usize = v
                    .try_into()
                    .map_err(|_| Error::syntax(offset, "variable index too large"))?;
                if v == 0 {
                    return Err(Error::syntax(offset, "variable index 0"));
                }
                if v > 64 {
                    return Err(Error::syntax(offset, "variable index above 64"));
                }
                Ok(Monomial::Leaf(v))
            }
            Some(b'(') => {
                self.pos += 1;
                let left = self.parse_monomial()?;
                let op = self.parse_op()?;
                let right = self.parse_monomial()?;
                self.expect(b')')?;
                Ok(Monomial::node(op, left, right))
            }
            Some(c) => Err(Error::syntax(
                self.pos,
                format!("expected a monomial, found `{}`", c as char),
            )),
            None => Err(Error::syntax(self.pos, "expected a monomial, found end of input")),
        }
    }

    fn parse_op(&mut self) -> Result<OpSymbol, Error> {
        self.skip_ws();
        let offset = self.pos;
        let family = self
            .peek()
            .and_then(|c| OpFamily::from_glyph(c as char))
            .ok_or_else(|| Error::syntax(offset, "expected an operation symbol (* > < .)"))?;
        self.pos += 1;
        let index = if matches!(self.peek(), Some(b'0'..=b'9')) {
            let at = self.pos;
            let n: usize = self
                .parse_uint()?
                .try_into()
                .map_err(|_| Error::syntax(at, "operation index too large"))?;
            n
        } else {
            1
        };
        if index == 0 || index > self.sig.nops {
            return Err(Error::syntax(
                offset,
                format!("unknown operation index {index} (signature has {})", self.sig.nops),
            ));
        }
        if !self.sig.context.allows(family) {
            return Err(Error::syntax(
                offset,
                format!(
                    "operation family `{}` not allowed in {} context",
                    family.glyph(),
                    self.sig.context
                ),
            ));
        }
        Ok(OpSymbol::new(family, index))
    }
}
