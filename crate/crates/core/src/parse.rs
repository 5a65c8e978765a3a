//! Text grammar for polynomials and monomial ideals.
//!
//! expr     := term (('+'|'-') term)*
//! term     := factor (('*'|ws) factor)*
//! factor   := base ('^' nat)?
//! base     := rational | var | '(' expr ')'
//! rational := int ('/' nat)?
//! var      := 'x' | 'y' | 'z'
//!
//! Multiplication by juxtaposition is allowed, `^` takes a natural-number
//! exponent, and unary minus binds looser than `^` (so `-x^2` is -(x^2)).
//! Ideals are comma-separated expressions.

use num_bigint::BigInt;

use crate::algebra::{Polynomial, Rational, Var};
use crate::error::{Error, Result};

pub fn parse_polynomial(text: &str, vars: &[Var]) -> Result<Polynomial> {
    assert!(!vars.is_empty() && vars.len() <= 3);
    let mut p = Parser::new(text, vars);
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos < p.bytes.len() {
        return Err(p.unexpected("end of input"));
    }
    Ok(poly)
}

/// Comma-separated monomials in x and y, as exponent pairs in input
/// order. No minimalization happens here; duplicates are preserved.
pub fn parse_monomial_ideal(text: &str) -> Result<Vec<(u64, u64)>> {
    let vars = [Var::X, Var::Y];
    let mut p = Parser::new(text, &vars);
    let mut entries = Vec::new();
    loop {
        let poly = p.expr()?;
        let index = entries.len();
        if poly.term_count() != 1 {
            return Err(Error::NonMonomialTerm { index });
        }
        let (exps, _) = poly.terms().next().unwrap();
        entries.push((exps[0] as u64, exps[1] as u64));
        p.skip_ws();
        if p.peek() == Some(b',') {
            p.pos += 1;
        } else {
            break;
        }
    }
    p.skip_ws();
    if p.pos < p.bytes.len() {
        return Err(p.unexpected("',' or end of input"));
    }
    Ok(entries)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    vars: &'a [Var],
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, vars: &'a [Var]) -> Parser<'a> {
        Parser {
            bytes: text.as_bytes(),
            pos: 0,
            vars,
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn unexpected(&self, expected: &str) -> Error {
        let found = match self.peek() {
            None => "end of input".to_string(),
            Some(b) => format!("'{}'", b as char),
        };
        Error::Parse {
            offset: self.pos,
            expected: expected.to_string(),
            found,
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        self.skip_ws();
        let mut negate = false;
        if let Some(b) = self.peek() {
            if b == b'-' {
                negate = true;
                self.pos += 1;
            } else if b == b'+' {
                self.pos += 1;
            }
        }
        let mut acc = self.term()?;
        if negate {
            acc = -&acc;
        }
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc - &t;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                // Juxtaposition: a following digit, variable, or '('
                // starts a new factor.
                Some(b)
                    if b.is_ascii_digit() || b == b'(' || Var::from_char(b as char).is_some() =>
                {
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                Some(b) if b.is_ascii_alphabetic() => {
                    return Err(Error::UnknownVariable {
                        var: b as char,
                        offset: self.pos,
                    });
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.base()?;
        self.skip_ws();
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let n = self.natural()?;
            Ok(base.pow(n))
        } else {
            Ok(base)
        }
    }

    fn base(&mut self) -> Result<Polynomial> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(b')') {
                    return Err(self.unexpected("')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b) if b.is_ascii_digit() => {
                let c = self.rational()?;
                Ok(Polynomial::constant(self.vars, c))
            }
            Some(b) => {
                let c = b as char;
                match Var::from_char(c) {
                    Some(v) if self.vars.contains(&v) => {
                        self.pos += 1;
                        Ok(Polynomial::variable(self.vars, v))
                    }
                    Some(_) => Err(Error::UnknownVariable {
                        var: c,
                        offset: self.pos,
                    }),
                    None if c.is_ascii_alphabetic() => Err(Error::UnknownVariable {
                        var: c,
                        offset: self.pos,
                    }),
                    None => Err(self.unexpected("a number, variable, or '('")),
                }
            }
            None => Err(self.unexpected("a number, variable, or '('")),
        }
    }

    fn rational(&mut self) -> Result<Rational> {
        let numer = self.integer_digits()?;
        self.skip_ws();
        if self.peek() == Some(b'/') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let denom = self.integer_digits()?;
            if denom == BigInt::from(0) {
                return Err(Error::Parse {
                    offset: start,
                    expected: "a nonzero denominator".to_string(),
                    found: "0".to_string(),
                });
            }
            Ok(Rational::new(numer, denom))
        } else {
            Ok(Rational::from_integer(numer))
        }
    }

    fn integer_digits(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.unexpected("a digit"));
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        Ok(text.parse().expect("digit run parses as an integer"))
    }

    fn natural(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        let n = self.integer_digits()?;
        u32::try_from(n).map_err(|_| Error::Parse {
            offset: start,
            expected: "an exponent below 2^32".to_string(),
            found: "a larger number".to_string(),
        })
    }
}
