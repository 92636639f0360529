//! Reader for the canonical text grammar: signed sums of `*`-separated
//! factors, each factor a rational number or `name^exp`.

use num_bigint::BigInt;
use num_traits::One;

use super::{Laurent, Monomial, MultiPoly, Rational, Var};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("unexpected character {0:?} at byte {1}")]
    UnexpectedChar(char, usize),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("negative exponent on {0}")]
    NegativeExponent(String),
    #[error("zero denominator")]
    ZeroDenominator,
}

type RawTerm = (Rational, Vec<(String, i64)>);

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
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

    fn number(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.unexpected());
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn ident(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn unexpected(&self) -> ParseError {
        match self.src.get(self.pos) {
            Some(&c) => ParseError::UnexpectedChar(c as char, self.pos),
            None => ParseError::UnexpectedEnd,
        }
    }
}

fn parse_raw(text: &str) -> Result<Vec<RawTerm>, ParseError> {
    let mut lx = Lexer { src: text.as_bytes(), pos: 0 };
    let mut terms = Vec::new();
    let mut negative = lx.eat(b'-');
    loop {
        let mut coeff = Rational::one();
        let mut factors = Vec::new();
        loop {
            match lx.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let n = lx.number()?;
                    let d = if lx.eat(b'/') { lx.number()? } else { BigInt::one() };
                    if d == BigInt::from(0) {
                        return Err(ParseError::ZeroDenominator);
                    }
                    coeff *= Rational::new(n, d);
                }
                Some(c) if c.is_ascii_alphabetic() => {
                    let name = lx.ident();
                    let mut exp = 1i64;
                    if lx.eat(b'^') {
                        let neg = lx.eat(b'-');
                        let e: i64 = lx.number()?.try_into().map_err(|_| lx.unexpected())?;
                        exp = if neg { -e } else { e };
                    }
                    factors.push((name, exp));
                }
                _ => return Err(lx.unexpected()),
            }
            if !lx.eat(b'*') {
                break;
            }
        }
        if negative {
            coeff = -coeff;
        }
        terms.push((coeff, factors));
        match lx.peek() {
            None => break,
            Some(b'+') => {
                lx.pos += 1;
                negative = false;
            }
            Some(b'-') => {
                lx.pos += 1;
                negative = true;
            }
            Some(_) => return Err(lx.unexpected()),
        }
    }
    Ok(terms)
}

/// Parses a polynomial over the named variables `g`, `delta`, `p1`, `q1`,
/// `c1`, `l1`, … with rational coefficients. The literal `0` is accepted.
pub fn parse_poly(text: &str) -> Result<MultiPoly, ParseError> {
    let mut out = MultiPoly::zero();
    for (c, factors) in parse_raw(text)? {
        let mut pairs = Vec::new();
        for (name, e) in factors {
            let v = Var::parse(&name).ok_or_else(|| ParseError::UnknownVariable(name.clone()))?;
            if e < 0 {
                return Err(ParseError::NegativeExponent(name));
            }
            pairs.push((v, e as u32));
        }
        out.add_term(Monomial::from_pairs(pairs), c);
    }
    Ok(out)
}

/// Parses a Laurent polynomial in `A`.
pub fn parse_laurent(text: &str) -> Result<Laurent, ParseError> {
    let mut out = Laurent::default();
    for (c, factors) in parse_raw(text)? {
        let mut e = 0i32;
        for (name, x) in factors {
            if name != "A" {
                return Err(ParseError::UnknownVariable(name));
            }
            e += x as i32;
        }
        out.add_term(e, c);
    }
    Ok(out)
}
