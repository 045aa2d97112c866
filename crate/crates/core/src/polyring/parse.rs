use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use super::{Monomial, MultiPoly, Var};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParsePolyError {
    #[error("unexpected character {found:?} at byte {pos}")]
    Unexpected { found: char, pos: usize },
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("bad variable name at byte {0}")]
    BadVariable(usize),
}

/// Parses the textual form produced by `Display`, e.g. `x1^2*y1 - 2*x1*x2 + 3`.
/// Any term order and repeated monomials are accepted.
impl FromStr for MultiPoly {
    type Err = ParsePolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = Parser {
            src: s.as_bytes(),
            pos: 0,
        };
        let out = p.poly()?;
        p.skip_ws();
        match p.peek() {
            None => Ok(out),
            Some(c) => Err(ParsePolyError::Unexpected {
                found: c as char,
                pos: p.pos,
            }),
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn poly(&mut self) -> Result<MultiPoly, ParsePolyError> {
        let mut out = MultiPoly::zero();
        self.skip_ws();
        let mut negative = false;
        if self.peek() == Some(b'-') {
            negative = true;
            self.pos += 1;
        }
        loop {
            let (m, mut c) = self.term()?;
            if negative {
                c = -c;
            }
            out.add_term(m, c);
            self.skip_ws();
            match self.peek() {
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                _ => return Ok(out),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<(Monomial, BigInt), ParsePolyError> {
        let mut coeff = BigInt::one();
        let mut mono = Monomial::one();
        loop {
            self.skip_ws();
            match self.peek() {
                Some(c) if c.is_ascii_digit() => coeff *= self.number()?,
                Some(b'x') | Some(b'y') => {
                    let v = self.variable()?;
                    let mut e = 1u32;
                    self.skip_ws();
                    if self.peek() == Some(b'^') {
                        self.pos += 1;
                        self.skip_ws();
                        e = u32::try_from(self.number()?).map_err(|_| ParsePolyError::Unexpected {
                            found: '^',
                            pos: self.pos,
                        })?;
                    }
                    let prev = mono.exponent(v);
                    mono.set(v, prev + e);
                }
                Some(c) => {
                    return Err(ParsePolyError::Unexpected {
                        found: c as char,
                        pos: self.pos,
                    })
                }
                None => return Err(ParsePolyError::UnexpectedEnd),
            }
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                return Ok((mono, coeff));
            }
        }
    }

    fn number(&mut self) -> Result<BigInt, ParsePolyError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return match self.peek() {
                Some(c) => Err(ParsePolyError::Unexpected {
                    found: c as char,
                    pos: self.pos,
                }),
                None => Err(ParsePolyError::UnexpectedEnd),
            };
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("ascii digits"))
    }

    fn variable(&mut self) -> Result<Var, ParsePolyError> {
        let start = self.pos;
        let family = self.src[self.pos];
        self.pos += 1;
        let idx = self.number().map_err(|_| ParsePolyError::BadVariable(start))?;
        let idx: usize = idx.try_into().map_err(|_| ParsePolyError::BadVariable(start))?;
        if idx == 0 || idx > 30000 {
            return Err(ParsePolyError::BadVariable(start));
        }
        Ok(if family == b'x' { Var::x(idx) } else { Var::y(idx) })
    }
}
