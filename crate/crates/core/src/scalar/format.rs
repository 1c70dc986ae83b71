//! Canonical text form of scalars.
//!
//! A Laurent polynomial prints as its terms in increasing exponent order, each term `c*q^k`
//! (`q^(e/2)` for odd powers of `t`), with unit coefficients omitted: `q^-3 + q^-1 + q`.
//! A proper fraction prints as `(num)/(den)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Laurent, Scalar};
use crate::error::Error;

/// Largest accepted `|exponent of t|` when parsing.
pub const MAX_PARSE_EXPONENT: i64 = 4096;

fn write_q_power(f: &mut fmt::Formatter<'_>, e: i64) -> fmt::Result {
    if e % 2 == 0 {
        match e / 2 {
            1 => write!(f, "q"),
            k => write!(f, "q^{k}"),
        }
    } else {
        write!(f, "q^({e}/2)")
    }
}

fn write_laurent(f: &mut fmt::Formatter<'_>, l: &Laurent) -> fmt::Result {
    if l.is_zero() {
        return write!(f, "0");
    }
    for (i, (e, c)) in l.terms().enumerate() {
        let negative = c.is_negative();
        match (i, negative) {
            (0, true) => write!(f, "-")?,
            (0, false) => {}
            (_, true) => write!(f, " - ")?,
            (_, false) => write!(f, " + ")?,
        }
        let abs = c.abs();
        if e == 0 {
            write!(f, "{abs}")?;
        } else if abs.is_one() {
            write_q_power(f, e)?;
        } else {
            write!(f, "{abs}*")?;
            write_q_power(f, e)?;
        }
    }
    Ok(())
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_laurent(f, self)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write_laurent(f, &self.num)
        } else {
            write!(f, "(")?;
            write_laurent(f, &self.num)?;
            write!(f, ")/(")?;
            write_laurent(f, &Laurent::from_poly(0, self.den.clone()))?;
            write!(f, ")")
        }
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        Parser { s: s.as_bytes(), pos: 0 }
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at byte {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), Error> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }

    fn digits(&mut self) -> Result<BigInt, Error> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        Ok(text.parse::<BigInt>().unwrap())
    }

    fn small_int(&mut self) -> Result<i64, Error> {
        let neg = self.eat(b'-');
        let d = self.digits()?;
        let v: i64 = i64::try_from(&d).map_err(|_| self.err("exponent too large"))?;
        Ok(if neg { -v } else { v })
    }

    /// Exponent of `t` following `q^`.
    fn exponent(&mut self) -> Result<i64, Error> {
        let e = if self.eat(b'(') || self.eat(b'{') {
            let closing = if self.s[self.pos - 1] == b'(' { b')' } else { b'}' };
            let v = self.small_int()?;
            let e = if self.eat(b'/') {
                if self.digits()? != BigInt::from(2) {
                    return Err(self.err("only halves are allowed in exponents"));
                }
                v
            } else {
                v.checked_mul(2).ok_or_else(|| self.err("exponent too large"))?
            };
            self.expect(closing)?;
            e
        } else {
            self.small_int()?.checked_mul(2).ok_or_else(|| self.err("exponent too large"))?
        };
        if e.abs() > MAX_PARSE_EXPONENT {
            return Err(self.err("exponent out of range"));
        }
        Ok(e)
    }

    fn q_power(&mut self) -> Result<i64, Error> {
        self.expect(b'q')?;
        if self.eat(b'^') {
            self.exponent()
        } else {
            Ok(2)
        }
    }

    fn term(&mut self) -> Result<(i64, BigRational), Error> {
        match self.peek() {
            Some(b'q') => Ok((self.q_power()?, BigRational::one())),
            Some(c) if c.is_ascii_digit() => {
                let n = self.digits()?;
                let c = if self.eat(b'/') {
                    let d = self.digits()?;
                    if d.is_zero() {
                        return Err(self.err("zero denominator"));
                    }
                    BigRational::new(n, d)
                } else {
                    BigRational::from_integer(n)
                };
                if self.eat(b'*') {
                    Ok((self.q_power()?, c))
                } else {
                    Ok((0, c))
                }
            }
            _ => Err(self.err("expected a term")),
        }
    }

    fn laurent(&mut self) -> Result<Laurent, Error> {
        let mut terms = Vec::new();
        let mut negative = self.eat(b'-');
        loop {
            let (e, c) = self.term()?;
            terms.push((e, if negative { -c } else { c }));
            if self.eat(b'+') {
                negative = false;
            } else if self.eat(b'-') {
                negative = true;
            } else {
                break;
            }
        }
        Ok(Laurent::from_terms(terms))
    }

    fn scalar(&mut self) -> Result<Scalar, Error> {
        let start = self.pos;
        let negated = self.eat(b'-') && self.peek() == Some(b'(');
        if !negated {
            self.pos = start;
        }
        let s = if self.eat(b'(') {
            let num = self.laurent()?;
            self.expect(b')')?;
            if self.eat(b'/') {
                self.expect(b'(')?;
                let den = self.laurent()?;
                self.expect(b')')?;
                Scalar::from_fraction(num, den)?
            } else {
                Scalar::from_laurent(num)
            }
        } else {
            Scalar::from_laurent(self.laurent()?)
        };
        if self.peek().is_some() {
            return Err(self.err("trailing input"));
        }
        Ok(if negated { -s } else { s })
    }
}

impl FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Parser::new(s).scalar()
    }
}
