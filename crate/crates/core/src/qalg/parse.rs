//! Reader for the textual scalar format produced by `Display`.
//!
//! Accepts a little more than it emits: `2*q^2` as well as `2q^2`, and
//! arbitrary whitespace.

use alloc::string::ToString;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{LaurentFraction, LaurentPoly};
use crate::Error;

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
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

    fn expect(&mut self, c: u8) -> Result<(), Error> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(&alloc::format!("expected '{}'", c as char)))
        }
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn digits(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let s = core::str::from_utf8(&self.src[start..self.pos]).ok()?;
        s.parse().ok()
    }

    fn small_int(&mut self) -> Result<i64, Error> {
        let neg = self.eat(b'-');
        let v = self.digits().ok_or_else(|| self.err("expected an integer"))?;
        let v: i64 = i64::try_from(v).map_err(|_| self.err("exponent out of range"))?;
        Ok(if neg { -v } else { v })
    }

    /// `q`, `q^k`, `q^(a/b)`; returns the exponent as `(num, den)`.
    fn q_power(&mut self) -> Result<(i64, u32), Error> {
        self.expect(b'q')?;
        if !self.eat(b'^') {
            return Ok((1, 1));
        }
        if self.eat(b'(') {
            let a = self.small_int()?;
            let b = if self.eat(b'/') { self.small_int()? } else { 1 };
            self.expect(b')')?;
            if b <= 0 || b > u32::MAX as i64 {
                return Err(self.err("exponent denominator must be positive"));
            }
            Ok((a, b as u32))
        } else {
            Ok((self.small_int()?, 1))
        }
    }

    fn term(&mut self) -> Result<LaurentPoly, Error> {
        let coeff = self.digits();
        let has_coeff = coeff.is_some();
        let coeff = coeff.unwrap_or_else(BigInt::one);
        if has_coeff {
            self.eat(b'*');
        }
        if self.peek() == Some(b'q') {
            let (a, b) = self.q_power()?;
            Ok(LaurentPoly::monomial(b, a, coeff))
        } else if has_coeff {
            Ok(LaurentPoly::from_int(coeff))
        } else {
            Err(self.err("expected a term"))
        }
    }

    fn poly(&mut self) -> Result<LaurentPoly, Error> {
        let mut acc = LaurentPoly::zero();
        let mut neg = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        loop {
            let t = self.term()?;
            acc = if neg { &acc - &t } else { &acc + &t };
            match self.peek() {
                Some(b'+') => neg = false,
                Some(b'-') => neg = true,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }
}

pub fn parse_poly(text: &str) -> Result<LaurentPoly, Error> {
    let mut c = Cursor { src: text.as_bytes(), pos: 0 };
    let p = c.poly()?;
    if c.peek().is_some() {
        return Err(c.err("trailing input"));
    }
    Ok(p)
}

/// Parses `poly` or `(poly)/(poly)`.
pub fn parse_fraction(text: &str) -> Result<LaurentFraction, Error> {
    let mut c = Cursor { src: text.as_bytes(), pos: 0 };
    let x = if c.eat(b'(') {
        let num = c.poly()?;
        c.expect(b')')?;
        c.expect(b'/')?;
        c.expect(b'(')?;
        let den = c.poly()?;
        c.expect(b')')?;
        LaurentFraction::new(num, den)?
    } else {
        LaurentFraction::from(c.poly()?)
    };
    if c.peek().is_some() {
        return Err(c.err("trailing input"));
    }
    Ok(x)
}

impl core::str::FromStr for LaurentPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        parse_poly(s)
    }
}

impl core::str::FromStr for LaurentFraction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        parse_fraction(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalg::{qbinom, qint};
    use alloc::string::ToString;

    #[test]
    fn reads_what_display_writes() {
        for s in ["q^2 + 1 + q^-2", "q^(1/2) - 2", "q + q^-1", "-3q^(-4/3)", "0", "7", "(q)/(q^2 + 1)"] {
            let x: LaurentFraction = s.parse().unwrap();
            assert_eq!(x.to_string(), s);
        }
    }

    #[test]
    fn lenient_forms() {
        assert_eq!(parse_poly("2*q^2 + q^(2/4)").unwrap().to_string(), "2q^2 + q^(1/2)");
        assert_eq!(parse_poly("q^1+q^(-1)").unwrap(), qint(2));
        assert_eq!(parse_poly(&qbinom(5, 2).to_string()).unwrap(), qbinom(5, 2));
        assert!(parse_poly("q^").is_err());
        assert!(parse_poly("2 q x").is_err());
        assert!(parse_fraction("(1)/(0)").is_err());
    }
}
