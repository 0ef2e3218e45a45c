//! Recursive-descent parser for polynomial expressions in `x`.
//!
//! ```text
//! expr     := ['-'] term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := base ('^' unsigned-integer)?
//! base     := rational | 'x' | '(' expr ')'
//! rational := integer ['/' positive-integer]
//! ```
//!
//! Whitespace between tokens is ignored. Implicit multiplication (`3x`) is
//! rejected. Rational functions use the same grammar with `/` also allowed
//! between factors.

use num_bigint::BigInt;
use num_traits::Zero;
use pillai_core::function_field::RatFn;
use pillai_core::{BigRat, Poly};
use thiserror::Error;

/// Largest exponent accepted after `^`.
pub const MAX_EXPONENT: u32 = 1000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {pos}: {message}")]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Mode {
    Poly,
    RatFn,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    mode: Mode,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, mode: Mode) -> Self {
        Parser {
            src: text.as_bytes(),
            pos: 0,
            mode,
        }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.pos,
            message: message.into(),
        })
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

    fn finish(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(c) => self.err(format!("unexpected character '{}'", c as char)),
        }
    }

    fn expr(&mut self) -> Result<RatFn, ParseError> {
        let negate = self.eat(b'-');
        let first = self.term()?;
        let mut acc = if negate { -&first } else { first };
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

    fn term(&mut self) -> Result<RatFn, ParseError> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.factor()?;
            } else if self.peek() == Some(b'/') {
                if self.mode == Mode::Poly {
                    return self.err("division is only allowed inside a rational literal");
                }
                self.pos += 1;
                let at = self.pos;
                let d = self.factor()?;
                acc = acc.checked_div(&d).map_err(|_| ParseError {
                    pos: at,
                    message: "division by zero".into(),
                })?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<RatFn, ParseError> {
        let base = self.base()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        self.skip_ws();
        let at = self.pos;
        let Some(e) = self.integer()? else {
            return self.err("exponent must be an unsigned integer");
        };
        let e: u32 = match u32::try_from(&e) {
            Ok(e) if e <= MAX_EXPONENT => e,
            _ => {
                return Err(ParseError {
                    pos: at,
                    message: format!("exponent larger than {MAX_EXPONENT}"),
                })
            }
        };
        if self.peek() == Some(b'.') {
            return self.err("exponent must be an unsigned integer");
        }
        Ok(base.pow(e as i32).expect("non-negative exponent"))
    }

    fn base(&mut self) -> Result<RatFn, ParseError> {
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                Ok(RatFn::from_poly(Poly::x()))
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return self.err("expected ')'");
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let r = self.rational()?;
                Ok(RatFn::from_poly(Poly::constant(r)))
            }
            Some(c) => self.err(format!("unexpected character '{}'", c as char)),
            None => self.err("unexpected end of input"),
        }
    }

    /// Digits at the current position (no sign, no leading whitespace skip).
    fn integer(&mut self) -> Result<Option<BigInt>, ParseError> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Ok(None);
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(Some(digits.parse().expect("decimal digits")))
    }

    fn rational(&mut self) -> Result<BigRat, ParseError> {
        self.skip_ws();
        let num = self.integer()?.expect("caller checked for a digit");
        let save = self.pos;
        if self.eat(b'/') {
            self.skip_ws();
            match self.integer()? {
                Some(d) if !d.is_zero() => return Ok(BigRat::new(num, d)),
                Some(_) => return self.err("zero denominator"),
                None if self.mode == Mode::RatFn => {
                    // not a literal: let `term` treat the slash as division
                    self.pos = save;
                }
                None => return self.err("expected a positive integer denominator"),
            }
        }
        Ok(BigRat::from_integer(num))
    }
}

pub fn parse_poly(text: &str) -> Result<Poly, ParseError> {
    let mut p = Parser::new(text, Mode::Poly);
    let v = p.expr()?;
    p.finish()?;
    debug_assert!(v.den().is_one());
    Ok(v.num().clone())
}

pub fn parse_ratfn(text: &str) -> Result<RatFn, ParseError> {
    let mut p = Parser::new(text, Mode::RatFn);
    let v = p.expr()?;
    p.finish()?;
    Ok(v)
}

/// A signed rational literal such as `-3/2` or `7`.
pub fn parse_rational(text: &str) -> Result<BigRat, ParseError> {
    let mut p = Parser::new(text, Mode::Poly);
    let negate = p.eat(b'-');
    match p.peek() {
        Some(c) if c.is_ascii_digit() => {}
        _ => return p.err("expected a rational number"),
    }
    let r = p.rational()?;
    p.finish()?;
    Ok(if negate { -r } else { r })
}

/// Comma-separated rationals, e.g. `-1,0,1/2`.
pub fn parse_grid(text: &str) -> Result<Vec<BigRat>, ParseError> {
    let mut out = Vec::new();
    let mut offset = 0;
    for part in text.split(',') {
        let r = parse_rational(part).map_err(|e| ParseError {
            pos: e.pos + offset,
            message: e.message,
        })?;
        out.push(r);
        offset += part.len() + 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn simple_polynomials() {
        assert_eq!(parse_poly("x^2 - 1").unwrap(), Poly::from_ints(&[-1, 0, 1]));
        assert_eq!(
            parse_poly("3/2*x^4 - x + 7").unwrap(),
            Poly::new(vec![rat(7, 1), rat(-1, 1), rat(0, 1), rat(0, 1), rat(3, 2)])
        );
        assert_eq!(
            parse_poly("(x+1)^2 - (x-1)^2").unwrap(),
            Poly::from_ints(&[0, 4])
        );
        assert_eq!(
            parse_poly("  -  ( x ) ").unwrap(),
            Poly::from_ints(&[0, -1])
        );
        assert_eq!(parse_poly("2^3*x").unwrap(), Poly::from_ints(&[0, 8]));
        assert_eq!(parse_poly("x^0").unwrap(), Poly::one());
    }

    #[test]
    fn rejected_inputs() {
        for bad in [
            "3x", "x^-1", "x^(2)", "x^1.5", "x/2", "1/0", "", "x +", "--x", "x*-1", "(x", "y",
        ] {
            assert!(parse_poly(bad).is_err(), "{bad:?} should not parse");
        }
        let e = parse_poly("x + 3x").unwrap_err();
        assert_eq!(e.pos, 5);
        assert!(parse_poly("x^1001").is_err());
    }

    #[test]
    fn rational_functions() {
        let f = parse_ratfn("(x^2+1)/x").unwrap();
        assert_eq!(f.num(), &Poly::from_ints(&[1, 0, 1]));
        assert_eq!(f.den(), &Poly::x());
        let g = parse_ratfn("x^2/(x-1)").unwrap();
        assert_eq!(g.den(), &Poly::from_ints(&[-1, 1]));
        assert_eq!(
            parse_ratfn("3/2").unwrap(),
            RatFn::from_poly(Poly::constant(rat(3, 2)))
        );
        assert!(parse_ratfn("x/(x-x)").is_err());
    }

    #[test]
    fn rationals_and_grids() {
        assert_eq!(parse_rational("-7/5").unwrap(), rat(-7, 5));
        assert_eq!(parse_rational("4/2").unwrap(), rat(2, 1));
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1/").is_err());
        assert_eq!(
            parse_grid("-1, 0,1/2").unwrap(),
            vec![rat(-1, 1), rat(0, 1), rat(1, 2)]
        );
        assert_eq!(parse_grid("1,,2").unwrap_err().pos, 2);
    }
}
