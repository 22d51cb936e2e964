//! Product expressions such as `E3(x+1/2)*B2^2`.
//!
//! ```text
//! expr     := factor ("*" factor)*
//! factor   := family index power? arg?
//! family   := "E" | "B"
//! index    := decimal integer
//! power    := "^" decimal integer
//! arg      := "(" "x" (("+" | "-") rational)? ")"
//! rational := integer ("/" positive-integer)?
//! ```
//!
//! Whitespace is ignored between tokens.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::exactnum::Rational;
use crate::oracle::{Factor, ProductSpec};
use crate::polyalg::Family;

/// Largest accepted index or power.
pub const MAX_INDEX: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: expected {}, found {found}", expected.join(" or "))]
    Syntax { offset: usize, expected: Vec<&'static str>, found: String },
    #[error("number at byte {offset} exceeds the limit of {MAX_INDEX}")]
    Overflow { offset: usize },
}

impl ParseError {
    pub fn offset(&self) -> usize {
        match self {
            ParseError::Syntax { offset, .. } | ParseError::Overflow { offset } => *offset,
        }
    }
}

/// A parsed product of shifted basis polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductExpr {
    pub factors: Vec<Factor>,
}

impl ProductExpr {
    pub fn to_spec(&self) -> ProductSpec {
        ProductSpec::new(self.factors.clone()).expect("parser never yields an empty product")
    }
}

impl fmt::Display for ProductExpr {
    /// Canonical text: powers expanded, zero shifts omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "{}{}", factor.family.letter(), factor.index)?;
            let s = &factor.shift;
            if s.is_negative() {
                write!(f, "(x-{})", s.abs())?;
            } else if !s.is_zero() {
                write!(f, "(x+{s})")?;
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_whitespace()) {
            self.pos += self.peek().map_or(0, char::len_utf8);
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn fail<T>(&self, expected: &[&'static str]) -> Result<T, ParseError> {
        let found = match self.peek() {
            Some(c) => format!("'{c}'"),
            None => "end of input".to_string(),
        };
        Err(ParseError::Syntax { offset: self.pos, expected: expected.to_vec(), found })
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char, name: &'static str) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.fail(&[name])
        }
    }

    fn digits(&mut self) -> Result<(usize, &'a str), ParseError> {
        self.skip_ws();
        let start = self.pos;
        let len = self.src[start..].bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return self.fail(&["digit"]);
        }
        self.pos += len;
        Ok((start, &self.src[start..self.pos]))
    }

    fn bounded(&mut self) -> Result<usize, ParseError> {
        let (start, text) = self.digits()?;
        match text.parse::<usize>() {
            Ok(v) if v <= MAX_INDEX => Ok(v),
            _ => Err(ParseError::Overflow { offset: start }),
        }
    }

    fn rational(&mut self) -> Result<Rational, ParseError> {
        let (_, num) = self.digits()?;
        let num: BigInt = num.parse().expect("ascii digits");
        if !self.eat('/') {
            return Ok(Rational::from(num));
        }
        let (start, den) = self.digits()?;
        let den: BigInt = den.parse().expect("ascii digits");
        if den == BigInt::from(0) {
            return Err(ParseError::Syntax { offset: start, expected: vec!["positive integer"], found: "'0'".into() });
        }
        Ok(Rational::new(num, den).expect("nonzero denominator"))
    }

    fn factor(&mut self, out: &mut Vec<Factor>) -> Result<(), ParseError> {
        let family = if self.eat('E') {
            Family::Euler
        } else if self.eat('B') {
            Family::Bernoulli
        } else {
            return self.fail(&["'E'", "'B'"]);
        };
        let index = self.bounded()?;
        let mut power = 1;
        if self.eat('^') {
            self.skip_ws();
            let at = self.pos;
            power = self.bounded()?;
            if power == 0 {
                return Err(ParseError::Syntax { offset: at, expected: vec!["positive power"], found: "'0'".into() });
            }
        }
        let mut shift = Rational::zero();
        if self.eat('(') {
            self.expect('x', "'x'")?;
            if self.eat('+') {
                shift = self.rational()?;
            } else if self.eat('-') {
                shift = -self.rational()?;
            }
            self.expect(')', "')'")?;
        }
        out.extend(std::iter::repeat_n(Factor::shifted(family, index, shift), power));
        Ok(())
    }
}

/// Parse a product expression.
pub fn parse_expr(text: &str) -> Result<ProductExpr, ParseError> {
    let mut p = Parser { src: text, pos: 0 };
    let mut factors = Vec::new();
    p.factor(&mut factors)?;
    while p.eat('*') {
        p.factor(&mut factors)?;
    }
    p.skip_ws();
    if p.pos != text.len() {
        return p.fail(&["'*'", "'^'", "'('", "end of input"]);
    }
    Ok(ProductExpr { factors })
}
