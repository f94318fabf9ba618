//! Recursive-descent parser for coefficient expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' exponent)?
//! atom   := INTEGER | 'q' | '(' expr ')'
//! exponent := '-'? INTEGER | '(' '-'? INTEGER ')'
//! ```
//!
//! Whitespace is insignificant. Positions in errors are 0-based character offsets.

use num_bigint::BigInt;

use super::rational::QRational;
use crate::error::{Error, Result};

pub fn parse(text: &str) -> Result<QRational> {
    let mut p = Parser { chars: text.chars().collect(), pos: 0 };
    p.skip_ws();
    if p.at_end() {
        return Err(p.error("empty expression"));
    }
    let value = p.expr()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.error(&format!("unexpected character '{}'", p.chars[p.pos])));
    }
    Ok(value)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn error(&self, message: &str) -> Error {
        Error::Syntax { position: self.pos, message: message.to_string() }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{c}'")))
        }
    }

    fn expr(&mut self) -> Result<QRational> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some('-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<QRational> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some('/') => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = acc.checked_div(&rhs)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<QRational> {
        if self.peek() == Some('-') {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<QRational> {
        let base = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        let k = self.exponent()?;
        base.pow(k)
    }

    fn exponent(&mut self) -> Result<i64> {
        let parens = self.peek() == Some('(');
        if parens {
            self.pos += 1;
        }
        let negative = self.peek() == Some('-');
        if negative {
            self.pos += 1;
        }
        self.skip_ws();
        let start = self.pos;
        let digits = self.digits();
        if digits.is_empty() {
            return Err(self.error("expected integer exponent"));
        }
        let k: i64 = digits.parse().map_err(|_| Error::Syntax {
            position: start,
            message: "exponent too large".into(),
        })?;
        if parens {
            self.expect(')')?;
        }
        Ok(if negative { -k } else { k })
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn atom(&mut self) -> Result<QRational> {
        match self.peek() {
            Some('q') => {
                self.pos += 1;
                Ok(QRational::q())
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(')')?;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.digits();
                let n: BigInt = digits.parse().expect("ascii digits");
                Ok(QRational::from_int(n))
            }
            Some(c) => Err(self.error(&format!("unexpected character '{c}'"))),
            None => Err(self.error("unexpected end of expression")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qfield::IntPoly;

    #[test]
    fn examples() {
        let a = parse("q").unwrap();
        assert_eq!(a.numer(), &IntPoly::q());
        assert!(a.denom().is_one());

        let b = parse("q - q^-1").unwrap();
        assert_eq!(b.numer().to_string(), "q^2-1");
        assert_eq!(b.denom().to_string(), "q");

        let c = parse("(q^2-1)/(q-1)").unwrap();
        assert_eq!(c.numer().to_string(), "q+1");
        assert!(c.denom().is_one());
    }

    #[test]
    fn negative_exponents_and_precedence() {
        assert_eq!(parse("q^(-3)").unwrap(), QRational::q_pow(-3));
        assert_eq!(parse("-q^2").unwrap(), -QRational::q_pow(2));
        assert_eq!(parse("2*q^2/3").unwrap().to_string(), "2*q^2/3");
        assert_eq!(parse(" ( q + 1 ) ^ 2 ").unwrap(), parse("q^2+2*q+1").unwrap());
        assert_eq!(parse("1-2-3").unwrap(), QRational::from_int(-4));
    }

    #[test]
    fn errors() {
        assert!(matches!(parse("q +"), Err(Error::Syntax { position: 3, .. })));
        assert!(matches!(parse("q ) "), Err(Error::Syntax { position: 2, .. })));
        assert_eq!(parse("1/(q-q)"), Err(Error::DivisionByZero));
        assert_eq!(parse("(q-q)^-1"), Err(Error::DivisionByZero));
        assert!(matches!(parse("2q"), Err(Error::Syntax { position: 1, .. })));
        assert!(matches!(parse(""), Err(Error::Syntax { .. })));
        assert!(matches!(parse("x"), Err(Error::Syntax { position: 0, .. })));
    }
}
