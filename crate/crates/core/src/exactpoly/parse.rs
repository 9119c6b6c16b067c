//! Reader for polynomial expressions.
//!
//! Accepts the canonical output form (`3*m^2 - 6*m + 3`, `-1/2*v^3`) and a
//! little more: parentheses, division by nonzero constants and unary minus.
//! Multiplication must be explicit.

use std::str::FromStr;

use num_bigint::BigInt;

use super::{ExactRational, SparsePolynomial};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<(usize, Token)>> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
            '+' => out.push((start, Token::Plus)),
            '-' => out.push((start, Token::Minus)),
            '*' => out.push((start, Token::Star)),
            '/' => out.push((start, Token::Slash)),
            '^' => out.push((start, Token::Caret)),
            '(' => out.push((start, Token::LParen)),
            ')' => out.push((start, Token::RParen)),
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = s[start..i].parse().expect("digits");
                out.push((start, Token::Num(n)));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Token::Ident(s[start..i].to_string())));
                continue;
            }
            other => {
                return Err(Error::Parse {
                    pos: start,
                    msg: format!("unexpected character `{other}`"),
                })
            }
        }
        i += 1;
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|(o, _)| *o)
            .unwrap_or(self.end)
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse {
            pos: self.offset(),
            msg: msg.to_string(),
        })
    }

    fn expr(&mut self) -> Result<SparsePolynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    acc = acc.add_poly(&self.term()?);
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    acc = acc.sub_poly(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<SparsePolynomial> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    acc = acc.mul_poly(&self.unary()?);
                }
                Some(Token::Slash) => {
                    self.pos += 1;
                    let at = self.offset();
                    let d = self.unary()?;
                    if !d.is_constant() || d.is_zero() {
                        return Err(Error::Parse {
                            pos: at,
                            msg: "division only by nonzero constants".into(),
                        });
                    }
                    let inv = d.constant_term().recip()?;
                    acc = acc.scale_by(&inv);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<SparsePolynomial> {
        if let Some(Token::Minus) = self.peek() {
            self.pos += 1;
            return Ok(self.unary()?.neg_poly());
        }
        self.power()
    }

    fn power(&mut self) -> Result<SparsePolynomial> {
        let base = self.atom()?;
        if let Some(Token::Caret) = self.peek() {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Token::Num(n)) => {
                    self.pos += 1;
                    let e: u32 = match u32::try_from(&n) {
                        Ok(e) => e,
                        Err(_) => return self.err("exponent too large"),
                    };
                    return Ok(base.pow_poly(e));
                }
                _ => return self.err("expected a non-negative integer exponent"),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<SparsePolynomial> {
        match self.peek().cloned() {
            Some(Token::Num(n)) => {
                self.pos += 1;
                Ok(SparsePolynomial::constant(ExactRational::from(n)))
            }
            Some(Token::Ident(name)) => {
                self.pos += 1;
                Ok(SparsePolynomial::var(&name))
            }
            Some(Token::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Token::RParen) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => self.err("expected `)`"),
                }
            }
            _ => self.err("expected a number, variable or `(`"),
        }
    }
}

/// Parses an expression; variables are ordered by first appearance.
pub fn parse_polynomial(s: &str) -> Result<SparsePolynomial> {
    let tokens = tokenize(s)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        end: s.len(),
    };
    let p = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return parser.err("trailing input");
    }
    Ok(p)
}

/// Parses an expression into the given variable context.
pub fn parse_in<S: AsRef<str>>(s: &str, vars: &[S]) -> Result<SparsePolynomial> {
    parse_polynomial(s)?.with_context(vars)
}

impl FromStr for SparsePolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_polynomial(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_forms_parse() {
        let p = parse_polynomial("3*m^2 - 6*m + 3").unwrap();
        assert_eq!(p.variables(), ["m"]);
        assert_eq!(p.to_string(), "3*m^2 - 6*m + 3");
        let p = parse_polynomial("-1/2*v^3*w1 + 5/3").unwrap();
        assert_eq!(p.to_string(), "-1/2*v^3*w1 + 5/3");
    }

    #[test]
    fn parentheses_and_division() {
        let p = parse_polynomial("3*(m - 1)*(m - 2)*(3*m^2 - 3*m - 11)/2").unwrap();
        assert_eq!(p.evaluate(&[("m", 3.into())]).unwrap(), 21.into());
        let p = parse_polynomial("-(a + b)^2").unwrap();
        assert_eq!(p, parse_polynomial("-a^2 - 2*a*b - b^2").unwrap());
    }

    #[test]
    fn errors_carry_position() {
        assert!(matches!(
            parse_polynomial("3*m +"),
            Err(Error::Parse { pos: 5, .. })
        ));
        assert!(matches!(
            parse_polynomial("m / m"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_polynomial("m / 0"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_polynomial("m ^ x"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_polynomial("m $ 2"),
            Err(Error::Parse { pos: 2, .. })
        ));
        assert!(matches!(parse_polynomial("(m"), Err(Error::Parse { .. })));
        assert!(matches!(parse_polynomial("m m"), Err(Error::Parse { .. })));
    }

    #[test]
    fn parse_in_context() {
        let p = parse_in("w1 + v", &["v", "w1", "w2"]).unwrap();
        assert_eq!(p.variables(), ["v", "w1", "w2"]);
        assert_eq!(p.to_string(), "v + w1");
        assert!(parse_in("e", &["v"]).is_err());
    }
}
