//! Text input for scalars and Laurent polynomials.
//!
//! Accepts sums, products, quotients, integer powers and parentheses over
//! integers, parameter names (`alpha` or `α`, …) and `z1, z2, …`. Quotients
//! by anything other than a single term are only allowed for scalars.

use num_bigint::BigInt;

use super::laurent::LaurentPoly;
use super::param::Param;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Parses a rational function in the parameters.
pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let v = Parser::new(s, 0)?.parse_all()?;
    Ok(v.as_constant().expect("no z variables in a scalar"))
}

/// Parses a Laurent polynomial in `z1 … zN`.
pub fn parse_laurent(s: &str, nvars: usize) -> Result<LaurentPoly> {
    Parser::new(s, nvars)?.parse_all()
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Name(String),
    Op(char),
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
    nvars: usize,
}

fn err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        if ch.is_whitespace() {
            i += 1;
        } else if ch.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push(Tok::Int(digits.parse().map_err(|_| err("bad integer"))?));
        } else if ch.is_alphabetic() || ch == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Name(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(ch) {
            out.push(Tok::Op(ch));
            i += 1;
        } else if ch == '−' {
            out.push(Tok::Op('-'));
            i += 1;
        } else {
            return Err(err(format!("unexpected character {ch:?}")));
        }
    }
    Ok(out)
}

impl Parser {
    fn new(s: &str, nvars: usize) -> Result<Self> {
        Ok(Parser { toks: tokenize(s)?, pos: 0, nvars })
    }

    fn parse_all(&mut self) -> Result<LaurentPoly> {
        if self.toks.is_empty() {
            return Err(err("empty expression"));
        }
        let v = self.expr()?;
        if self.pos != self.toks.len() {
            return Err(err(format!("unexpected token {:?}", self.toks[self.pos])));
        }
        Ok(v)
    }

    fn peek_op(&self) -> Option<char> {
        match self.toks.get(self.pos) {
            Some(Tok::Op(c)) => Some(*c),
            _ => None,
        }
    }

    fn expr(&mut self) -> Result<LaurentPoly> {
        let mut acc = self.term()?;
        while let Some(op @ ('+' | '-')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == '+' { acc.add(&rhs)? } else { acc.sub(&rhs)? };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<LaurentPoly> {
        let mut acc = self.unary()?;
        while let Some(op @ ('*' | '/')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.unary()?;
            acc = if op == '*' { acc.mul(&rhs)? } else { divide(&acc, &rhs)? };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<LaurentPoly> {
        match self.peek_op() {
            Some('-') => {
                self.pos += 1;
                Ok(self.unary()?.neg())
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<LaurentPoly> {
        let base = self.atom()?;
        if self.peek_op() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        let mut negative = false;
        while let Some(op @ ('-' | '+')) = self.peek_op() {
            negative ^= op == '-';
            self.pos += 1;
        }
        let e = match self.toks.get(self.pos) {
            Some(Tok::Int(k)) => {
                self.pos += 1;
                u32::try_from(k).map_err(|_| err("exponent too large"))?
            }
            Some(Tok::Op('(')) => {
                // allow "x^(-2)"
                self.pos += 1;
                let mut neg_inner = false;
                while let Some(op @ ('-' | '+')) = self.peek_op() {
                    neg_inner ^= op == '-';
                    self.pos += 1;
                }
                let k = match self.toks.get(self.pos) {
                    Some(Tok::Int(k)) => u32::try_from(k).map_err(|_| err("exponent too large"))?,
                    _ => return Err(err("expected integer exponent")),
                };
                self.pos += 1;
                if self.peek_op() != Some(')') {
                    return Err(err("expected ')'"));
                }
                self.pos += 1;
                negative ^= neg_inner;
                k
            }
            _ => return Err(err("expected integer exponent")),
        };
        if negative {
            let one = LaurentPoly::one(self.nvars);
            divide(&one, &base.pow(e))
        } else {
            Ok(base.pow(e))
        }
    }

    fn atom(&mut self) -> Result<LaurentPoly> {
        let tok = self.toks.get(self.pos).cloned().ok_or_else(|| err("unexpected end of input"))?;
        self.pos += 1;
        match tok {
            Tok::Int(k) => Ok(LaurentPoly::constant(
                self.nvars,
                Scalar::from_rational(&num_rational::BigRational::from_integer(k)),
            )),
            Tok::Name(name) => {
                if let Some(p) = Param::from_name(&name) {
                    return Ok(LaurentPoly::constant(self.nvars, Scalar::param(p)));
                }
                if let Some(idx) = name.strip_prefix('z').and_then(|d| d.parse::<usize>().ok()) {
                    if idx >= 1 && idx <= self.nvars {
                        return Ok(LaurentPoly::var(self.nvars, idx));
                    }
                    return Err(err(format!("variable {name} out of range (N = {})", self.nvars)));
                }
                Err(err(format!("unknown symbol {name:?}")))
            }
            Tok::Op('(') => {
                let v = self.expr()?;
                if self.peek_op() != Some(')') {
                    return Err(err("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Tok::Op(c) => Err(err(format!("unexpected {c:?}"))),
        }
    }
}

fn divide(num: &LaurentPoly, den: &LaurentPoly) -> Result<LaurentPoly> {
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if let Some(c) = den.as_constant() {
        return Ok(num.scale(&c.inv()?));
    }
    if den.len() == 1 {
        return num.divide_exact(den);
    }
    num.divide_exact(den)
        .map_err(|_| err("division by a non-monomial Laurent polynomial"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_roundtrip() {
        let x = parse_scalar("(t - 1)*(alpha + delta)/(alpha*beta - gamma*delta)").unwrap();
        let y = parse_scalar(&x.to_string()).unwrap();
        assert_eq!(x, y);
        assert_eq!(
            x.to_string(),
            "(alpha*t + delta*t - alpha - delta)/(alpha*beta - gamma*delta)"
        );
        assert_eq!(parse_scalar("α*β").unwrap(), parse_scalar("alpha*beta").unwrap());
        assert_eq!(parse_scalar("q^-2*q^2").unwrap(), Scalar::one());
        assert_eq!(parse_scalar("3/6").unwrap(), Scalar::from_ratio(1, 2).unwrap());
    }

    #[test]
    fn laurent_parse() {
        let f = parse_laurent("z1^2*z2^-1 - q*z1^(-1) + 3", 2).unwrap();
        assert_eq!(parse_laurent(&f.to_string(), 2).unwrap(), f);
        assert!(parse_laurent("z3", 2).is_err());
        assert!(parse_scalar("z1").is_err());
    }

    #[test]
    fn errors() {
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("(a").is_err());
        assert!(parse_scalar("a $ b").is_err());
        assert!(parse_scalar("").is_err());
    }
}
