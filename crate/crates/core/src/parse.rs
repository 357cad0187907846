//! Recursive-descent parser for the polynomial text grammar.
//!
//! ```text
//! expr   := sign? term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := atom ('^' integer)?
//! atom   := integer | variable | '(' expr ')' | ('+' | '-') atom
//! ```
//!
//! Division is only allowed by nonzero constants, which is how rational
//! coefficients such as `1/2*x` are written.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::poly::{Polynomial, Ring};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a Ring,
}

pub fn parse_poly(text: &str, ring: &Ring) -> Result<Polynomial> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        ring,
    };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(out)
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
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

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = Polynomial::zero(self.ring);
        let mut first = true;
        loop {
            let neg = match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    false
                }
                Some(b'-') => {
                    self.pos += 1;
                    true
                }
                _ if first => false,
                _ => break,
            };
            first = false;
            let t = self.term()?;
            acc = if neg { acc.sub(&t) } else { acc.add(&t) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = acc.mul(&f);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let f = self.factor()?;
                    if !f.is_constant() || f.is_zero() {
                        return Err(Error::Syntax {
                            pos: at,
                            msg: "division only by nonzero constants".into(),
                        });
                    }
                    let c = f.terms()[0].1.clone();
                    acc = acc.scale(&c.recip());
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let k = self.integer()?;
            let k: u32 = k
                .try_into()
                .map_err(|_| self.err("exponent too large"))?;
            return Ok(base.pow(k));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits parse"))
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(self.atom()?.neg())
            }
            Some(b'+') => {
                self.pos += 1;
                self.atom()
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(Polynomial::constant(self.ring, BigRational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii ident");
                match self.ring.var_index(name) {
                    Some(i) => Ok(Polynomial::var(self.ring, i)),
                    None => Err(Error::UndeclaredVariable {
                        name: name.to_string(),
                        pos: start,
                    }),
                }
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn errors_carry_positions() {
        let r = Ring::new(&["x", "y"]);
        assert_eq!(
            parse_poly("x + z", &r),
            Err(Error::UndeclaredVariable {
                name: "z".into(),
                pos: 4
            })
        );
        assert!(matches!(parse_poly("x +* y", &r), Err(Error::Syntax { pos: 3, .. })));
        assert!(matches!(parse_poly("(x + y", &r), Err(Error::Syntax { .. })));
        assert!(matches!(parse_poly("x / y", &r), Err(Error::Syntax { .. })));
        assert!(matches!(parse_poly("", &r), Err(Error::Syntax { .. })));
    }

    #[test]
    fn nested_and_rational() {
        let r = Ring::new(&["x", "y"]);
        let a = parse_poly("(x+y)^2 - 2*x*y", &r).unwrap();
        assert_eq!(a, parse_poly("x^2 + y^2", &r).unwrap());
        let b = parse_poly("3/4*x - -y", &r).unwrap();
        assert_eq!(b.to_string(), "3/4*x + y");
    }
}
