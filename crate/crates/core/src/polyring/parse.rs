//! Recursive-descent parser for the plain-text polynomial grammar.
//!
//! ```text
//! expr   := sign? term (sign term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' digits)?
//! atom   := digits ('/' digits)? | name | '(' expr ')'
//! ```
//!
//! Parentheses are accepted on input; output never needs them.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Polynomial, Ring};
use crate::error::{Error, Result};
use crate::exactmat::Scalar;

/// Values the grammar can build: constants, named atoms, ring operations.
pub(crate) trait Expr: Sized {
    fn constant(&self, c: Scalar) -> Self;
    fn atom(&self, name: &str) -> Option<Self>;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn power(&self, k: u32) -> Self;
}

impl Expr for Polynomial {
    fn constant(&self, c: Scalar) -> Self {
        Polynomial::constant(self.ring(), c)
    }
    fn atom(&self, name: &str) -> Option<Self> {
        self.ring().index_of(name).map(|i| Polynomial::var(self.ring(), i))
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn power(&self, k: u32) -> Self {
        self.pow(k)
    }
}

struct Parser<'a, T> {
    zero: &'a T,
    chars: Vec<char>,
    pos: usize,
}

pub(super) fn parse_polynomial(ring: &Arc<Ring>, text: &str) -> Result<Polynomial> {
    parse_expr(&Polynomial::zero(ring), text)
}

/// Parse `text` with `zero` supplying constants and atoms.
pub(crate) fn parse_expr<T: Expr>(zero: &T, text: &str) -> Result<T> {
    let mut p = Parser {
        zero,
        chars: text.chars().collect(),
        pos: 0,
    };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.error(format!("unexpected `{}`", p.chars[p.pos])));
    }
    Ok(out)
}

impl<T: Expr> Parser<'_, T> {
    fn error(&self, message: String) -> Error {
        Error::Parse {
            line: 1,
            column: self.pos + 1,
            message,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<T> {
        let mut acc = self.zero.constant(Scalar::zero());
        let mut first = true;
        loop {
            let sign = match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    1
                }
                Some('-') => {
                    self.pos += 1;
                    -1
                }
                _ if first => 1,
                _ => break,
            };
            first = false;
            let t = self.term()?;
            acc = if sign > 0 { acc.plus(&t) } else { acc.minus(&t) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<T> {
        let mut acc = self.factor()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            let f = self.factor()?;
            acc = acc.times(&f);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<T> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let digits = self.digits();
            let k: u32 = digits.parse().map_err(|_| Error::Parse {
                line: 1,
                column: start + 1,
                message: "expected exponent".into(),
            })?;
            return Ok(base.power(k));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn atom(&mut self) -> Result<T> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected `)`".into()));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let num: BigInt = self.digits().parse().expect("digits");
                let mut den = BigInt::one();
                if self.peek() == Some('/') {
                    self.pos += 1;
                    self.skip_ws();
                    let d = self.digits();
                    if d.is_empty() {
                        return Err(self.error("expected denominator".into()));
                    }
                    den = d.parse().expect("digits");
                    if den.is_zero() {
                        return Err(self.error("zero denominator".into()));
                    }
                }
                Ok(self.zero.constant(Scalar::new(num, den)))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.pos;
                while self.pos < self.chars.len()
                    && (self.chars[self.pos].is_alphanumeric() || self.chars[self.pos] == '_')
                {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                self.zero.atom(&name).ok_or_else(|| Error::Parse {
                    line: 1,
                    column: start + 1,
                    message: format!("unknown variable `{name}`"),
                })
            }
            Some(c) => Err(self.error(format!("unexpected `{c}`"))),
            None => Err(self.error("unexpected end of input".into())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reports_columns() {
        let r = Ring::numbered("a", 3);
        let e = r.parse("a1 + a7").unwrap_err();
        assert_eq!(
            e,
            Error::Parse {
                line: 1,
                column: 6,
                message: "unknown variable `a7`".into()
            }
        );
        assert!(matches!(r.parse("a1 +"), Err(Error::Parse { column: 5, .. })));
        assert!(matches!(r.parse("(a1"), Err(Error::Parse { .. })));
        assert!(matches!(r.parse("a1 a2"), Err(Error::Parse { column: 4, .. })));
    }

    #[test]
    fn whitespace_is_insignificant() {
        let r = Ring::numbered("a", 3);
        assert_eq!(
            r.parse(" 3 / 4 * a1 ^ 2-a2").unwrap(),
            r.parse("3/4*a1^2-a2").unwrap()
        );
    }
}
