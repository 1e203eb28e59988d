//! Text grammar for Laurent polynomials in `x`, `y`, `z`.
//!
//! ```text
//! poly   := [sign] term (sign term)*
//! term   := factor (('*' | '/') factor)*
//! factor := atom ['^' exponent]
//! atom   := integer | 'x' | 'y' | 'z' | '(' [sign] term ')'
//! exponent := [sign] integer | '(' [sign] integer ')'
//! ```
//!
//! Whitespace is insignificant. `1/(x*y*z)` and `2/3*x^2*y^-1` are both terms.

use alloc::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::LaurentPolynomial;
use crate::error::{Error, Result};

#[derive(Clone)]
struct Term {
    coeff: BigRational,
    exps: [i64; 3],
}

impl Term {
    fn one() -> Self {
        Term {
            coeff: BigRational::one(),
            exps: [0; 3],
        }
    }

    fn mul(mut self, other: &Term) -> Term {
        self.coeff *= &other.coeff;
        for k in 0..3 {
            self.exps[k] += other.exps[k];
        }
        self
    }

    fn pow(&self, e: i64, at: usize) -> Result<Term> {
        if e < 0 && self.coeff.is_zero() {
            return Err(err(at, "division by zero"));
        }
        let mut c = num_traits::pow(self.coeff.clone(), e.unsigned_abs() as usize);
        if e < 0 {
            c = c.recip();
        }
        Ok(Term {
            coeff: c,
            exps: self.exps.map(|x| x * e),
        })
    }
}

fn err(position: usize, message: &'static str) -> Error {
    Error::Parse { position, message }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
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

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(err(start, "expected integer"));
        }
        let digits = core::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        BigInt::parse_bytes(digits.as_bytes(), 10).ok_or_else(|| err(start, "invalid integer"))
    }

    fn exponent(&mut self) -> Result<i64> {
        let paren = self.eat(b'(');
        let negative = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let at = self.pos;
        let v: i64 = self
            .integer()?
            .try_into()
            .map_err(|_| err(at, "exponent out of range"))?;
        if paren && !self.eat(b')') {
            return Err(err(self.pos, "expected ')'"));
        }
        Ok(if negative { -v } else { v })
    }

    fn atom(&mut self) -> Result<Term> {
        self.skip_ws();
        let at = self.pos;
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let negative = self.eat(b'-');
                if !negative {
                    self.eat(b'+');
                }
                let mut t = self.term()?;
                if negative {
                    t.coeff = -t.coeff;
                }
                if !self.eat(b')') {
                    return Err(err(self.pos, "expected ')'"));
                }
                Ok(t)
            }
            Some(c @ (b'x' | b'y' | b'z')) => {
                self.pos += 1;
                let mut t = Term::one();
                t.exps[(c - b'x') as usize] = 1;
                Ok(t)
            }
            Some(c) if c.is_ascii_digit() => Ok(Term {
                coeff: BigRational::from_integer(self.integer()?),
                exps: [0; 3],
            }),
            Some(_) => Err(err(at, "unexpected character")),
            None => Err(err(at, "unexpected end of input")),
        }
    }

    fn factor(&mut self) -> Result<Term> {
        let t = self.atom()?;
        if self.eat(b'^') {
            let at = self.pos;
            let e = self.exponent()?;
            return t.pow(e, at);
        }
        Ok(t)
    }

    fn term(&mut self) -> Result<Term> {
        let mut t = self.factor()?;
        loop {
            if self.eat(b'*') {
                let f = self.factor()?;
                t = t.mul(&f);
            } else if self.eat(b'/') {
                let at = self.pos;
                let f = self.factor()?.pow(-1, at)?;
                t = t.mul(&f);
            } else {
                return Ok(t);
            }
        }
    }
}

/// Parses a Laurent polynomial; like terms are combined and zeros dropped.
pub fn parse_laurent(text: &str) -> Result<LaurentPolynomial> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut terms: BTreeMap<[i64; 3], BigRational> = BTreeMap::new();
    let mut first = true;
    loop {
        let negative = if p.eat(b'-') {
            true
        } else if p.eat(b'+') || first {
            false
        } else if p.peek().is_none() {
            break;
        } else {
            return Err(err(p.pos, "expected '+' or '-'"));
        };
        first = false;
        let t = p.term()?;
        let c = if negative { -t.coeff } else { t.coeff };
        *terms.entry(t.exps).or_insert_with(BigRational::zero) += c;
    }
    terms.retain(|_, c| !c.is_zero());
    Ok(LaurentPolynomial { terms })
}
