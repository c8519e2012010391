//! Text format for polynomials.
//!
//! Grammar (whitespace ignored, byte offsets reported in errors):
//!
//! ```text
//! expr   := ['-'] term (('+'|'-') term)*
//! term   := factor ('*'? factor)*          juxtaposition multiplies
//! factor := integer | integer '/' integer | var | var '^' integer | '(' expr ')'
//! ```
//!
//! Variables are the ring's declared names, matched longest-first, so `wxz`
//! reads as `w*x*z` when the ring has single-letter names. Exponents are
//! decimal nonnegative integers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::poly::{Coeff, Polynomial};
use crate::ring::Ring;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("unknown variable at byte {offset}")]
    UnknownVariable { offset: usize },
    #[error("negative exponent at byte {offset}")]
    NegativeExponent { offset: usize },
    #[error("zero denominator at byte {offset}")]
    ZeroDenominator { offset: usize },
    #[error("malformed input at byte {offset}: {expected}")]
    Malformed { offset: usize, expected: &'static str },
}

struct Parser<'a> {
    ring: &'a Ring,
    text: &'a str,
    pos: usize,
}

pub fn parse_polynomial(text: &str, ring: &Ring) -> Result<Polynomial, ParseError> {
    let mut p = Parser { ring, text, pos: 0 };
    p.skip_ws();
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos < p.text.len() {
        return Err(ParseError::Malformed {
            offset: p.pos,
            expected: "end of input or '+'/'-'",
        });
    }
    Ok(poly)
}

impl<'a> Parser<'a> {
    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn bump(&mut self) {
        if let Some(c) = self.peek() {
            self.pos += c.len_utf8();
        }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.bump();
            } else {
                break;
            }
        }
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut negate = false;
        if self.peek() == Some('-') {
            negate = true;
            self.bump();
            self.skip_ws();
        } else if self.peek() == Some('+') {
            self.bump();
            self.skip_ws();
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            self.skip_ws();
            match self.peek() {
                Some('+') => {
                    self.bump();
                    self.skip_ws();
                    let t = self.term()?;
                    acc = acc.checked_add(&t).expect("same ring");
                }
                Some('-') => {
                    self.bump();
                    self.skip_ws();
                    let t = self.term()?;
                    acc = acc.checked_sub(&t).expect("same ring");
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('*') => {
                    self.bump();
                    self.skip_ws();
                    let f = self.factor()?;
                    acc = acc.checked_mul(&f).expect("same ring");
                }
                Some(c) if c == '(' || c.is_ascii_digit() || self.var_at(self.pos).is_some() => {
                    let f = self.factor()?;
                    acc = acc.checked_mul(&f).expect("same ring");
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.bump();
                self.skip_ws();
                let inner = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(')') {
                    return Err(ParseError::Malformed {
                        offset: self.pos,
                        expected: "closing ')'",
                    });
                }
                self.bump();
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let numer = self.integer()?;
                if self.peek() == Some('/') {
                    self.bump();
                    let den_offset = self.pos;
                    match self.peek() {
                        Some(d) if d.is_ascii_digit() => {
                            let denom = self.integer()?;
                            if denom.is_zero() {
                                return Err(ParseError::ZeroDenominator { offset: den_offset });
                            }
                            Ok(Polynomial::constant(
                                self.ring,
                                BigRational::new(numer, denom),
                            ))
                        }
                        _ => Err(ParseError::Malformed {
                            offset: den_offset,
                            expected: "denominator digits",
                        }),
                    }
                } else {
                    Ok(Polynomial::constant(self.ring, Coeff::from_integer(numer)))
                }
            }
            Some(_) => {
                if let Some((idx, len)) = self.var_at(self.pos) {
                    self.pos += len;
                    let mut exp: u32 = 1;
                    if self.peek() == Some('^') {
                        self.bump();
                        let exp_offset = self.pos;
                        match self.peek() {
                            Some('-') => {
                                return Err(ParseError::NegativeExponent { offset: exp_offset })
                            }
                            Some(d) if d.is_ascii_digit() => {
                                let e = self.integer()?;
                                exp = u32::try_from(&e).map_err(|_| ParseError::Malformed {
                                    offset: exp_offset,
                                    expected: "exponent that fits in 32 bits",
                                })?;
                            }
                            _ => {
                                return Err(ParseError::Malformed {
                                    offset: exp_offset,
                                    expected: "exponent digits",
                                })
                            }
                        }
                    }
                    let n = self.ring.num_vars();
                    let mut exps = vec![0u32; n];
                    exps[idx] = exp;
                    Ok(Polynomial::term(
                        self.ring,
                        Coeff::from_integer(BigInt::from(1)),
                        crate::ring::Monomial::from_exps(exps),
                    ))
                } else {
                    Err(ParseError::UnknownVariable { offset: self.pos })
                }
            }
            None => Err(ParseError::Malformed {
                offset: self.pos,
                expected: "a factor",
            }),
        }
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        if self.pos == start {
            return Err(ParseError::Malformed {
                offset: start,
                expected: "digits",
            });
        }
        Ok(self.text[start..self.pos]
            .parse::<BigInt>()
            .expect("digits parse"))
    }

    /// Longest declared variable name starting at `at`; returns (index, byte length).
    fn var_at(&self, at: usize) -> Option<(usize, usize)> {
        let rest = &self.text[at..];
        let mut best: Option<(usize, usize)> = None;
        for (i, name) in self.ring.vars().iter().enumerate() {
            if rest.starts_with(name.as_str()) {
                match best {
                    Some((_, blen)) if blen >= name.len() => {}
                    _ => best = Some((i, name.len())),
                }
            }
        }
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::coeff_ratio;
    use crate::ring::{Monomial, RingSpec};

    fn ring() -> Ring {
        RingSpec::degrevlex(vec!["x", "y", "z", "w"]).unwrap()
    }

    #[test]
    fn parses_fermat_quadric() {
        let r = ring();
        let f = parse_polynomial("x^2+y^2+z^2+w^2", &r).unwrap();
        assert_eq!(f.num_terms(), 4);
        assert_eq!(f.homogeneity(), Some(crate::poly::Homogeneity::Degree(2)));
    }

    #[test]
    fn parses_zero() {
        let r = ring();
        assert!(parse_polynomial("0", &r).unwrap().is_zero());
        assert!(parse_polynomial("x - x", &r).unwrap().is_zero());
    }

    #[test]
    fn juxtaposition_multiplies() {
        let r = ring();
        let f = parse_polynomial("wxz+y^3", &r).unwrap();
        assert_eq!(f.num_terms(), 2);
        assert_eq!(
            f.leading_monomial().unwrap(),
            &Monomial::from_exps([0, 3, 0, 0])
        );
        assert_eq!(
            parse_polynomial("2x", &r).unwrap(),
            parse_polynomial("x+x", &r).unwrap()
        );
        assert_eq!(
            parse_polynomial("x^2y", &r).unwrap(),
            parse_polynomial("x*x*y", &r).unwrap()
        );
    }

    #[test]
    fn parses_rationals_and_parens() {
        let r = ring();
        let f = parse_polynomial("1/2x + (x + y)(x - y)", &r).unwrap();
        let half_x = parse_polynomial("x", &r).unwrap().scale(&coeff_ratio(1, 2));
        let expect = parse_polynomial("x^2-y^2", &r)
            .unwrap()
            .checked_add(&half_x)
            .unwrap();
        assert_eq!(f, expect);
    }

    #[test]
    fn leading_minus() {
        let r = ring();
        assert_eq!(
            parse_polynomial("-x+y", &r).unwrap(),
            parse_polynomial("y-x", &r).unwrap()
        );
        assert_eq!(
            parse_polynomial("-2xy", &r).unwrap(),
            parse_polynomial("0-2xy", &r).unwrap()
        );
    }

    #[test]
    fn error_offsets() {
        let r = ring();
        assert_eq!(
            parse_polynomial("x+q", &r).unwrap_err(),
            ParseError::UnknownVariable { offset: 2 }
        );
        assert_eq!(
            parse_polynomial("x^-2", &r).unwrap_err(),
            ParseError::NegativeExponent { offset: 2 }
        );
        assert_eq!(
            parse_polynomial("1/0x", &r).unwrap_err(),
            ParseError::ZeroDenominator { offset: 2 }
        );
        assert!(matches!(
            parse_polynomial("x+", &r).unwrap_err(),
            ParseError::Malformed { offset: 2, .. }
        ));
        assert!(matches!(
            parse_polynomial("(x+y", &r).unwrap_err(),
            ParseError::Malformed { offset: 4, .. }
        ));
        assert!(matches!(
            parse_polynomial("x/2", &r).unwrap_err(),
            ParseError::Malformed { offset: 1, .. }
        ));
    }

    #[test]
    fn format_parse_round_trip() {
        let r = ring();
        for s in [
            "x^2+y^2+z^2+w^2",
            "wxz+(z+w)y^2+x^3+x^2y+xy^2+y^3",
            "-3x^2y+1/2z^3-w",
            "0",
            "7",
        ] {
            let f = parse_polynomial(s, &r).unwrap();
            let text = f.format();
            let g = parse_polynomial(&text, &r).unwrap();
            assert_eq!(f, g, "round trip through `{}`", text);
            assert_eq!(text, g.format(), "format is idempotent");
        }
    }

    #[test]
    fn longest_variable_name_wins() {
        let r = RingSpec::degrevlex(vec!["a", "b", "ab"]).unwrap();
        let f = parse_polynomial("ab", &r).unwrap();
        assert_eq!(
            f.leading_monomial().unwrap(),
            &Monomial::from_exps([0, 0, 1])
        );
        let g = parse_polynomial("a b", &r).unwrap();
        assert_eq!(
            g.leading_monomial().unwrap(),
            &Monomial::from_exps([1, 1, 0])
        );
    }
}
