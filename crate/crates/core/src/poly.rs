//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Terms are kept sorted strictly descending in the ring's monomial order
//! with no zero coefficients, so the leading term is always `terms[0]` and
//! structural equality is semantic equality.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::ring::{Monomial, Ring};

/// Exact coefficient type: arbitrary-precision rational, always in lowest terms.
pub type Coeff = BigRational;

pub fn coeff_int(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

pub fn coeff_ratio(num: i64, den: i64) -> Coeff {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("variable index {index} out of range for a ring with {num_vars} variables")]
    IndexOutOfRange { index: usize, num_vars: usize },
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("polynomial is zero")]
    ZeroPolynomial,
}

/// Homogeneity of a polynomial. The zero polynomial is homogeneous of every
/// degree and gets its own marker so generator pipelines need no special case.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Homogeneity {
    /// The zero polynomial.
    EveryDegree,
    Degree(u32),
}

#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Ring,
    /// `(monomial, coefficient)` pairs, strictly descending, no zeros.
    terms: Vec<(Monomial, Coeff)>,
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, Coeff::one())
    }

    pub fn constant(ring: &Ring, c: Coeff) -> Self {
        let mut terms = Vec::new();
        if !c.is_zero() {
            terms.push((Monomial::one(ring.num_vars()), c));
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn variable(ring: &Ring, i: usize) -> Result<Self, PolyError> {
        if i >= ring.num_vars() {
            return Err(PolyError::IndexOutOfRange {
                index: i,
                num_vars: ring.num_vars(),
            });
        }
        Ok(Polynomial {
            ring: ring.clone(),
            terms: vec![(Monomial::var(ring.num_vars(), i), Coeff::one())],
        })
    }

    pub fn term(ring: &Ring, c: Coeff, m: Monomial) -> Self {
        assert_eq!(m.num_vars(), ring.num_vars());
        let mut terms = Vec::new();
        if !c.is_zero() {
            terms.push((m, c));
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Build from arbitrary `(monomial, coefficient)` pairs; sorts, merges
    /// duplicates, and drops zeros.
    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (Monomial, Coeff)>) -> Self {
        let mut terms: Vec<(Monomial, Coeff)> = terms.into_iter().collect();
        terms.sort_by(|a, b| ring.cmp_monomials(&b.0, &a.0));
        let mut merged: Vec<(Monomial, Coeff)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            debug_assert_eq!(m.num_vars(), ring.num_vars());
            match merged.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => merged.push((m, c)),
            }
        }
        merged.retain(|(_, c)| !c.is_zero());
        Polynomial {
            ring: ring.clone(),
            terms: merged,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn same_ring(&self, other: &Polynomial) -> bool {
        std::sync::Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Coeff)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    /// Total degree (maximum over terms); `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn coefficient(&self, m: &Monomial) -> Coeff {
        self.terms
            .iter()
            .find(|(tm, _)| tm == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Coeff::zero)
    }

    fn merge(&self, other: &Polynomial, negate_other: bool) -> Polynomial {
        debug_assert!(self.same_ring(other));
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match self.ring.cmp_monomials(ma, mb) {
                Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate_other { -cb.clone() } else { cb.clone() };
                    out.push((mb.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other {
                        ca - cb
                    } else {
                        ca + cb
                    };
                    if !c.is_zero() {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        for (mb, cb) in &other.terms[j..] {
            let c = if negate_other { -cb.clone() } else { cb.clone() };
            out.push((mb.clone(), c));
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        if !self.same_ring(other) {
            return Err(PolyError::RingMismatch);
        }
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        if !self.same_ring(other) {
            return Err(PolyError::RingMismatch);
        }
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        if !self.same_ring(other) {
            return Err(PolyError::RingMismatch);
        }
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        // accumulate q-shifted copies; term counts here are small
        let mut acc = Polynomial::zero(&self.ring);
        for (m, c) in &other.terms {
            acc = acc.merge(&self.mul_term(c, m), false);
        }
        Ok(acc)
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, tc)| (m.clone(), tc * c))
                .collect(),
        }
    }

    /// Multiply by the single term `c * m`. Monomial multiplication preserves
    /// the (degree-compatible) term order, so no re-sort is needed.
    pub fn mul_term(&self, c: &Coeff, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(tm, tc)| (tm.mul(m), tc * c))
                .collect(),
        }
    }

    /// Divide every coefficient by the leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.leading_term() {
            None => self.clone(),
            Some((_, lc)) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
        }
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn partial_derivative(&self, i: usize) -> Result<Polynomial, PolyError> {
        if i >= self.ring.num_vars() {
            return Err(PolyError::IndexOutOfRange {
                index: i,
                num_vars: self.ring.num_vars(),
            });
        }
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exp(i);
            if e == 0 {
                continue;
            }
            let mut exps: Vec<u32> = m.exps().to_vec();
            exps[i] -= 1;
            terms.push((Monomial::from_exps(exps), c * coeff_int(e as i64)));
        }
        Ok(Polynomial::from_terms(&self.ring, terms))
    }

    /// All partial derivatives, in variable order.
    pub fn gradient(&self) -> Vec<Polynomial> {
        (0..self.ring.num_vars())
            .map(|i| self.partial_derivative(i).expect("index in range"))
            .collect()
    }

    /// `Some(Homogeneity)` when every term has the same total degree.
    pub fn homogeneity(&self) -> Option<Homogeneity> {
        let mut degs = self.terms.iter().map(|(m, _)| m.degree());
        match degs.next() {
            None => Some(Homogeneity::EveryDegree),
            Some(d) => {
                if degs.all(|e| e == d) {
                    Some(Homogeneity::Degree(d))
                } else {
                    None
                }
            }
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneity().is_some()
    }

    /// `sum_i x_i * dp/dx_i - r * p` for `p` homogeneous of degree `r`; zero
    /// by the Euler identity, so a useful self-test of the derivative code.
    pub fn euler_residual(&self) -> Result<Polynomial, PolyError> {
        let r = match self.homogeneity() {
            Some(Homogeneity::Degree(r)) => r,
            Some(Homogeneity::EveryDegree) => 0,
            None => return Err(PolyError::NotHomogeneous),
        };
        let mut acc = Polynomial::zero(&self.ring);
        for i in 0..self.ring.num_vars() {
            let xi = Polynomial::variable(&self.ring, i)?;
            let di = self.partial_derivative(i)?;
            acc = acc.merge(&xi.checked_mul(&di)?, false);
        }
        Ok(acc.merge(&self.scale(&coeff_int(r as i64)), true))
    }

    /// Substitute 0 for variable `i`; terms containing it vanish.
    pub fn substitute_zero(&self, i: usize) -> Result<Polynomial, PolyError> {
        if i >= self.ring.num_vars() {
            return Err(PolyError::IndexOutOfRange {
                index: i,
                num_vars: self.ring.num_vars(),
            });
        }
        let terms: Vec<_> = self
            .terms
            .iter()
            .filter(|(m, _)| m.exp(i) == 0)
            .cloned()
            .collect();
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    /// Re-embed into `target`, which must contain this ring's variables as a
    /// prefix (exponents of the extra variables are zero).
    pub fn embed(&self, target: &Ring) -> Polynomial {
        assert!(target.num_vars() >= self.ring.num_vars());
        assert_eq!(
            &target.vars()[..self.ring.num_vars()],
            self.ring.vars(),
            "target ring must extend the source ring"
        );
        let n = target.num_vars();
        let terms = self.terms.iter().map(|(m, c)| {
            let mut exps = vec![0u32; n];
            exps[..m.num_vars()].copy_from_slice(m.exps());
            (Monomial::from_exps(exps), c.clone())
        });
        Polynomial::from_terms(target, terms)
    }

    /// Canonical text form; parses back to the same polynomial.
    pub fn format(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            let mono = m.format(&self.ring);
            if m.is_one() {
                out.push_str(&format_coeff(&abs));
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format_coeff(&abs));
                out.push('*');
                out.push_str(&mono);
            }
        }
        out
    }
}

fn format_coeff(c: &Coeff) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self.format())
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect("ring mismatch")
            }
        }
        impl std::ops::$trait for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$checked(&rhs).expect("ring mismatch")
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}
