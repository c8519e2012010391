//! Hilbert-Poincare series of graded quotients `S/I`.
//!
//! The series of `S/I` equals the series of `S/LT(I)`, so everything reduces
//! to a monomial-ideal numerator computation: a pivot-variable recursion
//! `N(I) = N(I + (x)) + t * N(I : x)` with base cases for at most one
//! generator and for sets of pure powers (Koszul). The numerator `P(t)` sits
//! over `(1-t)^{n+1}`; cancelling all `(1-t)` factors yields the reduced
//! numerator `Q(t)` whose pole order is the Krull dimension.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::ideal::{is_zero_dimensional, IdealHandle};
use crate::ring::Monomial;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HilbertError {
    #[error("quotient is not finite-dimensional")]
    InfiniteDimensional,
    #[error("coefficient does not fit in i64")]
    CoefficientOverflow,
}

/// Dense integer polynomial in one variable `t`, arbitrary precision.
#[derive(Clone, PartialEq, Eq)]
pub struct IntPoly {
    /// coefficients, index = exponent, no trailing zeros
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        IntPoly {
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The monomial `c * t^k`.
    pub fn term(c: i64, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::from(c);
        Self::from_coeffs(coeffs)
    }

    /// `1 - t^k` (the Koszul factor of a degree-`k` generator); `k = 0`
    /// yields the zero polynomial.
    pub fn one_minus_t_pow(k: usize) -> Self {
        if k == 0 {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[0] = BigInt::one();
        coeffs[k] = -BigInt::one();
        IntPoly { coeffs }
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs_i64(&self) -> Result<Vec<i64>, HilbertError> {
        self.coeffs
            .iter()
            .map(|c| i64::try_from(c).map_err(|_| HilbertError::CoefficientOverflow))
            .collect()
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        Self::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        Self::from_coeffs(coeffs)
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::from_coeffs(coeffs)
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn pow(&self, mut e: u32) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Exact quotient by `(1 - t)`; `None` when `1` is not a root.
    pub fn div_one_minus_t(&self) -> Option<IntPoly> {
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        if !self.eval_at_one().is_zero() {
            return None;
        }
        // p = (1-t) q  =>  q_k = p_k + q_{k-1}
        let mut q = vec![BigInt::zero(); self.coeffs.len() - 1];
        let mut carry = BigInt::zero();
        for k in 0..self.coeffs.len() - 1 {
            carry = &self.coeffs[k] + &carry;
            q[k] = carry.clone();
        }
        debug_assert_eq!(self.coeffs.last().unwrap(), &-carry);
        Some(IntPoly::from_coeffs(q))
    }

    /// Power-series coefficients of `self / (1-t)^pole` up to degree `k_max`,
    /// by iterated prefix sums.
    pub fn expand_over_pole(&self, pole: u32, k_max: usize) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); k_max + 1];
        for (i, c) in self.coeffs.iter().enumerate().take(k_max + 1) {
            out[i] = c.clone();
        }
        for _ in 0..pole {
            for k in 1..=k_max {
                let prev = out[k - 1].clone();
                out[k] += prev;
            }
        }
        out
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                f.write_str(if c.is_negative() { "-" } else { "+" })?;
            }
            match k {
                0 => write!(f, "{}", mag)?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{}*", mag)?;
                    }
                    if k == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{}", k)?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({})", self)
    }
}

/// Drop generators divisible by another generator and deduplicate.
fn minimalize(gens: &mut Vec<Monomial>) {
    gens.sort_by_key(|m| (m.degree(), m.exps().to_vec()));
    gens.dedup();
    let snapshot = gens.clone();
    gens.retain(|m| {
        !snapshot
            .iter()
            .any(|other| other != m && other.divides(m))
    });
}

/// Numerator `P(t)` of the Hilbert series of `S/(gens)` over `(1-t)^{n+1}`
/// for a monomial ideal. Generators need not be minimal.
pub fn hilbert_numerator_monomial(gens: &[Monomial], num_vars: usize) -> IntPoly {
    let mut gens: Vec<Monomial> = gens.to_vec();
    numerator_rec(&mut gens, num_vars)
}

fn numerator_rec(gens: &mut Vec<Monomial>, num_vars: usize) -> IntPoly {
    minimalize(gens);
    if gens.is_empty() {
        return IntPoly::one();
    }
    if gens.iter().any(Monomial::is_one) {
        // unit ideal
        return IntPoly::zero();
    }
    if gens.len() == 1 {
        return IntPoly::one_minus_t_pow(gens[0].degree() as usize);
    }
    if gens
        .iter()
        .all(|m| (0..num_vars).any(|i| m.is_pure_power_of(i)))
    {
        // regular sequence of pure powers: product of Koszul factors
        let mut acc = IntPoly::one();
        for m in gens.iter() {
            acc = acc.mul(&IntPoly::one_minus_t_pow(m.degree() as usize));
        }
        return acc;
    }
    // pivot: the most frequent variable, ties to the smallest index
    let pivot = (0..num_vars)
        .max_by_key(|&i| {
            (
                gens.iter().filter(|m| m.exp(i) > 0).count(),
                usize::MAX - i,
            )
        })
        .expect("ring has variables");
    // I + (x_pivot): generators free of the pivot, plus the pivot itself
    let mut sum_gens: Vec<Monomial> = gens
        .iter()
        .filter(|m| m.exp(pivot) == 0)
        .cloned()
        .collect();
    sum_gens.push(Monomial::var(num_vars, pivot));
    // I : x_pivot: divide each generator by the pivot where possible
    let mut quot_gens: Vec<Monomial> = gens
        .iter()
        .map(|m| {
            if m.exp(pivot) > 0 {
                m.div(&Monomial::var(num_vars, pivot)).expect("divisible")
            } else {
                m.clone()
            }
        })
        .collect();
    let a = numerator_rec(&mut sum_gens, num_vars);
    let b = numerator_rec(&mut quot_gens, num_vars);
    a.add(&b.shift(1))
}

/// A Hilbert-Poincare series in both rational forms:
/// `P(t)/(1-t)^{n+1} = Q(t)/(1-t)^{d}` with all `(1-t)` factors cancelled
/// from `Q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    numerator: IntPoly,
    pole_order: u32,
    reduced_numerator: IntPoly,
    reduced_pole_order: u32,
}

impl HilbertSeries {
    pub fn from_numerator(numerator: IntPoly, pole_order: u32) -> Self {
        let mut q = numerator.clone();
        let mut pole = pole_order;
        if q.is_zero() {
            pole = 0;
        } else {
            while pole > 0 {
                match q.div_one_minus_t() {
                    Some(next) => {
                        q = next;
                        pole -= 1;
                    }
                    None => break,
                }
            }
        }
        HilbertSeries {
            numerator,
            pole_order,
            reduced_numerator: q,
            reduced_pole_order: pole,
        }
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.numerator
    }

    pub fn pole_order(&self) -> u32 {
        self.pole_order
    }

    pub fn reduced_numerator(&self) -> &IntPoly {
        &self.reduced_numerator
    }

    /// Pole order of the reduced form; the Krull dimension of the quotient.
    pub fn reduced_pole_order(&self) -> u32 {
        self.reduced_pole_order
    }

    /// Finite iff the reduced form has no pole left.
    pub fn is_finite(&self) -> bool {
        self.reduced_pole_order == 0
    }

    /// Eventually-constant value of the coefficient sequence, when there is
    /// one: `0` for finite series, `Q(1)` when exactly one pole remains.
    pub fn tail(&self) -> Option<BigInt> {
        match self.reduced_pole_order {
            0 => Some(BigInt::zero()),
            1 => Some(self.reduced_numerator.eval_at_one()),
            _ => None,
        }
    }
}

/// Integer coefficient sequence of a series expansion, with an optional
/// eventually-constant tail value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffSequence {
    pub values: Vec<i64>,
    pub tail: Option<i64>,
}

impl CoeffSequence {
    pub fn sum(&self) -> i64 {
        self.values.iter().sum()
    }
}

/// Hilbert series of `S/I` via the leading-term ideal of the reduced basis.
pub fn hilbert_series(ideal: &IdealHandle) -> HilbertSeries {
    let ring = ideal.ring();
    let lts = crate::groebner::leading_term_ideal(ideal.groebner());
    let numerator = hilbert_numerator_monomial(&lts, ring.num_vars());
    HilbertSeries::from_numerator(numerator, ring.num_vars() as u32)
}

/// Coefficients of the series expansion up to degree `k_max`.
pub fn series_coefficients(hs: &HilbertSeries, k_max: usize) -> Result<CoeffSequence, HilbertError> {
    let values = hs
        .numerator
        .expand_over_pole(hs.pole_order, k_max)
        .iter()
        .map(|c| i64::try_from(c).map_err(|_| HilbertError::CoefficientOverflow))
        .collect::<Result<Vec<_>, _>>()?;
    let tail = match hs.tail() {
        None => None,
        Some(t) => Some(i64::try_from(&t).map_err(|_| HilbertError::CoefficientOverflow)?),
    };
    Ok(CoeffSequence { values, tail })
}

/// The full finite coefficient list of a zero-dimensional quotient. For a
/// finite series the reduced numerator *is* the series, so its coefficients
/// are returned directly.
pub fn finite_hp(ideal: &IdealHandle) -> Result<CoeffSequence, HilbertError> {
    if !is_zero_dimensional(ideal) {
        return Err(HilbertError::InfiniteDimensional);
    }
    let hs = hilbert_series(ideal);
    debug_assert!(hs.is_finite());
    let values = hs.reduced_numerator.coeffs_i64()?;
    debug_assert!(values.iter().all(|&v| v >= 0), "dimensions are nonnegative");
    Ok(CoeffSequence {
        values,
        tail: Some(0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Monomial;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::from_exps(exps.iter().copied())
    }

    #[test]
    fn numerator_base_cases() {
        assert_eq!(hilbert_numerator_monomial(&[], 4), IntPoly::one());
        // {x^2, y^2} in 2 vars: (1-t^2)^2 = 1 - 2t^2 + t^4
        assert_eq!(
            hilbert_numerator_monomial(&[m(&[2, 0]), m(&[0, 2])], 2),
            IntPoly::from_i64(&[1, 0, -2, 0, 1])
        );
        // {x,y,z,w}: (1-t)^4
        assert_eq!(
            hilbert_numerator_monomial(
                &[m(&[1, 0, 0, 0]), m(&[0, 1, 0, 0]), m(&[0, 0, 1, 0]), m(&[0, 0, 0, 1])],
                4
            ),
            IntPoly::one_minus_t_pow(1).pow(4)
        );
    }

    #[test]
    fn numerator_nonminimal_input_and_mixed_ideal() {
        // x^2 divides x^2y, so the latter is dropped
        assert_eq!(
            hilbert_numerator_monomial(&[m(&[2, 0]), m(&[2, 1])], 2),
            IntPoly::from_i64(&[1, 0, -1])
        );
        // (x^2, xy) in 2 vars: series 1,2,1,1,1,... = (1+t-t^2)/(1-t)
        let p = hilbert_numerator_monomial(&[m(&[2, 0]), m(&[1, 1])], 2);
        let expect = IntPoly::from_i64(&[1, 1, -1]).mul(&IntPoly::one_minus_t_pow(1));
        assert_eq!(p, expect);
    }

    #[test]
    fn unit_ideal_numerator_is_zero() {
        assert!(hilbert_numerator_monomial(&[m(&[0, 0])], 2).is_zero());
    }

    #[test]
    fn series_reduction_and_tail() {
        // P = (1-t)^2 over pole 2 reduces to 1: the series 1, 0, 0, ...
        let hs = HilbertSeries::from_numerator(IntPoly::one_minus_t_pow(1).pow(2), 2);
        assert_eq!(hs.reduced_numerator(), &IntPoly::one());
        assert_eq!(hs.reduced_pole_order(), 0);
        assert!(hs.is_finite());
        let seq = series_coefficients(&hs, 5).unwrap();
        assert_eq!(seq.values, vec![1, 0, 0, 0, 0, 0]);
        assert_eq!(seq.tail, Some(0));

        // a curve-like series: (1+t)/(1-t), tail 2
        let hs = HilbertSeries::from_numerator(
            IntPoly::from_i64(&[1, 1]).mul(&IntPoly::one_minus_t_pow(1).pow(3)),
            4,
        );
        assert_eq!(hs.reduced_pole_order(), 1);
        assert_eq!(hs.tail(), Some(BigInt::from(2)));
        let seq = series_coefficients(&hs, 4).unwrap();
        assert_eq!(seq.values, vec![1, 2, 2, 2, 2]);
        assert_eq!(seq.tail, Some(2));
    }

    #[test]
    fn identity_numerator_vs_reduced() {
        let p = IntPoly::from_i64(&[1, 0, -1, -6, 4, 9, -5, -4, 1, 1]);
        let hs = HilbertSeries::from_numerator(p.clone(), 4);
        let back = hs
            .reduced_numerator()
            .mul(&IntPoly::one_minus_t_pow(1).pow(hs.pole_order() - hs.reduced_pole_order()));
        assert_eq!(back, p);
    }

    #[test]
    fn display_formatting() {
        assert_eq!(IntPoly::from_i64(&[1, 0, -2, 0, 1]).to_string(), "1-2*t^2+t^4");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(IntPoly::from_i64(&[0, 1]).to_string(), "t");
    }
}
