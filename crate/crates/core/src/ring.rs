//! Graded polynomial ring descriptions and monomials.
//!
//! A [`RingSpec`] names the variables of `Q[x_0,...,x_n]` and fixes a
//! degree-compatible monomial order. [`Monomial`] is an exponent vector of
//! that length. Everything downstream (polynomials, Groebner bases, Hilbert
//! series) is parameterized by a shared `Arc<RingSpec>`.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use smallvec::SmallVec;
use thiserror::Error;

/// Degree-compatible monomial orders. Both compare total degree first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Degree reverse lexicographic: on equal degree, the monomial with the
    /// smaller exponent in the last position where they differ is larger.
    DegRevLex,
    /// Degree lexicographic: on equal degree, the monomial with the larger
    /// exponent in the first position where they differ is larger.
    DegLex,
}

impl MonomialOrder {
    /// Compare two exponent vectors of equal length.
    pub fn cmp_exps(self, a: &[u32], b: &[u32]) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        let da: u64 = a.iter().map(|&e| e as u64).sum();
        let db: u64 = b.iter().map(|&e| e as u64).sum();
        match da.cmp(&db) {
            Ordering::Equal => {}
            other => return other,
        }
        match self {
            MonomialOrder::DegRevLex => {
                for i in (0..a.len()).rev() {
                    match a[i].cmp(&b[i]) {
                        Ordering::Equal => {}
                        // smaller trailing exponent wins
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::DegLex => {
                for i in 0..a.len() {
                    match a[i].cmp(&b[i]) {
                        Ordering::Equal => {}
                        other => return other,
                    }
                }
                Ordering::Equal
            }
        }
    }

    pub fn cmp_monomials(self, a: &Monomial, b: &Monomial) -> Ordering {
        self.cmp_exps(a.exps(), b.exps())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RingError {
    #[error("a ring needs at least one variable")]
    NoVariables,
    #[error("variable name may not be empty")]
    EmptyName,
    #[error("duplicate variable name `{0}`")]
    DuplicateName(String),
}

/// A named graded polynomial ring `Q[x_0,...,x_n]` with a monomial order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingSpec {
    vars: Vec<String>,
    order: MonomialOrder,
}

/// Shared handle to a ring; all values carry one of these.
pub type Ring = Arc<RingSpec>;

impl RingSpec {
    pub fn new<S: Into<String>>(
        vars: impl IntoIterator<Item = S>,
        order: MonomialOrder,
    ) -> Result<Ring, RingError> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        if vars.is_empty() {
            return Err(RingError::NoVariables);
        }
        for (i, v) in vars.iter().enumerate() {
            if v.is_empty() {
                return Err(RingError::EmptyName);
            }
            if vars[..i].contains(v) {
                return Err(RingError::DuplicateName(v.clone()));
            }
        }
        Ok(Arc::new(RingSpec { vars, order }))
    }

    /// Convenience constructor with the default (degrevlex) order.
    pub fn degrevlex<S: Into<String>>(vars: impl IntoIterator<Item = S>) -> Result<Ring, RingError> {
        Self::new(vars, MonomialOrder::DegRevLex)
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.vars[i]
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// The same variables under a different order.
    pub fn with_order(&self, order: MonomialOrder) -> Ring {
        Arc::new(RingSpec {
            vars: self.vars.clone(),
            order,
        })
    }

    /// Extend by one fresh variable (used for radical membership). The new
    /// name gets underscores appended until it is distinct.
    pub fn extended(&self, name: &str) -> (Ring, usize) {
        let mut fresh = name.to_string();
        while self.vars.contains(&fresh) {
            fresh.push('_');
        }
        let mut vars = self.vars.clone();
        vars.push(fresh);
        let idx = vars.len() - 1;
        (
            Arc::new(RingSpec {
                vars,
                order: self.order,
            }),
            idx,
        )
    }

    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp_monomials(a, b)
    }
}

type Exps = SmallVec<[u32; 6]>;

/// A monomial: exponent vector of length `ring.num_vars()`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exps,
}

impl Monomial {
    pub fn one(num_vars: usize) -> Self {
        Monomial {
            exps: smallvec::smallvec![0; num_vars],
        }
    }

    pub fn var(num_vars: usize, i: usize) -> Self {
        assert!(i < num_vars);
        let mut exps: Exps = smallvec::smallvec![0; num_vars];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn from_exps(exps: impl IntoIterator<Item = u32>) -> Self {
        Monomial {
            exps: exps.into_iter().collect(),
        }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / other`, if divisible.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if other.divides(self) {
            Some(Monomial {
                exps: self
                    .exps
                    .iter()
                    .zip(&other.exps)
                    .map(|(a, b)| a - b)
                    .collect(),
            })
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    /// True when the supports are disjoint, i.e. `lcm == self * other`.
    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// True when only variable `i` has a nonzero exponent (or all are zero).
    pub fn is_pure_power_of(&self, i: usize) -> bool {
        self.exps
            .iter()
            .enumerate()
            .all(|(k, &e)| k == i || e == 0)
    }

    /// Set the exponent of variable `i` to zero.
    pub fn without_var(&self, i: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps[i] = 0;
        Monomial { exps }
    }

    /// Render with the ring's variable names, `*`-separated, e.g. `x^2*y`.
    pub fn format(&self, ring: &RingSpec) -> String {
        let mut parts: Vec<String> = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(ring.var_name(i).to_string()),
                _ => parts.push(format!("{}^{}", ring.var_name(i), e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fake: Vec<String> = (0..self.exps.len()).map(|i| format!("x{}", i)).collect();
        let ring = RingSpec {
            vars: fake,
            order: MonomialOrder::DegRevLex,
        };
        write!(f, "{}", self.format(&ring))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::from_exps(exps.iter().copied())
    }

    #[test]
    fn ring_rejects_bad_names() {
        assert_eq!(
            RingSpec::degrevlex(Vec::<String>::new()).unwrap_err(),
            RingError::NoVariables
        );
        assert_eq!(
            RingSpec::degrevlex(vec!["x", ""]).unwrap_err(),
            RingError::EmptyName
        );
        assert_eq!(
            RingSpec::degrevlex(vec!["x", "x"]).unwrap_err(),
            RingError::DuplicateName("x".into())
        );
    }

    #[test]
    fn degrevlex_prefers_smaller_trailing_exponent() {
        // xzw = (1,0,1,1) vs y^3 = (0,3,0,0): rightmost difference is w,
        // where y^3 has the smaller exponent, so y^3 is larger.
        let a = m(&[1, 0, 1, 1]);
        let b = m(&[0, 3, 0, 0]);
        assert_eq!(
            MonomialOrder::DegRevLex.cmp_monomials(&a, &b),
            Ordering::Less
        );
        // classic chain in 3 vars: x^2 > xy > y^2 > xz > yz > z^2
        let chain = [
            m(&[2, 0, 0]),
            m(&[1, 1, 0]),
            m(&[0, 2, 0]),
            m(&[1, 0, 1]),
            m(&[0, 1, 1]),
            m(&[0, 0, 2]),
        ];
        for pair in chain.windows(2) {
            assert_eq!(
                MonomialOrder::DegRevLex.cmp_monomials(&pair[0], &pair[1]),
                Ordering::Greater
            );
        }
    }

    #[test]
    fn deglex_differs_from_degrevlex() {
        // y^2 vs xz in 3 vars: deglex has xz > y^2, degrevlex has y^2 > xz.
        let y2 = m(&[0, 2, 0]);
        let xz = m(&[1, 0, 1]);
        assert_eq!(MonomialOrder::DegLex.cmp_monomials(&xz, &y2), Ordering::Greater);
        assert_eq!(
            MonomialOrder::DegRevLex.cmp_monomials(&y2, &xz),
            Ordering::Greater
        );
    }

    #[test]
    fn degree_dominates_both_orders() {
        let a = m(&[3, 0, 0, 0]);
        let b = m(&[1, 1, 0, 0]);
        for order in [MonomialOrder::DegRevLex, MonomialOrder::DegLex] {
            assert_eq!(order.cmp_monomials(&a, &b), Ordering::Greater);
        }
    }

    #[test]
    fn monomial_arithmetic() {
        let a = m(&[2, 1, 0]);
        let b = m(&[1, 0, 3]);
        assert_eq!(a.mul(&b), m(&[3, 1, 3]));
        assert_eq!(a.lcm(&b), m(&[2, 1, 3]));
        assert!(!a.divides(&b));
        assert!(m(&[1, 0, 0]).divides(&a));
        assert_eq!(a.div(&m(&[1, 1, 0])), Some(m(&[1, 0, 0])));
        assert_eq!(a.div(&b), None);
        assert!(m(&[0, 2, 0]).coprime(&m(&[1, 0, 1])));
        assert!(!a.coprime(&b));
        assert!(m(&[0, 3, 0]).is_pure_power_of(1));
        assert!(!m(&[1, 3, 0]).is_pure_power_of(1));
        assert_eq!(a.without_var(0), m(&[0, 1, 0]));
    }

    #[test]
    fn extended_ring_avoids_collisions() {
        let ring = RingSpec::degrevlex(vec!["x", "t"]).unwrap();
        let (ext, idx) = ring.extended("t");
        assert_eq!(idx, 2);
        assert_eq!(ext.var_name(2), "t_");
    }
}
