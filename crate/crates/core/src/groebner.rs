//! Buchberger's algorithm and multivariate division over Q.
//!
//! The pair queue uses the sugar strategy (pairs of lowest sugar degree
//! first, ties broken by creation indices), with Buchberger's coprime-lcm
//! and chain criteria to discard useless pairs. Elements are made monic at
//! insertion and the returned basis is reduced, so output is canonical for a
//! fixed input sequence. Inputs need not be homogeneous (radical membership
//! feeds inhomogeneous ideals through this code).

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};


use thiserror::Error;

use crate::poly::{Coeff, Polynomial};
use crate::ring::{Monomial, Ring};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroebnerError {
    #[error("operands live in different rings (or under different orders)")]
    RingMismatch,
    #[error("s-polynomial of a zero polynomial")]
    ZeroInput,
}

/// A reduced Groebner basis: monic elements with pairwise distinct leading
/// monomials, no term of any element divisible by another's leading monomial,
/// sorted ascending by leading monomial.
#[derive(Debug, Clone, PartialEq)]
pub struct GroebnerBasis {
    ring: Ring,
    elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|g| g.leading_monomial().expect("basis elements nonzero").clone())
            .collect()
    }

    /// True when the basis generates the unit ideal.
    pub fn contains_unit(&self) -> bool {
        self.elements
            .iter()
            .any(|g| g.leading_monomial().map_or(false, Monomial::is_one))
    }
}

/// Remainder of multivariate division of `p` by the basis: no term of the
/// result is divisible by any leading monomial of `gb`, and `p - result`
/// lies in the ideal.
pub fn normal_form(p: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial, GroebnerError> {
    if p.ring() != &gb.ring {
        return Err(GroebnerError::RingMismatch);
    }
    let (_, r) = divide(p, &gb.elements);
    debug_assert!(division_contract_holds(p, &gb.elements, &r));
    Ok(r)
}

/// Full division: returns `(quotients, remainder)` with
/// `p = sum_i quotients[i] * reducers[i] + remainder` and no remainder term
/// divisible by any reducer's leading monomial. Reducers are tried in order,
/// which makes the result deterministic.
pub fn divide(p: &Polynomial, reducers: &[Polynomial]) -> (Vec<Polynomial>, Polynomial) {
    let ring = p.ring().clone();
    let mut quotients = vec![Polynomial::zero(&ring); reducers.len()];
    let mut remainder_terms: Vec<(Monomial, Coeff)> = Vec::new();
    let mut h = p.clone();
    'outer: while let Some((lm, lc)) = h.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
        for (i, g) in reducers.iter().enumerate() {
            let glm = match g.leading_monomial() {
                Some(m) => m,
                None => continue,
            };
            if let Some(q) = lm.div(glm) {
                let (_, glc) = g.leading_term().expect("nonzero");
                let factor = &lc / glc;
                quotients[i] = quotients[i]
                    .checked_add(&Polynomial::term(&ring, factor.clone(), q.clone()))
                    .expect("same ring");
                h = h
                    .checked_sub(&g.mul_term(&factor, &q))
                    .expect("same ring");
                continue 'outer;
            }
        }
        // irreducible leading term moves to the remainder
        remainder_terms.push((lm.clone(), lc.clone()));
        h = h
            .checked_sub(&Polynomial::term(&ring, lc, lm))
            .expect("same ring");
    }
    (quotients, Polynomial::from_terms(&ring, remainder_terms))
}

/// Both halves of the division contract, used as a test-build assertion.
pub fn division_contract_holds(p: &Polynomial, reducers: &[Polynomial], r: &Polynomial) -> bool {
    let leads: Vec<&Monomial> = reducers
        .iter()
        .filter_map(|g| g.leading_monomial())
        .collect();
    let irreducible = r
        .terms()
        .iter()
        .all(|(m, _)| !leads.iter().any(|lm| lm.divides(m)));
    let (q, r2) = divide(p, reducers);
    let mut recomposed = r2;
    for (qi, gi) in q.iter().zip(reducers) {
        recomposed = recomposed
            .checked_add(&qi.checked_mul(gi).expect("same ring"))
            .expect("same ring");
    }
    irreducible && &recomposed == p
}

/// `(lcm/lt(p))*p - (lcm/lt(q))*q`; the leading terms cancel.
pub fn s_polynomial(p: &Polynomial, q: &Polynomial) -> Result<Polynomial, GroebnerError> {
    if p.is_zero() || q.is_zero() {
        return Err(GroebnerError::ZeroInput);
    }
    if p.ring() != q.ring() {
        return Err(GroebnerError::RingMismatch);
    }
    let (pm, pc) = p.leading_term().expect("nonzero");
    let (qm, qc) = q.leading_term().expect("nonzero");
    let lcm = pm.lcm(qm);
    let left = p.mul_term(&pc.recip(), &lcm.div(pm).expect("lcm divisible"));
    let right = q.mul_term(&qc.recip(), &lcm.div(qm).expect("lcm divisible"));
    Ok(left.checked_sub(&right).expect("same ring"))
}

#[derive(PartialEq, Eq)]
struct Pair {
    sugar: u32,
    i: usize,
    j: usize,
    lcm: Monomial,
}

impl Ord for Pair {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.sugar, self.i, self.j).cmp(&(other.sugar, other.i, other.j))
    }
}

impl PartialOrd for Pair {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Reduced Groebner basis of the ideal generated by `gens` under the ring's
/// order. Deterministic for a fixed generator sequence. Zero generators are
/// discarded; an empty ideal yields an empty basis.
pub fn buchberger(ring: &Ring, gens: &[Polynomial]) -> Result<GroebnerBasis, GroebnerError> {
    for g in gens {
        if g.ring() != ring {
            return Err(GroebnerError::RingMismatch);
        }
    }
    // working basis with per-element sugar degree
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut sugar: Vec<u32> = Vec::new();
    let mut queue: BinaryHeap<Reverse<Pair>> = BinaryHeap::new();
    let mut treated: HashSet<(usize, usize)> = HashSet::new();

    let insert = |p: Polynomial,
                      s: u32,
                      basis: &mut Vec<Polynomial>,
                      sugar: &mut Vec<u32>,
                      queue: &mut BinaryHeap<Reverse<Pair>>| {
        let p = p.monic();
        let lm = p.leading_monomial().expect("nonzero").clone();
        let k = basis.len();
        for (i, g) in basis.iter().enumerate() {
            let gl = g.leading_monomial().expect("nonzero");
            let lcm = gl.lcm(&lm);
            let pair_sugar = (sugar[i] + (lcm.degree() - gl.degree()))
                .max(s + (lcm.degree() - lm.degree()));
            queue.push(Reverse(Pair {
                sugar: pair_sugar,
                i,
                j: k,
                lcm,
            }));
        }
        basis.push(p);
        sugar.push(s);
    };

    for g in gens {
        if g.is_zero() {
            continue;
        }
        let s = g.degree().expect("nonzero");
        insert(g.clone(), s, &mut basis, &mut sugar, &mut queue);
    }

    while let Some(Reverse(pair)) = queue.pop() {
        let key = (pair.i, pair.j);
        if treated.contains(&key) {
            continue;
        }
        treated.insert(key);
        let gi = &basis[pair.i];
        let gj = &basis[pair.j];
        let li = gi.leading_monomial().expect("nonzero");
        let lj = gj.leading_monomial().expect("nonzero");
        // coprime criterion
        if li.coprime(lj) {
            continue;
        }
        // chain criterion: some other basis element divides the lcm and both
        // of its pairs with this one were already treated
        let chained = (0..basis.len()).any(|k| {
            if k == pair.i || k == pair.j {
                return false;
            }
            let lk = basis[k].leading_monomial().expect("nonzero");
            lk.divides(&pair.lcm)
                && treated.contains(&(pair.i.min(k), pair.i.max(k)))
                && treated.contains(&(pair.j.min(k), pair.j.max(k)))
        });
        if chained {
            continue;
        }
        let s_poly = s_polynomial(gi, gj)?;
        let (q, nf) = divide(&s_poly, &basis);
        if nf.is_zero() {
            continue;
        }
        // sugar of the reduced S-polynomial
        let mut s = pair.sugar;
        for (qi, gk) in q.iter().zip(sugar.iter()) {
            if let Some(d) = qi.degree() {
                s = s.max(d + gk);
            }
        }
        insert(nf, s, &mut basis, &mut sugar, &mut queue);
    }

    Ok(reduce_basis(ring, basis))
}

/// Inter-reduce: keep a minimal set of leading monomials, fully reduce each
/// tail against the others, normalize monic, sort ascending by leading
/// monomial.
fn reduce_basis(ring: &Ring, mut basis: Vec<Polynomial>) -> GroebnerBasis {
    basis.retain(|g| !g.is_zero());
    // minimal generating set of the leading-term ideal; on ties keep the
    // earliest element
    let mut keep: Vec<bool> = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        let lmi = basis[i].leading_monomial().expect("nonzero").clone();
        for (j, g) in basis.iter().enumerate() {
            if i == j || !keep[j] {
                continue;
            }
            let lmj = g.leading_monomial().expect("nonzero");
            if lmj.divides(&lmi) && (lmj != &lmi || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<Polynomial> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect();
    let mut reduced: Vec<Polynomial> = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter_map(|(j, g)| (j != i).then(|| g.clone()))
            .collect();
        let (_, nf) = divide(&minimal[i], &others);
        debug_assert!(!nf.is_zero(), "minimal basis element reduced to zero");
        reduced.push(nf.monic());
    }
    reduced.sort_by(|a, b| {
        ring.cmp_monomials(
            a.leading_monomial().expect("nonzero"),
            b.leading_monomial().expect("nonzero"),
        )
    });
    GroebnerBasis {
        ring: ring.clone(),
        elements: reduced,
    }
}

/// Minimal generating set of the leading-term ideal: the leading monomials of
/// the reduced basis, ascending in the ring order.
pub fn leading_term_ideal(gb: &GroebnerBasis) -> Vec<Monomial> {
    gb.leading_monomials()
}

/// Buchberger certificate plus reducedness, for test builds: every
/// S-polynomial of basis pairs reduces to zero, every element is monic, and
/// no term of any element is divisible by another element's leading monomial.
pub fn is_reduced_groebner_basis(gb: &GroebnerBasis) -> bool {
    let n = gb.elements.len();
    for g in &gb.elements {
        match g.leading_term() {
            None => return false,
            Some((_, c)) => {
                if c != &Coeff::from_integer(1.into()) {
                    return false;
                }
            }
        }
    }
    for i in 0..n {
        for (j, other) in gb.elements.iter().enumerate() {
            if i == j {
                continue;
            }
            let lm = other.leading_monomial().expect("nonzero");
            if gb.elements[i].terms().iter().any(|(m, _)| lm.divides(m)) {
                return false;
            }
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            let s = s_polynomial(&gb.elements[i], &gb.elements[j]).expect("nonzero");
            let (_, nf) = divide(&s, &gb.elements);
            if !nf.is_zero() {
                return false;
            }
        }
    }
    true
}
