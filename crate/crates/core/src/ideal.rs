//! The ideals and graded algebras attached to a pair of hypersurfaces.
//!
//! For homogeneous `f` (with `V(f)` smooth) and `g`, the objects of interest
//! are the jacobian ideal `J_f`, the ideal `m2(f,g)` of 2x2 minors of the
//! jacobian matrix of the map `(f,g)`, and the sums
//! `I(f,g) = (f) + m2(f,g)` and `J(f,g) = (f) + (g) + m2(f,g)`, whose
//! quotients are the graded algebras `A(f,g)` and `B(f,g)`. Finiteness of
//! those quotients characterizes smoothness of the complete intersection
//! `V(f) ∩ V(g)`.

use std::sync::OnceLock;

use thiserror::Error;

use crate::groebner::{buchberger, leading_term_ideal, normal_form, GroebnerBasis, GroebnerError};
use crate::poly::{Homogeneity, PolyError, Polynomial};
use crate::ring::{Monomial, Ring};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IdealError {
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("input polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("input polynomial is zero")]
    ZeroPolynomial,
    #[error("quotient is not finite-dimensional")]
    InfiniteDimensional,
    #[error("V(f) is not smooth")]
    NotSmooth,
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// A finitely generated ideal with a lazily computed reduced Groebner basis.
/// The cache is single-assignment: concurrent readers trigger at most one
/// computation and share the immutable result.
#[derive(Debug)]
pub struct IdealHandle {
    ring: Ring,
    generators: Vec<Polynomial>,
    gb: OnceLock<GroebnerBasis>,
}

impl Clone for IdealHandle {
    fn clone(&self) -> Self {
        let gb = OnceLock::new();
        if let Some(b) = self.gb.get() {
            let _ = gb.set(b.clone());
        }
        IdealHandle {
            ring: self.ring.clone(),
            generators: self.generators.clone(),
            gb,
        }
    }
}

impl IdealHandle {
    /// Build from generators; zero generators are dropped.
    pub fn new(
        ring: &Ring,
        generators: impl IntoIterator<Item = Polynomial>,
    ) -> Result<Self, IdealError> {
        let mut gens = Vec::new();
        for g in generators {
            if g.ring() != ring {
                return Err(IdealError::RingMismatch);
            }
            if !g.is_zero() {
                gens.push(g);
            }
        }
        Ok(IdealHandle {
            ring: ring.clone(),
            generators: gens,
            gb: OnceLock::new(),
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// The reduced Groebner basis, computed on first use.
    pub fn groebner(&self) -> &GroebnerBasis {
        self.gb
            .get_or_init(|| buchberger(&self.ring, &self.generators).expect("ring checked at construction"))
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }
}

/// `p` lies in the ideal iff its normal form vanishes.
pub fn ideal_membership(p: &Polynomial, ideal: &IdealHandle) -> Result<bool, IdealError> {
    if p.ring() != ideal.ring() {
        return Err(IdealError::RingMismatch);
    }
    Ok(normal_form(p, ideal.groebner())?.is_zero())
}

/// Two ideals coincide iff each generator of each reduces to zero against
/// the other's basis.
pub fn ideal_equal(a: &IdealHandle, b: &IdealHandle) -> Result<bool, IdealError> {
    if a.ring() != b.ring() {
        return Err(IdealError::RingMismatch);
    }
    for g in a.generators() {
        if !ideal_membership(g, b)? {
            return Ok(false);
        }
    }
    for g in b.generators() {
        if !ideal_membership(g, a)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn require_homogeneous(p: &Polynomial) -> Result<(), IdealError> {
    if p.is_homogeneous() {
        Ok(())
    } else {
        Err(IdealError::NotHomogeneous)
    }
}

/// The ideal spanned by all partial derivatives of `f`.
pub fn jacobian_ideal(f: &Polynomial) -> Result<IdealHandle, IdealError> {
    require_homogeneous(f)?;
    IdealHandle::new(f.ring(), f.gradient())
}

/// The ideal of 2x2 minors `f_i g_j - f_j g_i` (i < j) of the jacobian
/// matrix of the mapping `(f, g)`. Zero minors are dropped.
pub fn minors2(f: &Polynomial, g: &Polynomial) -> Result<IdealHandle, IdealError> {
    if f.ring() != g.ring() {
        return Err(IdealError::RingMismatch);
    }
    require_homogeneous(f)?;
    require_homogeneous(g)?;
    IdealHandle::new(f.ring(), minors2_generators(f, g))
}

fn minors2_generators(f: &Polynomial, g: &Polynomial) -> Vec<Polynomial> {
    let fd = f.gradient();
    let gd = g.gradient();
    let n = f.ring().num_vars();
    let mut out = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let m = fd[i]
                .checked_mul(&gd[j])
                .expect("same ring")
                .checked_sub(&fd[j].checked_mul(&gd[i]).expect("same ring"))
                .expect("same ring");
            if !m.is_zero() {
                out.push(m);
            }
        }
    }
    out
}

/// `I(f,g) = (f) + m2(f,g)`, the defining ideal of `A(f,g)`.
pub fn ideal_a(f: &Polynomial, g: &Polynomial) -> Result<IdealHandle, IdealError> {
    if f.ring() != g.ring() {
        return Err(IdealError::RingMismatch);
    }
    require_homogeneous(f)?;
    require_homogeneous(g)?;
    let mut gens = vec![f.clone()];
    gens.extend(minors2_generators(f, g));
    IdealHandle::new(f.ring(), gens)
}

/// `J(f,g) = (f) + (g) + m2(f,g)`, the defining ideal of `B(f,g)`.
pub fn ideal_b(f: &Polynomial, g: &Polynomial) -> Result<IdealHandle, IdealError> {
    if f.ring() != g.ring() {
        return Err(IdealError::RingMismatch);
    }
    require_homogeneous(f)?;
    require_homogeneous(g)?;
    let mut gens = vec![f.clone(), g.clone()];
    gens.extend(minors2_generators(f, g));
    IdealHandle::new(f.ring(), gens)
}

/// A homogeneous ideal is zero-dimensional (Artinian quotient) iff its
/// leading-term ideal contains a pure power of every variable.
pub fn is_zero_dimensional(ideal: &IdealHandle) -> bool {
    let gb = ideal.groebner();
    if gb.contains_unit() {
        return true;
    }
    let lts = leading_term_ideal(gb);
    (0..ideal.ring().num_vars()).all(|i| {
        lts.iter()
            .any(|m| !m.is_one() && m.is_pure_power_of(i))
    })
}

/// Number of standard monomials (the vector-space dimension of `S/I`).
pub fn quotient_dimension(ideal: &IdealHandle) -> Result<u64, IdealError> {
    let seq = crate::hilbert::finite_hp(ideal).map_err(|_| IdealError::InfiniteDimensional)?;
    Ok(seq.values.iter().map(|&v| v as u64).sum())
}

/// `V(f)` is smooth iff the Milnor algebra `S/J_f` is finite-dimensional
/// (for linear forms the jacobian ideal is the unit ideal).
pub fn is_smooth_hypersurface(f: &Polynomial) -> Result<bool, IdealError> {
    if f.is_zero() {
        return Err(IdealError::ZeroPolynomial);
    }
    let jac = jacobian_ideal(f)?;
    Ok(is_zero_dimensional(&jac))
}

/// Finiteness report for the pair of algebras attached to `(f, g)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompleteIntersectionReport {
    /// smooth complete intersection, decided via finiteness of `A(f,g)`
    pub ci: bool,
    pub dim_a_finite: bool,
    pub dim_b_finite: bool,
}

/// Decide whether `V(f) ∩ V(g)` is a smooth complete intersection. Requires
/// `V(f)` smooth; records finiteness of both algebras so the equivalence of
/// the two conditions can be asserted externally.
pub fn is_smooth_complete_intersection(
    f: &Polynomial,
    g: &Polynomial,
) -> Result<CompleteIntersectionReport, IdealError> {
    if !is_smooth_hypersurface(f)? {
        return Err(IdealError::NotSmooth);
    }
    require_homogeneous(g)?;
    let a = ideal_a(f, g)?;
    let b = ideal_b(f, g)?;
    let dim_a_finite = is_zero_dimensional(&a);
    let dim_b_finite = is_zero_dimensional(&b);
    Ok(CompleteIntersectionReport {
        ci: dim_a_finite,
        dim_a_finite,
        dim_b_finite,
    })
}

/// Radical membership via one extra variable: `h` lies in the radical of `I`
/// iff `1` lies in `I + (1 - t*h)` in the extended ring.
pub fn radical_membership(h: &Polynomial, ideal: &IdealHandle) -> Result<bool, IdealError> {
    if h.ring() != ideal.ring() {
        return Err(IdealError::RingMismatch);
    }
    if h.is_zero() {
        return Ok(true);
    }
    // cheap pre-check: membership implies radical membership
    if ideal_membership(h, ideal)? {
        return Ok(true);
    }
    let (ext, t_idx) = ideal.ring().extended("t");
    let t = Polynomial::variable(&ext, t_idx)?;
    let mut gens: Vec<Polynomial> = ideal.generators().iter().map(|g| g.embed(&ext)).collect();
    let one = Polynomial::one(&ext);
    gens.push(one.checked_sub(&t.checked_mul(&h.embed(&ext))?)?);
    let gb = buchberger(&ext, &gens)?;
    Ok(gb.contains_unit())
}

/// Radical equality tested generator-by-generator in both directions.
pub fn radical_equal(a: &IdealHandle, b: &IdealHandle) -> Result<bool, IdealError> {
    if a.ring() != b.ring() {
        return Err(IdealError::RingMismatch);
    }
    for g in a.generators() {
        if !radical_membership(g, b)? {
            return Ok(false);
        }
    }
    for g in b.generators() {
        if !radical_membership(g, a)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// For a homogeneous ideal the radical is the irrelevant maximal ideal
/// `(x_0,...,x_n)` exactly when the quotient is finite-dimensional, so this
/// avoids any radical computation.
pub fn radical_is_maximal(ideal: &IdealHandle) -> bool {
    is_zero_dimensional(ideal)
}

/// Which quotient a [`QuotientAlgebra`] is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AlgebraVariant {
    /// Milnor algebra `S/J_f`
    M,
    /// `A(f,g) = S/I(f,g)`
    A,
    /// `B(f,g) = S/J(f,g)`
    B,
}

impl AlgebraVariant {
    pub fn tag(self) -> &'static str {
        match self {
            AlgebraVariant::M => "M",
            AlgebraVariant::A => "A",
            AlgebraVariant::B => "B",
        }
    }
}

/// A graded quotient `S/I` tagged with which construction produced it.
#[derive(Debug, Clone)]
pub struct QuotientAlgebra {
    variant: AlgebraVariant,
    ideal: IdealHandle,
}

impl QuotientAlgebra {
    pub fn milnor(f: &Polynomial) -> Result<Self, IdealError> {
        Ok(QuotientAlgebra {
            variant: AlgebraVariant::M,
            ideal: jacobian_ideal(f)?,
        })
    }

    pub fn a(f: &Polynomial, g: &Polynomial) -> Result<Self, IdealError> {
        Ok(QuotientAlgebra {
            variant: AlgebraVariant::A,
            ideal: ideal_a(f, g)?,
        })
    }

    pub fn b(f: &Polynomial, g: &Polynomial) -> Result<Self, IdealError> {
        Ok(QuotientAlgebra {
            variant: AlgebraVariant::B,
            ideal: ideal_b(f, g)?,
        })
    }

    pub fn variant(&self) -> AlgebraVariant {
        self.variant
    }

    pub fn ideal(&self) -> &IdealHandle {
        &self.ideal
    }

    pub fn is_finite(&self) -> bool {
        is_zero_dimensional(&self.ideal)
    }

    /// Vector-space dimension, present exactly when finite.
    pub fn dimension(&self) -> Option<u64> {
        quotient_dimension(&self.ideal).ok()
    }
}

/// Degree of a homogeneous polynomial, treating zero as degree 0.
pub fn homogeneous_degree(p: &Polynomial) -> Result<u32, IdealError> {
    match p.homogeneity() {
        Some(Homogeneity::Degree(d)) => Ok(d),
        Some(Homogeneity::EveryDegree) => Ok(0),
        None => Err(IdealError::NotHomogeneous),
    }
}

/// Brute-force standard-monomial count in one degree, used as the
/// independent oracle for Hilbert-series coefficients.
pub fn standard_monomial_count(ideal: &IdealHandle, degree: u32) -> u64 {
    let lts = leading_term_ideal(ideal.groebner());
    let n = ideal.ring().num_vars();
    let mut count = 0u64;
    let mut exps = vec![0u32; n];
    enumerate_degree(&mut exps, 0, degree, &mut |e: &[u32]| {
        let m = Monomial::from_exps(e.iter().copied());
        if !lts.iter().any(|l| l.divides(&m)) {
            count += 1;
        }
    });
    count
}

fn enumerate_degree(exps: &mut Vec<u32>, at: usize, remaining: u32, visit: &mut impl FnMut(&[u32])) {
    if at + 1 == exps.len() {
        exps[at] = remaining;
        visit(exps);
        exps[at] = 0;
        return;
    }
    for e in 0..=remaining {
        exps[at] = e;
        enumerate_degree(exps, at + 1, remaining - e, visit);
    }
    exps[at] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::ring::RingSpec;

    fn ring() -> Ring {
        RingSpec::degrevlex(vec!["x", "y", "z", "w"]).unwrap()
    }

    fn p(r: &Ring, s: &str) -> Polynomial {
        parse_polynomial(s, r).unwrap()
    }

    #[test]
    fn jacobian_of_fermat_quadric() {
        let r = ring();
        let jac = jacobian_ideal(&p(&r, "x^2+y^2+z^2+w^2")).unwrap();
        assert_eq!(jac.generators().len(), 4);
        let coords = IdealHandle::new(&r, ["x", "y", "z", "w"].map(|s| p(&r, s))).unwrap();
        assert!(ideal_equal(&jac, &coords).unwrap());
    }

    #[test]
    fn jacobian_of_linear_form_is_unit() {
        let r = ring();
        let jac = jacobian_ideal(&p(&r, "x")).unwrap();
        assert!(jac.groebner().contains_unit());
        assert!(is_zero_dimensional(&jac));
        assert_eq!(quotient_dimension(&jac).unwrap(), 0);
    }

    #[test]
    fn jacobian_of_monomial() {
        let r = ring();
        let jac = jacobian_ideal(&p(&r, "xyw")).unwrap();
        let expect = IdealHandle::new(&r, ["yw", "xw", "xy"].map(|s| p(&r, s))).unwrap();
        assert!(ideal_equal(&jac, &expect).unwrap());
        assert_eq!(
            jacobian_ideal(&p(&r, "x^2+y")).unwrap_err(),
            IdealError::NotHomogeneous
        );
    }

    #[test]
    fn minors_of_coordinate_f() {
        // f = x: the minors are exactly the partials of g except d/dx
        let r = ring();
        let g = p(&r, "wxz+y^3");
        let m = minors2(&p(&r, "x"), &g).unwrap();
        let expect = IdealHandle::new(&r, ["3y^2", "wx", "xz"].map(|s| p(&r, s))).unwrap();
        assert!(ideal_equal(&m, &expect).unwrap());
    }

    #[test]
    fn minors_contain_g6() {
        let r = ring();
        let f = p(&r, "x^2+y^2+z^2+w^2");
        let g = p(&r, "xzw+(z+w)y^2+x^3+x^2y+xy^2+y^3");
        let m = minors2(&f, &g).unwrap();
        let g6 = p(&r, "2y^2z+2xz^2-2y^2w-2xw^2");
        assert!(m.generators().contains(&g6));
        assert_eq!(m.generators().len(), 6);
    }

    #[test]
    fn minors_of_identical_rows_vanish() {
        let r = ring();
        let f = p(&r, "x^2+y^2+z^2+w^2");
        let m = minors2(&f, &f).unwrap();
        assert!(m.is_zero_ideal());
    }

    #[test]
    fn ideal_b_adds_g() {
        let r = ring();
        let f = p(&r, "x^2+y^2+z^2+w^2");
        let g = p(&r, "wxz+y^3");
        let a = ideal_a(&f, &g).unwrap();
        let b = ideal_b(&f, &g).unwrap();
        assert_eq!(a.generators().len(), 7);
        assert!(ideal_membership(&f, &a).unwrap());
        assert!(ideal_membership(&g, &b).unwrap());
    }

    #[test]
    fn zero_dimensionality_examples() {
        let r = ring();
        let coords = IdealHandle::new(&r, ["x", "y", "z", "w"].map(|s| p(&r, s))).unwrap();
        assert!(is_zero_dimensional(&coords));
        assert_eq!(quotient_dimension(&coords).unwrap(), 1);
        let squares =
            IdealHandle::new(&r, ["x^2", "y^2", "z^2", "w^2"].map(|s| p(&r, s))).unwrap();
        assert!(radical_is_maximal(&squares));
        let partial = IdealHandle::new(&r, ["x", "y^2"].map(|s| p(&r, s))).unwrap();
        assert!(!is_zero_dimensional(&partial));
        assert_eq!(
            quotient_dimension(&partial).unwrap_err(),
            IdealError::InfiniteDimensional
        );
    }

    #[test]
    fn smoothness_examples() {
        let r = ring();
        assert!(is_smooth_hypersurface(&p(&r, "x^2+y^2+z^2+w^2")).unwrap());
        assert!(is_smooth_hypersurface(&p(&r, "x")).unwrap());
        // singular cubic from the corpus
        assert!(!is_smooth_hypersurface(&p(&r, "wxz+y^3")).unwrap());
        assert_eq!(
            is_smooth_hypersurface(&p(&r, "0")).unwrap_err(),
            IdealError::ZeroPolynomial
        );
    }

    #[test]
    fn ci_report_requires_smooth_f() {
        let r = ring();
        let singular = p(&r, "wxz+y^3");
        assert_eq!(
            is_smooth_complete_intersection(&singular, &p(&r, "x^3")).unwrap_err(),
            IdealError::NotSmooth
        );
    }

    #[test]
    fn radical_membership_examples() {
        let r = ring();
        let x_sq = IdealHandle::new(&r, [p(&r, "x^2")]).unwrap();
        assert!(radical_membership(&p(&r, "x"), &x_sq).unwrap());
        let x_only = IdealHandle::new(&r, [p(&r, "x")]).unwrap();
        assert!(!radical_membership(&p(&r, "y"), &x_only).unwrap());
        assert!(radical_equal(&x_only, &x_sq).unwrap());
    }

    #[test]
    fn remark1_witness() {
        // f = x, g = x^2+y^2+z^2+w^2: m2 alone is not zero-dimensional but
        // I(f,g) is
        let r = ring();
        let f = p(&r, "x");
        let g = p(&r, "x^2+y^2+z^2+w^2");
        let m = minors2(&f, &g).unwrap();
        assert!(!is_zero_dimensional(&m));
        let a = ideal_a(&f, &g).unwrap();
        assert!(is_zero_dimensional(&a));
    }

    #[test]
    fn f_equals_x0_collapse() {
        let r = ring();
        let f = p(&r, "x");
        for gtext in ["wxz+y^3", "y^3+2z^3+4w^3", "x^3+y^3+x^2y+xy^2+y^2z+xzw"] {
            let g = p(&r, gtext);
            let a = ideal_a(&f, &g).unwrap();
            let b = ideal_b(&f, &g).unwrap();
            assert!(ideal_equal(&a, &b).unwrap(), "f=x collapse for {}", gtext);
        }
    }

    #[test]
    fn f_equals_x0_ci_depends_on_the_section() {
        // the section x=0 of the E8-type cubic is smooth; the A2 cubic's
        // singular point lies on x=0
        let r = ring();
        let f = p(&r, "x");
        let e8 = p(&r, "y^3+2z^3+4w^3");
        assert!(is_smooth_complete_intersection(&f, &e8).unwrap().ci);
        let a2 = p(&r, "(x+y+z)(x+2y+3z)w+xyz");
        let rep = is_smooth_complete_intersection(&f, &a2).unwrap();
        assert!(!rep.ci);
        assert!(!rep.dim_b_finite);
    }

    #[test]
    fn standard_monomial_oracle_small() {
        let r = ring();
        let squares =
            IdealHandle::new(&r, ["x^2", "y^2", "z^2", "w^2"].map(|s| p(&r, s))).unwrap();
        // binomial(4, k) square-free monomials per degree
        assert_eq!(standard_monomial_count(&squares, 0), 1);
        assert_eq!(standard_monomial_count(&squares, 1), 4);
        assert_eq!(standard_monomial_count(&squares, 2), 6);
        assert_eq!(standard_monomial_count(&squares, 3), 4);
        assert_eq!(standard_monomial_count(&squares, 4), 1);
        assert_eq!(standard_monomial_count(&squares, 5), 0);
    }
}
