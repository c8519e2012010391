//! Graded free resolutions and minimal Betti numbers.
//!
//! Construction is Schreyer's: the reduced Groebner basis of `I` is a basis
//! of the first free module, and the syzygies obtained from the standard
//! expressions of its S-pair reductions are again a Groebner basis of the
//! syzygy module, under the order induced by the leading terms one level
//! down. Iterating yields a (generally non-minimal) graded free resolution
//! of `S/I`; [`minimize`] then cancels unit entries until every matrix entry
//! lies in the maximal ideal, which exposes the minimal graded Betti
//! numbers.
//!
//! Exactness is certified rather than re-proven: the complex property is
//! checked matrix-by-matrix and the alternating sum of the twists must
//! reproduce the Groebner-derived Hilbert numerator ([`verify_resolution`]).

use std::cmp::Ordering;

use num_traits::One;
use thiserror::Error;

use crate::closedforms::BettiTable;
use crate::groebner::GroebnerBasis;
use crate::hilbert::{hilbert_series, IntPoly};
use crate::ideal::IdealHandle;
use crate::poly::{Coeff, Polynomial};
use crate::ring::{Monomial, MonomialOrder, Ring};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ResolutionError {
    #[error("ideal generators must be homogeneous")]
    NotHomogeneous,
}

/// A free module described by the multiset of twists of its generators;
/// twist `j` means a generator in degree `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedFreeModule {
    twists: Vec<u32>,
}

impl GradedFreeModule {
    pub fn new(twists: Vec<u32>) -> Self {
        GradedFreeModule { twists }
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn twists(&self) -> &[u32] {
        &self.twists
    }
}

/// One map `source -> target` of a resolution; `matrix[r][c]` is the
/// component of the image of source generator `c` along target generator
/// `r`. Columns are homogeneous: a nonzero entry has degree
/// `source twist - target twist`.
#[derive(Debug, Clone)]
pub struct ResolutionStep {
    pub source: GradedFreeModule,
    pub target: GradedFreeModule,
    pub matrix: Vec<Vec<Polynomial>>,
}

/// A graded free resolution `... -> F_2 -> F_1 -> F_0 = S` of `S/I`.
#[derive(Debug, Clone)]
pub struct GradedResolution {
    ring: Ring,
    /// `F_0, F_1, ...`; `F_0` is `S` until minimization of a unit ideal
    /// removes it.
    modules: Vec<GradedFreeModule>,
    /// `matrices[k]` maps `F_{k+1} -> F_k`.
    matrices: Vec<Vec<Vec<Polynomial>>>,
    complete: bool,
}

impl GradedResolution {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn modules(&self) -> &[GradedFreeModule] {
        &self.modules
    }

    /// Number of maps (the length of the resolution).
    pub fn length(&self) -> usize {
        self.matrices.len()
    }

    /// Whether the last syzygy module reached zero within the length budget.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn matrix(&self, k: usize) -> &Vec<Vec<Polynomial>> {
        &self.matrices[k]
    }

    pub fn steps(&self) -> Vec<ResolutionStep> {
        (0..self.matrices.len())
            .map(|k| ResolutionStep {
                source: self.modules[k + 1].clone(),
                target: self.modules[k].clone(),
                matrix: self.matrices[k].clone(),
            })
            .collect()
    }

    /// Every matrix column homogeneous of the degree its twists dictate.
    pub fn is_graded(&self) -> bool {
        for (k, mat) in self.matrices.iter().enumerate() {
            let target = &self.modules[k];
            let source = &self.modules[k + 1];
            for (r, row) in mat.iter().enumerate() {
                for (c, entry) in row.iter().enumerate() {
                    if entry.is_zero() {
                        continue;
                    }
                    let expect = source.twists()[c] as i64 - target.twists()[r] as i64;
                    match entry.homogeneity() {
                        Some(crate::poly::Homogeneity::Degree(d)) if d as i64 == expect => {}
                        _ => return false,
                    }
                }
            }
        }
        true
    }

    /// True when no matrix entry contains a nonzero constant.
    pub fn is_minimal(&self) -> bool {
        self.matrices
            .iter()
            .all(|mat| mat.iter().flatten().all(|e| constant_value(e).is_none()))
    }
}

/// `Some(c)` when the entry is the nonzero constant `c`.
fn constant_value(p: &Polynomial) -> Option<Coeff> {
    match p.leading_term() {
        Some((m, c)) if m.is_one() => Some(c.clone()),
        _ => None,
    }
}

// --- module monomials and the induced (Schreyer) order tower ---

#[derive(Debug, Clone, PartialEq, Eq)]
struct ModMono {
    mon: Monomial,
    comp: usize,
}

/// Orders for the whole tower of free modules. Level 0 compares ring
/// monomials; level `k+1` compares `(m, c)` by mapping to
/// `m * lm(gens_k[c])` one level down, ties to the smaller component.
struct OrderTower {
    ring_order: MonomialOrder,
    levels: Vec<Vec<ModMono>>,
}

impl OrderTower {
    fn cmp(&self, level: usize, a: &ModMono, b: &ModMono) -> Ordering {
        if level == 0 {
            debug_assert!(a.comp == 0 && b.comp == 0);
            return self.ring_order.cmp_monomials(&a.mon, &b.mon);
        }
        let la = &self.levels[level - 1][a.comp];
        let lb = &self.levels[level - 1][b.comp];
        let pa = ModMono {
            mon: a.mon.mul(&la.mon),
            comp: la.comp,
        };
        let pb = ModMono {
            mon: b.mon.mul(&lb.mon),
            comp: lb.comp,
        };
        self.cmp(level - 1, &pa, &pb)
            .then_with(|| b.comp.cmp(&a.comp))
    }
}

/// An element of a free module: terms sorted strictly descending under the
/// level's induced order.
#[derive(Debug, Clone, PartialEq)]
struct ModPoly {
    terms: Vec<(ModMono, Coeff)>,
}

impl ModPoly {
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn leading(&self) -> Option<&(ModMono, Coeff)> {
        self.terms.first()
    }

    fn normalize(mut terms: Vec<(ModMono, Coeff)>, tower: &OrderTower, level: usize) -> ModPoly {
        terms.sort_by(|a, b| tower.cmp(level, &b.0, &a.0));
        let mut merged: Vec<(ModMono, Coeff)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match merged.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => merged.push((m, c)),
            }
        }
        merged.retain(|(_, c)| !num_traits::Zero::is_zero(c));
        ModPoly { terms: merged }
    }

    /// `self - c * m * other`; multiplication by a ring monomial preserves
    /// the induced order, so this is a sorted merge.
    fn sub_scaled(
        &self,
        c: &Coeff,
        m: &Monomial,
        other: &ModPoly,
        tower: &OrderTower,
        level: usize,
    ) -> ModPoly {
        let mut out: Vec<(ModMono, Coeff)> = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let shifted = |t: &(ModMono, Coeff)| {
            (
                ModMono {
                    mon: t.0.mon.mul(m),
                    comp: t.0.comp,
                },
                -(&t.1 * c),
            )
        };
        while i < self.terms.len() && j < other.terms.len() {
            let b = shifted(&other.terms[j]);
            match tower.cmp(level, &self.terms[i].0, &b.0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b);
                    j += 1;
                }
                Ordering::Equal => {
                    let c2 = &self.terms[i].1 + &b.1;
                    if !num_traits::Zero::is_zero(&c2) {
                        out.push((b.0, c2));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(|t| shifted(t)));
        ModPoly { terms: out }
    }

    fn monic(&self) -> ModPoly {
        match self.leading() {
            None => self.clone(),
            Some((_, lc)) => {
                let inv = lc.recip();
                ModPoly {
                    terms: self
                        .terms
                        .iter()
                        .map(|(m, c)| (m.clone(), c * &inv))
                        .collect(),
                }
            }
        }
    }
}

/// Module division with quotient tracking; the remainder is irreducible.
fn mod_divide(
    p: &ModPoly,
    gens: &[ModPoly],
    tower: &OrderTower,
    level: usize,
) -> (Vec<Vec<(Monomial, Coeff)>>, ModPoly) {
    let mut quotients: Vec<Vec<(Monomial, Coeff)>> = vec![Vec::new(); gens.len()];
    let mut remainder: Vec<(ModMono, Coeff)> = Vec::new();
    let mut h = p.clone();
    'outer: while let Some((lm, lc)) = h.leading().cloned() {
        for (k, g) in gens.iter().enumerate() {
            let (glm, glc) = g.leading().expect("nonzero generator");
            if glm.comp == lm.comp {
                if let Some(q) = lm.mon.div(&glm.mon) {
                    let factor = &lc / glc;
                    quotients[k].push((q.clone(), factor.clone()));
                    h = h.sub_scaled(&factor, &q, g, tower, level);
                    continue 'outer;
                }
            }
        }
        remainder.push((lm.clone(), lc.clone()));
        h.terms.remove(0);
    }
    (quotients, ModPoly { terms: remainder })
}

/// Inter-reduce a Groebner basis of a module: drop leading-term-redundant
/// elements (first occurrence wins), tail-reduce against the rest, make
/// monic, and sort ascending by leading term.
fn interreduce(gens: Vec<ModPoly>, tower: &OrderTower, level: usize) -> Vec<ModPoly> {
    let mut keep = vec![true; gens.len()];
    for i in 0..gens.len() {
        if !keep[i] {
            continue;
        }
        let (lmi, _) = gens[i].leading().expect("nonzero");
        for (j, g) in gens.iter().enumerate() {
            if i == j || !keep[j] {
                continue;
            }
            let (lmj, _) = g.leading().expect("nonzero");
            if lmj.comp == lmi.comp
                && lmj.mon.divides(&lmi.mon)
                && (lmj != lmi || j < i)
            {
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<ModPoly> = gens
        .into_iter()
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect();
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<ModPoly> = minimal
            .iter()
            .enumerate()
            .filter_map(|(j, g)| (j != i).then(|| g.clone()))
            .collect();
        let (_, nf) = mod_divide(&minimal[i], &others, tower, level);
        debug_assert!(!nf.is_zero());
        reduced.push(nf.monic());
    }
    reduced.sort_by(|a, b| {
        tower.cmp(
            level,
            &a.leading().expect("nonzero").0,
            &b.leading().expect("nonzero").0,
        )
    });
    reduced
}

/// Syzygies of a Groebner basis `gens` (living at `level`), themselves a
/// Groebner basis one level up. Returns the inter-reduced generators.
fn syzygy_level(gens: &[ModPoly], tower: &mut OrderTower, level: usize) -> Vec<ModPoly> {
    debug_assert_eq!(tower.levels.len(), level);
    tower.levels.push(
        gens.iter()
            .map(|g| g.leading().expect("nonzero").0.clone())
            .collect(),
    );
    let mut syzygies: Vec<ModPoly> = Vec::new();
    for i in 0..gens.len() {
        for j in (i + 1)..gens.len() {
            let (lmi, lci) = gens[i].leading().expect("nonzero");
            let (lmj, lcj) = gens[j].leading().expect("nonzero");
            debug_assert!(lci.is_one() && lcj.is_one());
            if lmi.comp != lmj.comp {
                continue;
            }
            let lcm = lmi.mon.lcm(&lmj.mon);
            let mi = lcm.div(&lmi.mon).expect("lcm divisible");
            let mj = lcm.div(&lmj.mon).expect("lcm divisible");
            // S-pair: (lcm/lm_i) g_i - (lcm/lm_j) g_j, reduced to zero
            let zero = ModPoly { terms: vec![] };
            let spair = zero
                .sub_scaled(&-Coeff::one(), &mi, &gens[i], tower, level)
                .sub_scaled(&Coeff::one(), &mj, &gens[j], tower, level);
            let (quotients, nf) = mod_divide(&spair, gens, tower, level);
            assert!(
                nf.is_zero(),
                "S-pair of a Groebner basis must reduce to zero"
            );
            // sigma = (lcm/lm_i) e_i - (lcm/lm_j) e_j - sum_k q_k e_k
            let mut terms: Vec<(ModMono, Coeff)> = vec![
                (ModMono { mon: mi, comp: i }, Coeff::one()),
                (ModMono { mon: mj, comp: j }, -Coeff::one()),
            ];
            for (k, q) in quotients.into_iter().enumerate() {
                for (m, c) in q {
                    terms.push((ModMono { mon: m, comp: k }, -c));
                }
            }
            let syz = ModPoly::normalize(terms, tower, level + 1);
            debug_assert_eq!(
                syz.leading().expect("nonzero").0.comp,
                i,
                "Schreyer leading term lands on the first component"
            );
            syzygies.push(syz);
        }
    }
    interreduce(syzygies, tower, level + 1)
}

fn gb_as_modpolys(gb: &GroebnerBasis) -> Vec<ModPoly> {
    gb.elements()
        .iter()
        .map(|g| ModPoly {
            terms: g
                .terms()
                .iter()
                .map(|(m, c)| {
                    (
                        ModMono {
                            mon: m.clone(),
                            comp: 0,
                        },
                        c.clone(),
                    )
                })
                .collect(),
        })
        .collect()
}

fn modpoly_degree(p: &ModPoly, twists: &[u32]) -> u32 {
    let (lm, _) = p.leading().expect("nonzero");
    lm.mon.degree() + twists[lm.comp]
}

fn matrix_from(gens: &[ModPoly], ring: &Ring, target_rank: usize) -> Vec<Vec<Polynomial>> {
    let mut matrix = vec![vec![Polynomial::zero(ring); gens.len()]; target_rank];
    for (c, g) in gens.iter().enumerate() {
        let mut per_row: Vec<Vec<(Monomial, Coeff)>> = vec![Vec::new(); target_rank];
        for (m, coeff) in &g.terms {
            per_row[m.comp].push((m.mon.clone(), coeff.clone()));
        }
        for (r, terms) in per_row.into_iter().enumerate() {
            matrix[r][c] = Polynomial::from_terms(ring, terms);
        }
    }
    matrix
}

/// First syzygy module of a reduced Groebner basis, as one resolution step
/// (columns are the syzygies over the free module on the basis elements).
pub fn syzygy_basis(gb: &GroebnerBasis) -> ResolutionStep {
    let ring = gb.ring().clone();
    let mut tower = OrderTower {
        ring_order: ring.order(),
        levels: Vec::new(),
    };
    let gens = gb_as_modpolys(gb);
    let target_twists: Vec<u32> = gb
        .elements()
        .iter()
        .map(|g| g.degree().expect("nonzero"))
        .collect();
    let syz = syzygy_level(&gens, &mut tower, 0);
    let source_twists: Vec<u32> = syz.iter().map(|s| modpoly_degree(s, &target_twists)).collect();
    let matrix = matrix_from(&syz, &ring, gens.len());
    ResolutionStep {
        source: GradedFreeModule::new(source_twists),
        target: GradedFreeModule::new(target_twists),
        matrix,
    }
}

/// Free resolution of `S/I` by iterated syzygies, at most `max_length` maps.
/// The result is graded but generally not minimal. When the syzygies do not
/// reach zero within the budget the resolution is returned with
/// `is_complete() == false`.
pub fn free_resolution(
    ideal: &IdealHandle,
    max_length: usize,
) -> Result<GradedResolution, ResolutionError> {
    if ideal.generators().iter().any(|g| !g.is_homogeneous()) {
        return Err(ResolutionError::NotHomogeneous);
    }
    let ring = ideal.ring().clone();
    let mut modules = vec![GradedFreeModule::new(vec![0])];
    let mut matrices: Vec<Vec<Vec<Polynomial>>> = Vec::new();
    let gb = ideal.groebner();
    if gb.is_empty() {
        // zero ideal: S resolves itself
        return Ok(GradedResolution {
            ring,
            modules,
            matrices,
            complete: true,
        });
    }
    let mut tower = OrderTower {
        ring_order: ring.order(),
        levels: Vec::new(),
    };
    let mut gens = gb_as_modpolys(gb);
    let mut twists: Vec<u32> = gb
        .elements()
        .iter()
        .map(|g| g.degree().expect("nonzero"))
        .collect();
    let mut level = 0;
    let complete;
    loop {
        matrices.push(matrix_from(&gens, &ring, modules[level].rank()));
        modules.push(GradedFreeModule::new(twists.clone()));
        if matrices.len() == max_length {
            // budget reached; complete only if the next syzygy module is zero
            complete = syzygy_level(&gens, &mut tower, level).is_empty();
            break;
        }
        let syz = syzygy_level(&gens, &mut tower, level);
        if syz.is_empty() {
            complete = true;
            break;
        }
        let next_twists: Vec<u32> = syz.iter().map(|s| modpoly_degree(s, &twists)).collect();
        gens = syz;
        twists = next_twists;
        level += 1;
    }
    let res = GradedResolution {
        ring,
        modules,
        matrices,
        complete,
    };
    debug_assert!(res.is_graded());
    Ok(res)
}

/// Cancel unit (nonzero constant) entries, always the lexicographically
/// smallest `(step, row, column)`, until every entry lies in the maximal
/// ideal. Zero-rank tail modules are dropped.
pub fn minimize(resolution: &GradedResolution) -> GradedResolution {
    let mut r = resolution.clone();
    loop {
        let mut found: Option<(usize, usize, usize, Coeff)> = None;
        'scan: for (k, mat) in r.matrices.iter().enumerate() {
            for (row, entries) in mat.iter().enumerate() {
                for (col, entry) in entries.iter().enumerate() {
                    if let Some(u) = constant_value(entry) {
                        found = Some((k, row, col, u));
                        break 'scan;
                    }
                }
            }
        }
        let (k, row, col, u) = match found {
            Some(f) => f,
            None => break,
        };
        cancel(&mut r, k, row, col, &u);
    }
    while r
        .modules
        .last()
        .map_or(false, |m| m.rank() == 0)
    {
        r.modules.pop();
        r.matrices.pop();
    }
    debug_assert!(r.is_minimal());
    debug_assert!(r.is_graded());
    r
}

/// Remove generator `row` of `F_k` and generator `col` of `F_{k+1}` along the
/// unit entry `u = matrices[k][row][col]`, updating the two neighbouring
/// matrices for the basis change.
fn cancel(r: &mut GradedResolution, k: usize, row: usize, col: usize, u: &Coeff) {
    let u_inv = u.recip();
    let mat = &r.matrices[k];
    let pivot_row: Vec<Polynomial> = mat[row].clone();
    let pivot_col: Vec<Polynomial> = mat.iter().map(|rw| rw[col].clone()).collect();

    // matrices[k]: M'[i][j] = M[i][j] - M[i][c] * M[r][j] / u, drop row/col
    let mut new_mat: Vec<Vec<Polynomial>> = Vec::with_capacity(mat.len() - 1);
    for (i, rw) in mat.iter().enumerate() {
        if i == row {
            continue;
        }
        let mut new_row = Vec::with_capacity(rw.len() - 1);
        for (j, entry) in rw.iter().enumerate() {
            if j == col {
                continue;
            }
            let correction = pivot_col[i]
                .checked_mul(&pivot_row[j])
                .expect("same ring")
                .scale(&u_inv);
            new_row.push(entry.checked_sub(&correction).expect("same ring"));
        }
        new_mat.push(new_row);
    }
    r.matrices[k] = new_mat;

    // matrices[k+1] (rows indexed by F_{k+1}): fold row `col`, then drop it
    if k + 1 < r.matrices.len() {
        let next = &mut r.matrices[k + 1];
        let folded: Vec<Polynomial> = (0..next[0].len())
            .map(|c2| {
                let mut acc = next[col][c2].clone();
                for (j, entry) in pivot_row.iter().enumerate() {
                    if j == col {
                        continue;
                    }
                    acc = acc
                        .checked_add(&entry.checked_mul(&next[j][c2]).expect("same ring").scale(&u_inv))
                        .expect("same ring");
                }
                acc
            })
            .collect();
        debug_assert!(
            folded.iter().all(Polynomial::is_zero),
            "complex property forces the folded row to vanish"
        );
        next.remove(col);
    }

    // matrices[k-1] (columns indexed by F_k): fold column `row`, then drop it
    if k > 0 {
        let prev = &mut r.matrices[k - 1];
        for i in 0..prev.len() {
            let mut acc = prev[i][row].clone();
            for (i2, entry) in pivot_col.iter().enumerate() {
                if i2 == row {
                    continue;
                }
                acc = acc
                    .checked_add(&entry.checked_mul(&prev[i][i2]).expect("same ring").scale(&u_inv))
                    .expect("same ring");
            }
            debug_assert!(
                acc.is_zero(),
                "complex property forces the folded column to vanish"
            );
            prev[i].remove(row);
        }
    }

    r.modules[k].twists.remove(row);
    r.modules[k + 1].twists.remove(col);
}

/// Read the graded Betti numbers off a resolution: `(0, 0, 1)` for `F_0 = S`
/// plus one entry per generator twist at each homological index.
pub fn betti_table(resolution: &GradedResolution) -> BettiTable {
    let mut entries: Vec<(usize, u32, u64)> = Vec::new();
    for (i, module) in resolution.modules.iter().enumerate() {
        for &j in module.twists() {
            entries.push((i, j, 1));
        }
    }
    BettiTable::new(None, entries)
}

/// Exactness certificates for a computed resolution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerificationReport {
    /// all consecutive compositions vanish
    pub complex_ok: bool,
    /// the alternating twist sum equals the Groebner-derived Hilbert numerator
    pub hp_ok: bool,
}

pub fn verify_resolution(resolution: &GradedResolution, ideal: &IdealHandle) -> VerificationReport {
    let ring = resolution.ring();
    let mut complex_ok = true;
    for k in 0..resolution.matrices.len().saturating_sub(1) {
        let a = &resolution.matrices[k]; // F_{k+1} -> F_k
        let b = &resolution.matrices[k + 1]; // F_{k+2} -> F_{k+1}
        let rows = a.len();
        let mids = b.len();
        let cols = if mids > 0 { b[0].len() } else { 0 };
        for i in 0..rows {
            for j in 0..cols {
                let mut acc = Polynomial::zero(ring);
                for m in 0..mids {
                    acc = acc
                        .checked_add(&a[i][m].checked_mul(&b[m][j]).expect("same ring"))
                        .expect("same ring");
                }
                if !acc.is_zero() {
                    complex_ok = false;
                }
            }
        }
    }
    let mut alternating = IntPoly::zero();
    for (i, module) in resolution.modules.iter().enumerate() {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        for &j in module.twists() {
            alternating = alternating.add(&IntPoly::term(sign, j as usize));
        }
    }
    let hp_ok = &alternating == hilbert_series(ideal).numerator();
    VerificationReport { complex_ok, hp_ok }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closedforms::{conjecture1_betti, DegreePair};
    use crate::ideal::{ideal_a, AlgebraVariant, IdealHandle};
    use crate::parse::parse_polynomial;
    use crate::ring::RingSpec;

    fn ring() -> Ring {
        RingSpec::degrevlex(vec!["x", "y", "z", "w"]).unwrap()
    }

    fn p(r: &Ring, s: &str) -> Polynomial {
        parse_polynomial(s, r).unwrap()
    }

    fn ideal(r: &Ring, gens: &[&str]) -> IdealHandle {
        IdealHandle::new(r, gens.iter().map(|s| p(r, s))).unwrap()
    }

    #[test]
    fn koszul_syzygy_of_two_variables() {
        let r = ring();
        let i = ideal(&r, &["x", "y"]);
        let step = syzygy_basis(i.groebner());
        assert_eq!(step.source.rank(), 1);
        assert_eq!(step.source.twists(), &[2]);
        // basis elements sort ascending by leading monomial, so the rows are
        // (y, x) and the Koszul column reads (x, -y): x*(y) - y*(x) = 0
        let col: Vec<String> = step.matrix.iter().map(|row| row[0].format()).collect();
        assert_eq!(col, vec!["x", "-y"]);
    }

    #[test]
    fn koszul_syzygies_of_coordinates() {
        let r = ring();
        let i = ideal(&r, &["x", "y", "z", "w"]);
        let step = syzygy_basis(i.groebner());
        assert_eq!(step.source.rank(), 6);
        assert!(step.source.twists().iter().all(|&t| t == 2));
    }

    #[test]
    fn principal_ideal_resolution() {
        let r = ring();
        let i = ideal(&r, &["x^3+y^3+z^3+w^3"]);
        let res = free_resolution(&i, 6).unwrap();
        assert!(res.is_complete());
        assert_eq!(res.length(), 1);
        assert_eq!(res.modules()[1].twists(), &[3]);
        let report = verify_resolution(&res, &i);
        assert!(report.complex_ok && report.hp_ok);
    }

    #[test]
    fn full_koszul_complex_of_coordinates() {
        let r = ring();
        let i = ideal(&r, &["x", "y", "z", "w"]);
        let res = free_resolution(&i, 6).unwrap();
        assert!(res.is_complete());
        assert_eq!(res.length(), 4);
        let min = minimize(&res);
        let bt = betti_table(&min);
        assert_eq!(bt.total_ranks(), vec![1, 4, 6, 4, 1]);
        for (i, expect) in [(1u32, 1u32), (2, 2), (3, 3), (4, 4)] {
            assert!(min.modules()[i as usize]
                .twists()
                .iter()
                .all(|&t| t == expect));
        }
        let report = verify_resolution(&min, &i);
        assert!(report.complex_ok && report.hp_ok);
    }

    #[test]
    fn regular_sequence_minimizes_to_koszul() {
        let r = ring();
        let f = p(&r, "x^2+y^2+z^2+w^2");
        let g = p(&r, "wxz+y^3");
        let i = IdealHandle::new(&r, [f, g]).unwrap();
        let res = free_resolution(&i, 6).unwrap();
        let report = verify_resolution(&res, &i);
        assert!(report.complex_ok && report.hp_ok, "pre-minimization");
        let min = minimize(&res);
        let bt = betti_table(&min);
        assert_eq!(
            bt.entries(),
            &[(0, 0, 1), (1, 2, 1), (1, 3, 1), (2, 5, 1)]
        );
        let report = verify_resolution(&min, &i);
        assert!(report.complex_ok && report.hp_ok);
    }

    #[test]
    fn minimize_removes_identity_padding() {
        // pad 0 -> S(-d) -> S with a trivial S(-d) -> S(-d) summand
        let r = ring();
        let f = p(&r, "x^2");
        let one = Polynomial::one(&r);
        let padded = GradedResolution {
            ring: r.clone(),
            modules: vec![
                GradedFreeModule::new(vec![0]),
                GradedFreeModule::new(vec![2, 2]),
                GradedFreeModule::new(vec![2]),
            ],
            matrices: vec![
                vec![vec![f.clone(), f.clone()]],
                vec![vec![one.clone()], vec![one.neg()]],
            ],
            complete: true,
        };
        assert!(padded.is_graded());
        let min = minimize(&padded);
        assert_eq!(min.length(), 1);
        assert_eq!(min.modules()[1].twists(), &[2]);
        assert_eq!(min.matrix(0)[0][0], f);
        assert!(min.is_minimal());
    }

    #[test]
    fn corrupted_matrix_fails_complex_check() {
        let r = ring();
        let i = ideal(&r, &["x", "y"]);
        let mut res = free_resolution(&i, 6).unwrap();
        res.matrices[1][0][0] = p(&r, "z^2");
        let report = verify_resolution(&res, &i);
        assert!(!report.complex_ok);
    }

    #[test]
    fn small_conjectured_table_is_reproduced() {
        // (2,2): Fermat quadric with a second diagonal quadric
        let r = ring();
        let f = p(&r, "x^2+y^2+z^2+w^2");
        let g = p(&r, "x^2+2y^2+3z^2+4w^2");
        let i = ideal_a(&f, &g).unwrap();
        let res = free_resolution(&i, 6).unwrap();
        assert!(res.is_complete());
        let min = minimize(&res);
        let bt = betti_table(&min);
        let expected = conjecture1_betti(DegreePair::new(2, 2).unwrap(), AlgebraVariant::A);
        assert!(bt.same_entries(&expected), "{:?} vs {:?}", bt, expected);
        let report = verify_resolution(&min, &i);
        assert!(report.complex_ok && report.hp_ok);
    }

    #[test]
    fn zero_and_unit_ideal_edge_cases() {
        let r = ring();
        let zero = IdealHandle::new(&r, Vec::<Polynomial>::new()).unwrap();
        let res = free_resolution(&zero, 6).unwrap();
        assert_eq!(res.length(), 0);
        assert!(res.is_complete());
        assert_eq!(betti_table(&res).entries(), &[(0, 0, 1)]);

        let inhomog = IdealHandle::new(&r, [p(&r, "x^2+y")]).unwrap();
        assert_eq!(
            free_resolution(&inhomog, 6).unwrap_err(),
            ResolutionError::NotHomogeneous
        );
    }
}
