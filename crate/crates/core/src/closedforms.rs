//! Closed-form numerators and conjectured resolution shapes in `P^3`.
//!
//! For a smooth degree-`d` hypersurface with a degree-`e` partner forming a
//! smooth complete intersection, the Hilbert series numerators of `A(f,g)`
//! and `B(f,g)` depend only on `(d, e)`. This module transcribes those
//! degree-only formulas ([`prop2_a`], [`prop2_b`]), the conjectured minimal
//! free resolution shapes ([`conjecture1_betti`]), and the alternating-sum
//! bridge between them ([`hp_from_betti`]).

use crate::hilbert::IntPoly;
use crate::ideal::AlgebraVariant;

/// The degrees `(deg f, deg g)`, both at least 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DegreePair {
    pub d: u32,
    pub e: u32,
}

impl DegreePair {
    pub fn new(d: u32, e: u32) -> Option<Self> {
        (d >= 1 && e >= 1).then_some(DegreePair { d, e })
    }
}

/// Graded Betti numbers `b_{i,j}`: entries `(homological index, twist, rank)`
/// with equal `(i, j)` merged, sorted by `(i, j)`. Index 0 carries the single
/// entry `(0, 0, 1)` for the ring itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    variant: Option<AlgebraVariant>,
    entries: Vec<(usize, u32, u64)>,
}

impl BettiTable {
    pub fn new(
        variant: Option<AlgebraVariant>,
        entries: impl IntoIterator<Item = (usize, u32, u64)>,
    ) -> Self {
        let mut merged: Vec<(usize, u32, u64)> = Vec::new();
        let mut entries: Vec<(usize, u32, u64)> = entries.into_iter().collect();
        entries.sort_by_key(|&(i, j, _)| (i, j));
        for (i, j, b) in entries {
            if b == 0 {
                continue;
            }
            match merged.last_mut() {
                Some((li, lj, lb)) if *li == i && *lj == j => *lb += b,
                _ => merged.push((i, j, b)),
            }
        }
        BettiTable {
            variant,
            entries: merged,
        }
    }

    pub fn variant(&self) -> Option<AlgebraVariant> {
        self.variant
    }

    /// `(i, j, b)` triples sorted by `(i, j)`.
    pub fn entries(&self) -> &[(usize, u32, u64)] {
        &self.entries
    }

    pub fn rank(&self, i: usize, j: u32) -> u64 {
        self.entries
            .iter()
            .find(|&&(ei, ej, _)| ei == i && ej == j)
            .map(|&(_, _, b)| b)
            .unwrap_or(0)
    }

    /// Total rank at each homological index, `[b_0, b_1, ...]`.
    pub fn total_ranks(&self) -> Vec<u64> {
        let max = self.entries.iter().map(|&(i, _, _)| i).max().unwrap_or(0);
        let mut out = vec![0u64; max + 1];
        for &(i, _, b) in &self.entries {
            out[i] += b;
        }
        out
    }

    /// Equality that ignores the variant tag.
    pub fn same_entries(&self, other: &BettiTable) -> bool {
        self.entries == other.entries
    }
}

/// `(1 - t^{d-1})^{n+1}`, the Hilbert numerator of the Milnor algebra of a
/// smooth degree-`d` hypersurface in `P^n`. Zero for `d = 1` (unit jacobian
/// ideal, zero quotient).
pub fn smooth_milnor_numerator(n: u32, d: u32) -> IntPoly {
    IntPoly::one_minus_t_pow((d - 1) as usize).pow(n + 1)
}

fn assemble(groups: &[(i64, &[(u32, u64)])]) -> IntPoly {
    let mut acc = IntPoly::zero();
    for &(sign, terms) in groups {
        for &(exp, mult) in terms {
            acc = acc.add(&IntPoly::term(sign * mult as i64, exp as usize));
        }
    }
    acc
}

/// Degree-only numerator of `HP(A(f,g))` over `(1-t)^4`:
/// `1 - [t^d + 6 t^{d+e-2}] + [4 t^{d+2e-3} + 4 t^{2d+e-3} + 6 t^{2d+e-2}]
///  - [t^{d+3e-4} + t^{2d+2e-4} + 4 t^{2d+2e-3} + t^{3d+e-4} + 4 t^{3d+e-3}]
///  + [t^{2d+3e-4} + t^{3d+2e-4} + t^{4d+e-4}]`.
pub fn prop2_a(dp: DegreePair) -> IntPoly {
    let (d, e) = (dp.d, dp.e);
    assemble(&[
        (1, &[(0, 1)]),
        (-1, &[(d, 1), (d + e - 2, 6)]),
        (1, &[(d + 2 * e - 3, 4), (2 * d + e - 3, 4), (2 * d + e - 2, 6)]),
        (
            -1,
            &[
                (d + 3 * e - 4, 1),
                (2 * d + 2 * e - 4, 1),
                (2 * d + 2 * e - 3, 4),
                (3 * d + e - 4, 1),
                (3 * d + e - 3, 4),
            ],
        ),
        (
            1,
            &[(2 * d + 3 * e - 4, 1), (3 * d + 2 * e - 4, 1), (4 * d + e - 4, 1)],
        ),
    ])
}

/// Degree-only numerator of `HP(B(f,g))` over `(1-t)^4`:
/// `1 - [t^e + t^d + 6 t^{d+e-2}] + [4 t^{d+e-1} + 4 t^{d+2e-3} + 4 t^{2d+e-3}]
///  - [t^{d+3e-4} + t^{2d+2e-4} + 4 t^{2d+2e-3} + t^{3d+e-4}]
///  + [t^{2d+3e-4} + t^{3d+2e-4}]`.
pub fn prop2_b(dp: DegreePair) -> IntPoly {
    let (d, e) = (dp.d, dp.e);
    assemble(&[
        (1, &[(0, 1)]),
        (-1, &[(e, 1), (d, 1), (d + e - 2, 6)]),
        (1, &[(d + e - 1, 4), (d + 2 * e - 3, 4), (2 * d + e - 3, 4)]),
        (
            -1,
            &[
                (d + 3 * e - 4, 1),
                (2 * d + 2 * e - 4, 1),
                (2 * d + 2 * e - 3, 4),
                (3 * d + e - 4, 1),
            ],
        ),
        (1, &[(2 * d + 3 * e - 4, 1), (3 * d + 2 * e - 4, 1)]),
    ])
}

/// The numerator for the chosen algebra variant (`A` or `B`).
pub fn prop2(dp: DegreePair, variant: AlgebraVariant) -> IntPoly {
    match variant {
        AlgebraVariant::A => prop2_a(dp),
        AlgebraVariant::B => prop2_b(dp),
        AlgebraVariant::M => smooth_milnor_numerator(3, dp.d),
    }
}

/// The conjectured minimal graded free resolution shape
/// `0 -> R4 -> R3 -> R2 -> R1 -> S -> M -> 0`, transcribed literally as twist
/// multisets; colliding twists merge by summing ranks.
pub fn conjecture1_betti(dp: DegreePair, variant: AlgebraVariant) -> BettiTable {
    let (d, e) = (dp.d, dp.e);
    let mut entries: Vec<(usize, u32, u64)> = vec![(0, 0, 1)];
    let groups: Vec<Vec<(u32, u64)>> = match variant {
        AlgebraVariant::A => vec![
            // R1 = S(-d) + S^6(-(d+e-2))
            vec![(d, 1), (d + e - 2, 6)],
            // R2 = S^4(-(d+2e-3)) + S^4(-(2d+e-3)) + S^6(-(2d+e-2))
            vec![(d + 2 * e - 3, 4), (2 * d + e - 3, 4), (2 * d + e - 2, 6)],
            // R3 = S(-(d+3e-4)) + S(-(2d+2e-4)) + S^4(-(2d+2e-3))
            //      + S(-(3d+e-4)) + S^4(-(3d+e-3))
            vec![
                (d + 3 * e - 4, 1),
                (2 * d + 2 * e - 4, 1),
                (2 * d + 2 * e - 3, 4),
                (3 * d + e - 4, 1),
                (3 * d + e - 3, 4),
            ],
            // R4 = S(-(2d+3e-4)) + S(-(3d+2e-4)) + S(-(4d+e-4))
            vec![(2 * d + 3 * e - 4, 1), (3 * d + 2 * e - 4, 1), (4 * d + e - 4, 1)],
        ],
        AlgebraVariant::B => vec![
            // R1 = S(-e) + S(-d) + S^6(-(d+e-2))
            vec![(e, 1), (d, 1), (d + e - 2, 6)],
            // R2 = S^4(-(d+e-1)) + S^4(-(d+2e-3)) + S^4(-(2d+e-3))
            vec![(d + e - 1, 4), (d + 2 * e - 3, 4), (2 * d + e - 3, 4)],
            // R3 = S(-(d+3e-4)) + S(-(2d+2e-4)) + S^4(-(2d+2e-3)) + S(-(3d+e-4))
            vec![
                (d + 3 * e - 4, 1),
                (2 * d + 2 * e - 4, 1),
                (2 * d + 2 * e - 3, 4),
                (3 * d + e - 4, 1),
            ],
            // R4 = S(-(2d+3e-4)) + S(-(3d+2e-4))
            vec![(2 * d + 3 * e - 4, 1), (3 * d + 2 * e - 4, 1)],
        ],
        AlgebraVariant::M => {
            // Koszul complex on the n+1 partials, degrees d-1 each
            let k = d - 1;
            (1..=4u32)
                .map(|i| vec![(i * k, binomial4(i) as u64)])
                .collect()
        }
    };
    for (step, group) in groups.into_iter().enumerate() {
        for (twist, rank) in group {
            entries.push((step + 1, twist, rank));
        }
    }
    BettiTable::new(Some(variant), entries)
}

fn binomial4(i: u32) -> u32 {
    match i {
        0 => 1,
        1 => 4,
        2 => 6,
        3 => 4,
        4 => 1,
        _ => 0,
    }
}

/// Alternating sum `sum_i (-1)^i sum_j b_{i,j} t^j`; with pole `(1-t)^{n+1}`
/// this is the Hilbert numerator any resolution with these Betti numbers
/// produces.
pub fn hp_from_betti(bt: &BettiTable) -> IntPoly {
    let mut acc = IntPoly::zero();
    for &(i, j, b) in bt.entries() {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        acc = acc.add(&IntPoly::term(sign * b as i64, j as usize));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dp(d: u32, e: u32) -> DegreePair {
        DegreePair::new(d, e).unwrap()
    }

    #[test]
    fn smooth_numerator_examples() {
        assert_eq!(
            smooth_milnor_numerator(3, 2),
            IntPoly::one_minus_t_pow(1).pow(4)
        );
        // n=2, d=3: (1-t^2)^3 over (1-t)^3 expands to (1+t)^3
        let p = smooth_milnor_numerator(2, 3);
        let series = crate::hilbert::HilbertSeries::from_numerator(p, 3);
        assert_eq!(
            series.reduced_numerator(),
            &IntPoly::from_i64(&[1, 3, 3, 1])
        );
        assert!(smooth_milnor_numerator(3, 1).is_zero());
    }

    #[test]
    fn prop2_hand_values_at_2_3() {
        assert_eq!(
            prop2_a(dp(2, 3)),
            IntPoly::from_i64(&[1, 0, -1, -6, 4, 9, -5, -4, 1, 1])
        );
        assert_eq!(
            prop2_b(dp(2, 3)),
            IntPoly::from_i64(&[1, 0, -1, -7, 8, 3, -1, -5, 1, 1])
        );
    }

    #[test]
    fn prop2_expansions_match_example_series() {
        let hs = crate::hilbert::HilbertSeries::from_numerator(prop2_a(dp(2, 3)), 4);
        assert!(hs.is_finite());
        assert_eq!(
            hs.reduced_numerator(),
            &IntPoly::from_i64(&[1, 4, 9, 10, 5, 1])
        );
        let hs = crate::hilbert::HilbertSeries::from_numerator(prop2_b(dp(2, 3)), 4);
        assert_eq!(
            hs.reduced_numerator(),
            &IntPoly::from_i64(&[1, 4, 9, 9, 5, 1])
        );
        let hs = crate::hilbert::HilbertSeries::from_numerator(prop2_a(dp(3, 3)), 4);
        assert_eq!(
            hs.reduced_numerator(),
            &IntPoly::from_i64(&[1, 4, 10, 19, 25, 22, 12, 3])
        );
        let hs = crate::hilbert::HilbertSeries::from_numerator(prop2_b(dp(3, 3)), 4);
        assert_eq!(
            hs.reduced_numerator(),
            &IntPoly::from_i64(&[1, 4, 10, 18, 21, 16, 8, 2])
        );
    }

    #[test]
    fn conjectured_table_r4_twists() {
        let a = conjecture1_betti(dp(2, 3), AlgebraVariant::A);
        assert_eq!(a.rank(4, 9), 1);
        assert_eq!(a.rank(4, 8), 1);
        assert_eq!(a.rank(4, 7), 1);
        let b = conjecture1_betti(dp(2, 3), AlgebraVariant::B);
        assert_eq!(b.rank(4, 9), 1);
        assert_eq!(b.rank(4, 8), 1);
        assert_eq!(b.rank(4, 7), 0);
        assert_eq!(a.total_ranks(), vec![1, 7, 14, 11, 3]);
        assert_eq!(b.total_ranks(), vec![1, 8, 12, 7, 2]);
    }

    #[test]
    fn twist_collisions_merge() {
        // d = e makes the three R2 groups of B collide into one twist
        let b = conjecture1_betti(dp(2, 2), AlgebraVariant::B);
        assert_eq!(b.rank(2, 3), 12);
        assert_eq!(b.rank(1, 2), 8);
    }

    #[test]
    fn koszul_bridge() {
        let bt = BettiTable::new(None, [(0, 0, 1), (1, 5, 1)]);
        assert_eq!(hp_from_betti(&bt), IntPoly::from_i64(&[1, 0, 0, 0, 0, -1]));
    }

    #[test]
    fn bridge_identity_collapses_to_prop2() {
        for d in 1..=12 {
            for e in 1..=12 {
                let pair = dp(d, e);
                for variant in [AlgebraVariant::A, AlgebraVariant::B] {
                    let lhs = hp_from_betti(&conjecture1_betti(pair, variant));
                    let rhs = prop2(pair, variant);
                    assert_eq!(lhs, rhs, "bridge identity at d={} e={} {:?}", d, e, variant);
                }
            }
        }
    }

    #[test]
    fn degree_one_collapse_matches_plane_curve_series() {
        // d = 1: the A-numerator over (1-t)^4 must expand to
        // (1 + t + ... + t^{e-2})^3
        for e in 2..=6u32 {
            let hs = crate::hilbert::HilbertSeries::from_numerator(prop2_a(dp(1, e)), 4);
            assert!(hs.is_finite(), "e={}", e);
            let ones = IntPoly::from_coeffs(vec![num_bigint::BigInt::from(1); (e - 1) as usize]);
            assert_eq!(hs.reduced_numerator(), &ones.pow(3), "e={}", e);
        }
    }

    #[test]
    fn numerators_vanish_to_order_four_at_one() {
        use num_traits::Zero;
        for (d, e) in [(2, 3), (3, 3), (1, 4), (4, 2), (5, 7)] {
            for variant in [AlgebraVariant::A, AlgebraVariant::B] {
                let mut p = prop2(dp(d, e), variant);
                for _ in 0..4 {
                    assert!(p.eval_at_one().is_zero(), "d={} e={} {:?}", d, e, variant);
                    p = p.div_one_minus_t().unwrap();
                }
            }
        }
    }

    #[test]
    fn prop2_is_not_symmetric_in_d_e() {
        assert_ne!(prop2_a(dp(2, 3)), prop2_a(dp(3, 2)));
    }
}
