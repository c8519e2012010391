//! Sequence predicates: log-concavity, internal zeros, unimodality.
//!
//! All comparisons use exact 128-bit integer products. Sequences of length
//! at most two are vacuously log-concave and unimodal (the defining
//! quantifier is empty).

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeqError {
    #[error("sequence has a negative entry at index {0}")]
    NegativeEntry(usize),
}

/// `a_k^2 >= a_{k-1} a_{k+1}` for every interior index.
pub fn is_log_concave(s: &[i64]) -> bool {
    s.windows(3)
        .all(|w| (w[1] as i128) * (w[1] as i128) >= (w[0] as i128) * (w[2] as i128))
}

/// Strict version: `a_k^2 > a_{k-1} a_{k+1}`.
pub fn is_strictly_log_concave(s: &[i64]) -> bool {
    s.windows(3)
        .all(|w| (w[1] as i128) * (w[1] as i128) > (w[0] as i128) * (w[2] as i128))
}

/// The indices of the nonzero entries form a set of consecutive integers.
/// Leading and trailing zeros are fine.
pub fn has_no_internal_zeros(s: &[i64]) -> bool {
    let first = s.iter().position(|&v| v != 0);
    let last = s.iter().rposition(|&v| v != 0);
    match (first, last) {
        (Some(a), Some(b)) => s[a..=b].iter().all(|&v| v != 0),
        _ => true,
    }
}

/// Weakly increases to some pivot, then weakly decreases.
pub fn is_unimodal(s: &[i64]) -> bool {
    let mut i = 0;
    while i + 1 < s.len() && s[i] <= s[i + 1] {
        i += 1;
    }
    while i + 1 < s.len() && s[i] >= s[i + 1] {
        i += 1;
    }
    i + 1 >= s.len()
}

/// Log-concavity / internal-zeros / unimodality report for a nonnegative
/// sequence, plus the implication "log-concave with no internal zeros is
/// unimodal" evaluated on this instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Conjecture2Report {
    pub log_concave: bool,
    pub no_internal_zeros: bool,
    pub unimodal: bool,
    pub implication_ok: bool,
}

impl Conjecture2Report {
    pub fn all_hold(&self) -> bool {
        self.log_concave && self.no_internal_zeros && self.unimodal
    }
}

pub fn check_conjecture2(s: &[i64]) -> Result<Conjecture2Report, SeqError> {
    if let Some(i) = s.iter().position(|&v| v < 0) {
        return Err(SeqError::NegativeEntry(i));
    }
    let log_concave = is_log_concave(s);
    let no_internal_zeros = has_no_internal_zeros(s);
    let unimodal = is_unimodal(s);
    Ok(Conjecture2Report {
        log_concave,
        no_internal_zeros,
        unimodal,
        implication_ok: !(log_concave && no_internal_zeros) || unimodal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn log_concavity_examples() {
        assert!(is_log_concave(&[1, 4, 9, 10, 5, 1]));
        assert!(!is_log_concave(&[1, 1, 2, 1]));
        assert!(is_log_concave(&[1, 4, 10, 19, 25, 22, 12, 3]));
        assert!(is_strictly_log_concave(&[1, 4, 9, 10, 5, 1]));
        // geometric sequences are log-concave but not strictly
        assert!(is_log_concave(&[1, 2, 4, 8]));
        assert!(!is_strictly_log_concave(&[1, 2, 4, 8]));
    }

    #[test]
    fn internal_zero_examples() {
        assert!(!has_no_internal_zeros(&[1, 0, 1]));
        assert!(has_no_internal_zeros(&[0, 1, 2, 0]));
        assert!(has_no_internal_zeros(&[]));
        assert!(has_no_internal_zeros(&[0, 0]));
    }

    #[test]
    fn unimodality_examples() {
        assert!(is_unimodal(&[1, 2, 1]));
        assert!(!is_unimodal(&[1, 0, 1]));
        assert!(is_unimodal(&[1, 4, 9, 9, 5, 1]));
        assert!(is_unimodal(&[1, 2, 3]));
        assert!(is_unimodal(&[3, 2, 1]));
        assert!(is_unimodal(&[2, 2, 2]));
        assert!(!is_unimodal(&[1, 3, 2, 3]));
    }

    #[test]
    fn short_sequences_are_vacuous() {
        for s in [&[][..], &[5][..], &[3, 1][..]] {
            assert!(is_log_concave(s));
            assert!(is_strictly_log_concave(s));
            assert!(is_unimodal(s));
        }
    }

    #[test]
    fn report_examples() {
        let r = check_conjecture2(&[1, 4, 9, 10, 5, 1]).unwrap();
        assert!(r.all_hold() && r.implication_ok);
        let r = check_conjecture2(&[1]).unwrap();
        assert!(r.all_hold() && r.implication_ok);
        let r = check_conjecture2(&[2, 1, 2]).unwrap();
        assert!(!r.log_concave);
        assert!(!r.unimodal);
        assert!(r.implication_ok);
        assert_eq!(
            check_conjecture2(&[1, -1]).unwrap_err(),
            SeqError::NegativeEntry(1)
        );
    }

    #[test]
    fn products_do_not_overflow_i64_range() {
        // i64::MAX squared exceeds i64 but fits the i128 comparison path
        assert!(is_log_concave(&[i64::MAX, i64::MAX, i64::MAX]));
    }
}
