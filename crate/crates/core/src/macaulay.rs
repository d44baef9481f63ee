//! Macaulay representations and transformations of nonnegative integers.
//!
//! Binomials here are integer binomials: `binom(x, y) = 0` for `x < y`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MacaulayError {
    #[error("Macaulay index must be at least 1, got {0}")]
    InvalidIndex(i64),
    #[error("integer overflow while computing binomial coefficients")]
    Overflow,
    #[error("Hilbert function range too short: nothing to test")]
    VacuousRange,
}

/// `binom(k, j)` with `binom(k, j) = 0` for `k < j`; `None` on overflow.
pub fn binom(k: u64, j: u64) -> Option<u128> {
    if j > k {
        return Some(0);
    }
    let j = j.min(k - j);
    let mut acc: u128 = 1;
    for i in 0..j {
        // acc * (k - i) / (i + 1) stays integral at every step
        acc = acc.checked_mul((k - i) as u128)? / (i as u128 + 1);
    }
    Some(acc)
}

/// The `d`-th Macaulay representation `a = binom(k(d), d) + ... + binom(k(δ), δ)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MacaulayRep {
    pub index: u64,
    /// `k(d), k(d-1), ..., k(δ)`, strictly decreasing.
    pub tops: Vec<u64>,
}

impl MacaulayRep {
    /// Bottom indices paired with `tops`: `d, d-1, ..., δ`.
    pub fn bottoms(&self) -> impl Iterator<Item = u64> + '_ {
        (0..self.tops.len() as u64).map(move |i| self.index - i)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.tops.iter().copied().zip(self.bottoms())
    }

    pub fn value(&self) -> Result<u64, MacaulayError> {
        let mut sum: u128 = 0;
        for (k, j) in self.terms() {
            sum = sum
                .checked_add(binom(k, j).ok_or(MacaulayError::Overflow)?)
                .ok_or(MacaulayError::Overflow)?;
        }
        u64::try_from(sum).map_err(|_| MacaulayError::Overflow)
    }

    /// Whether the tops and bottoms satisfy `k(d) > ... > k(δ) >= δ > 0`.
    pub fn is_valid(&self) -> bool {
        self.tops.len() as u64 <= self.index
            && self.tops.windows(2).all(|w| w[0] > w[1])
            && self.terms().all(|(k, j)| k >= j && j > 0)
    }
}

fn check_index(d: i64) -> Result<u64, MacaulayError> {
    if d < 1 {
        Err(MacaulayError::InvalidIndex(d))
    } else {
        Ok(d as u64)
    }
}

/// Largest `k >= j` with `binom(k, j) <= target`, for `target >= 1` and `j >= 1`.
fn greedy_top(target: u64, j: u64) -> u64 {
    // binom(k, j) >= k - j + 1, so k <= target + j - 1
    let (mut lo, mut hi) = (j, target + j - 1);
    while lo < hi {
        let mid = lo + (hi - lo).div_ceil(2);
        match binom(mid, j) {
            Some(b) if b <= target as u128 => lo = mid,
            _ => hi = mid - 1,
        }
    }
    lo
}

pub fn macaulay_rep(a: u64, d: i64) -> Result<MacaulayRep, MacaulayError> {
    let index = check_index(d)?;
    let mut tops = Vec::new();
    let mut remaining = a;
    let mut j = index;
    while remaining > 0 {
        // a nonzero remainder after the j = 1 step is impossible: binom(k, 1) = k
        debug_assert!(j >= 1);
        let k = greedy_top(remaining, j);
        remaining -= binom(k, j).expect("bounded by remaining") as u64;
        tops.push(k);
        j -= 1;
    }
    Ok(MacaulayRep { index, tops })
}

/// `a^<d>`: raise both entries of every binomial in the `d`-th representation.
pub fn macaulay_transform(a: u64, d: i64) -> Result<u64, MacaulayError> {
    let rep = macaulay_rep(a, d)?;
    let mut sum: u128 = 0;
    for (k, j) in rep.terms() {
        let b = binom(k + 1, j + 1).ok_or(MacaulayError::Overflow)?;
        sum = sum.checked_add(b).ok_or(MacaulayError::Overflow)?;
    }
    u64::try_from(sum).map_err(|_| MacaulayError::Overflow)
}

/// Macaulay's growth bound for one step: `h_next <= h_d^<d>`.
pub fn macaulay_growth_ok(h_d: u64, h_next: u64, d: i64) -> Result<bool, MacaulayError> {
    Ok(h_next <= macaulay_transform(h_d, d)?)
}

/// Hilbert function values on the contiguous degree range `start, start + 1, ...`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertValues {
    pub start: i64,
    pub values: Vec<u64>,
}

impl HilbertValues {
    pub fn new(start: i64, values: Vec<u64>) -> Self {
        HilbertValues { start, values }
    }

    pub fn end(&self) -> i64 {
        self.start + self.values.len() as i64 - 1
    }

    pub fn get(&self, d: i64) -> Option<u64> {
        let i = usize::try_from(d - self.start).ok()?;
        self.values.get(i).copied()
    }
}

/// First degree `d >= p + l + 1` where `H(d + 1) > H(d)^<d - l - p>`, if any.
pub fn gasharov_violation(h: &HilbertValues, l: i64, p: u64) -> Result<Option<i64>, MacaulayError> {
    let first = p as i64 + l + 1;
    if h.start > first || h.end() <= first {
        return Err(MacaulayError::VacuousRange);
    }
    for d in first..h.end() {
        let (cur, next) = (h.get(d).unwrap(), h.get(d + 1).unwrap());
        if !macaulay_growth_ok(cur, next, d - l - p as i64)? {
            return Ok(Some(d));
        }
    }
    Ok(None)
}

/// Gasharov's growth bound `H(d + 1) <= H(d)^<d - l - p>` for every tested `d >= p + l + 1`.
pub fn gasharov_bound_ok(h: &HilbertValues, l: i64, p: u64) -> Result<bool, MacaulayError> {
    Ok(gasharov_violation(h, l, p)?.is_none())
}

/// `H(0) = 1` and `H(d)^<d> <= H(d + 1)` for `1 <= d < D`, where `h = [H(0), ..., H(D)]`.
///
/// The inequality runs opposite to Macaulay's growth bound, which is
/// [`macaulay_bound_holds`].
pub fn scheme_hf_criterion(h: &[u64]) -> Result<bool, MacaulayError> {
    scheme_hf_violation(h).map(|v| v.is_none())
}

/// First degree at which [`scheme_hf_criterion`] fails; `Some(0)` when `H(0) != 1`.
pub fn scheme_hf_violation(h: &[u64]) -> Result<Option<i64>, MacaulayError> {
    if h.first() != Some(&1) {
        return Ok(Some(0));
    }
    for d in 1..h.len().saturating_sub(1) {
        if macaulay_transform(h[d], d as i64)? > h[d + 1] {
            return Ok(Some(d as i64));
        }
    }
    Ok(None)
}

/// `H(0) = 1` and `H(d + 1) <= H(d)^<d>` for `1 <= d < D`: Macaulay's
/// characterization of Hilbert functions of standard graded quotients.
pub fn macaulay_bound_holds(h: &[u64]) -> Result<bool, MacaulayError> {
    if h.first() != Some(&1) {
        return Ok(false);
    }
    for d in 1..h.len().saturating_sub(1) {
        if !macaulay_growth_ok(h[d], h[d + 1], d as i64)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Every strictly decreasing top sequence for bottoms `d, d-1, ...` of
    /// length at most `d` whose value is `a`. Independent of the greedy rule.
    fn all_reps(a: u64, d: u64) -> Vec<Vec<u64>> {
        fn go(a: u64, j: u64, max_top: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
            if a == 0 {
                out.push(prefix.clone());
                return;
            }
            if j == 0 {
                return;
            }
            for k in j..=max_top {
                let b = binom(k, j).unwrap() as u64;
                if b > a {
                    break;
                }
                prefix.push(k);
                go(a - b, j - 1, k - 1, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(a, d, a + d, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn binom_conventions() {
        assert_eq!(binom(2, 3), Some(0));
        assert_eq!(binom(0, 0), Some(1));
        assert_eq!(binom(5, 0), Some(1));
        assert_eq!(binom(6, 4), Some(15));
        assert_eq!(binom(200, 100), None);
    }

    #[test]
    fn rep_examples() {
        let r = macaulay_rep(11, 3).unwrap();
        assert_eq!(r.tops, vec![5, 2]);
        assert_eq!(r.bottoms().collect::<Vec<_>>(), vec![3, 2]);
        assert!(macaulay_rep(0, 4).unwrap().tops.is_empty());
        assert_eq!(macaulay_rep(7, 1).unwrap().tops, vec![7]);
        assert_eq!(macaulay_rep(3, 0), Err(MacaulayError::InvalidIndex(0)));
    }

    #[test]
    fn transform_examples() {
        assert_eq!(macaulay_transform(11, 3), Ok(16));
        assert_eq!(macaulay_transform(0, 5), Ok(0));
        assert_eq!(macaulay_transform(3, 1), Ok(6));
        assert_eq!(
            macaulay_transform(2, -1),
            Err(MacaulayError::InvalidIndex(-1))
        );
    }

    #[test]
    fn growth_examples() {
        assert!(macaulay_growth_ok(11, 16, 3).unwrap());
        assert!(!macaulay_growth_ok(11, 17, 3).unwrap());
        assert!(macaulay_growth_ok(0, 0, 2).unwrap());
    }

    #[test]
    fn gasharov_examples() {
        let ones = HilbertValues::new(0, vec![1; 8]);
        assert!(gasharov_bound_ok(&ones, 0, 0).unwrap());
        let steep = HilbertValues::new(0, vec![1, 2, 4]);
        assert_eq!(gasharov_violation(&steep, 0, 0), Ok(Some(1)));
        assert!(!gasharov_bound_ok(&steep, 0, 0).unwrap());
        let short = HilbertValues::new(0, vec![1, 2]);
        assert_eq!(
            gasharov_bound_ok(&short, 0, 0),
            Err(MacaulayError::VacuousRange)
        );
        assert_eq!(
            gasharov_bound_ok(&ones, 0, 7),
            Err(MacaulayError::VacuousRange)
        );
    }

    #[test]
    fn scheme_criterion_examples() {
        assert!(!scheme_hf_criterion(&[1, 2, 1]).unwrap());
        assert!(!scheme_hf_criterion(&[2, 3, 4]).unwrap());
        assert!(scheme_hf_criterion(&[1, 1, 1, 1]).unwrap());
        assert_eq!(scheme_hf_violation(&[1, 2, 1]), Ok(Some(1)));
        // the classical bound accepts the same sequence
        assert!(macaulay_bound_holds(&[1, 2, 1]).unwrap());
        assert!(!macaulay_bound_holds(&[1, 2, 4]).unwrap());
    }

    #[test]
    fn rep_unique_and_reconstructs() {
        for d in 1..=6u64 {
            for a in 0..=2000u64 {
                let r = macaulay_rep(a, d as i64).unwrap();
                assert!(r.is_valid(), "a={a} d={d}");
                assert_eq!(r.value().unwrap(), a);
                assert_eq!(all_reps(a, d), vec![r.tops.clone()], "a={a} d={d}");
            }
        }
    }

    #[test]
    fn transform_monotone() {
        for d in 1..=5i64 {
            let t: Vec<u64> = (0..=500)
                .map(|a| macaulay_transform(a, d).unwrap())
                .collect();
            assert!(t.windows(2).all(|w| w[0] <= w[1]), "d={d}");
        }
    }
}
