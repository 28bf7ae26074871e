//! Periods and exponents.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::Range;

use super::Letter;
use crate::{Error, Fraction, Result};

/// Failure function: `border[i]` is the length of the longest proper border of
/// `w[..=i]`.
pub fn border_array(w: &[Letter]) -> Vec<usize> {
    let mut border = vec![0usize; w.len()];
    for i in 1..w.len() {
        let mut b = border[i - 1];
        while b > 0 && w[i] != w[b] {
            b = border[b - 1];
        }
        if w[i] == w[b] {
            b += 1;
        }
        border[i] = b;
    }
    border
}

pub fn minimal_period(w: &[Letter]) -> Result<usize> {
    let border = border_array(w);
    match border.last() {
        Some(&b) => Ok(w.len() - b),
        None => Err(Error::EmptyWord),
    }
}

/// `|w| / minimal_period(w)` in lowest terms.
pub fn exponent(w: &[Letter]) -> Result<Fraction> {
    let p = minimal_period(w)?;
    Ok(Fraction::new(w.len() as u64, p as u64))
}

/// A factor `w[start..start + len]` having period `period`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RepetitionCandidate {
    pub start: usize,
    pub len: usize,
    pub period: usize,
}

impl RepetitionCandidate {
    /// Larger exponent wins; ties go to the smaller start, then the shorter
    /// factor.
    pub fn better_than(&self, other: &RepetitionCandidate) -> bool {
        let lhs = self.len as u128 * other.period as u128;
        let rhs = other.len as u128 * self.period as u128;
        match lhs.cmp(&rhs) {
            Ordering::Greater => true,
            Ordering::Less => false,
            Ordering::Equal => (self.start, self.len) < (other.start, other.len),
        }
    }

    pub fn merge(self, other: RepetitionCandidate) -> RepetitionCandidate {
        if other.better_than(&self) {
            other
        } else {
            self
        }
    }

    pub fn exponent(&self) -> Fraction {
        Fraction::new(self.len as u64, self.period as u64)
    }
}

/// Best maximal repetition whose period lies in `periods`.
///
/// For a period `p`, every maximal run of positions with `w[i] == w[i + p]`
/// of length `k` yields the factor of length `k + p` with period `p`. The
/// overall maximum exponent is the best such ratio over all `p`, and the
/// factor attaining it has `p` as its minimal period (a smaller period would
/// give a strictly larger exponent). Sharding over disjoint period ranges
/// and merging with [`RepetitionCandidate::merge`] reproduces the sequential
/// result exactly.
pub fn scan_periods(w: &[Letter], periods: Range<usize>) -> Option<RepetitionCandidate> {
    if w.is_empty() {
        return None;
    }
    Some(scan_periods_from(w, periods, RepetitionCandidate { start: 0, len: 1, period: 1 }))
}

/// [`scan_periods`] seeded with a candidate found elsewhere; a good seed
/// lets the scan stop earlier and never changes the merged result.
pub fn scan_periods_from(w: &[Letter], periods: Range<usize>, seed: RepetitionCandidate) -> RepetitionCandidate {
    let n = w.len();
    let mut best = seed;
    let consider = |c: RepetitionCandidate, best: &mut RepetitionCandidate| {
        if c.better_than(best) {
            *best = c;
        }
    };
    for p in periods.start.max(1)..periods.end.min(n) {
        // no factor of period p can beat n/p
        if (best.len as u128) * (p as u128) > (n as u128) * (best.period as u128) {
            break;
        }
        let mut run = 0usize;
        for (i, (x, y)) in w.iter().zip(&w[p..]).enumerate() {
            if x == y {
                run += 1;
            } else if run > 0 {
                consider(RepetitionCandidate { start: i - run, len: run + p, period: p }, &mut best);
                run = 0;
            }
        }
        if run > 0 {
            consider(RepetitionCandidate { start: n - p - run, len: run + p, period: p }, &mut best);
        }
    }
    best
}

/// Exact maximum exponent over all non-empty factors of `w`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MaxExponent {
    pub exponent: Fraction,
    pub start: usize,
    pub len: usize,
    pub period: usize,
}

impl From<RepetitionCandidate> for MaxExponent {
    fn from(c: RepetitionCandidate) -> Self {
        MaxExponent { exponent: c.exponent(), start: c.start, len: c.len, period: c.period }
    }
}

/// Witness is the smallest start, then the shortest factor, among factors of
/// maximal exponent.
pub fn max_factor_exponent(w: &[Letter]) -> Result<MaxExponent> {
    scan_periods(w, 1..w.len()).map(MaxExponent::from).ok_or(Error::EmptyWord)
}
