//! Balance checking.
//!
//! Per letter, with occurrence positions `P[0] < … < P[m-1]`: the shortest
//! window holding `c + 2` copies has length `min_i (P[i+c+1] - P[i]) + 1`,
//! and the longest window holding at most `c` copies is the longest stretch
//! strictly between `P[i]` and `P[i+c+1]` (or before `P[c]`, or after
//! `P[m-1-c]`). The word is unbalanced for that letter iff, for some `c`, the
//! light window is at least as long as the heavy one. Cost is `O(m²)` per
//! letter.

use alloc::vec::Vec;

use super::Letter;

/// Two equal-length factors whose counts of `letter` differ by at least two.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BalanceViolation {
    pub letter: Letter,
    pub len: usize,
    pub heavy_start: usize,
    pub light_start: usize,
}

pub fn is_balanced(w: &[Letter]) -> bool {
    balance_violation(w).is_none()
}

/// First violation by letter id, then by the smallest count gap `c`.
pub fn balance_violation(w: &[Letter]) -> Option<BalanceViolation> {
    let alphabet = w.iter().map(|&l| l as usize + 1).max().unwrap_or(0);
    let mut positions: Vec<Vec<usize>> = (0..alphabet).map(|_| Vec::new()).collect();
    for (i, &l) in w.iter().enumerate() {
        positions[l as usize].push(i);
    }
    positions.iter().enumerate().find_map(|(letter, pos)| letter_violation(letter as Letter, pos, w.len()))
}

fn letter_violation(letter: Letter, pos: &[usize], n: usize) -> Option<BalanceViolation> {
    let m = pos.len();
    for c in 0..m.saturating_sub(1) {
        // heavy: shortest window with c + 2 occurrences
        let (heavy_start, span) =
            (0..m - c - 1).map(|i| (pos[i], pos[i + c + 1] - pos[i])).min_by_key(|&(start, span)| (span, start))?;
        let len = span + 1;
        // light: earliest window of length >= len with at most c occurrences
        let mut light = None;
        if pos[c] >= len {
            light = Some(0);
        }
        if light.is_none() {
            light = (0..m - c - 1).find(|&i| pos[i + c + 1] - pos[i] > len).map(|i| pos[i] + 1);
        }
        if light.is_none() && n - 1 - pos[m - 1 - c] >= len {
            light = Some(pos[m - 1 - c] + 1);
        }
        if let Some(light_start) = light {
            return Some(BalanceViolation { letter, len, heavy_start, light_start });
        }
    }
    None
}
