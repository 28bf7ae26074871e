//! Occurrences, return words and special factors.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use super::{border_array, Letter, Word};
use crate::{Error, Result};

/// All start indices of `f` in `w`, ascending (Knuth–Morris–Pratt).
pub fn occurrences(w: &[Letter], f: &[Letter]) -> Result<Vec<usize>> {
    if f.is_empty() {
        return Err(Error::EmptyFactor);
    }
    let border = border_array(f);
    let mut out = Vec::new();
    let mut matched = 0usize;
    for (i, &c) in w.iter().enumerate() {
        while matched > 0 && f[matched] != c {
            matched = border[matched - 1];
        }
        if f[matched] == c {
            matched += 1;
        }
        if matched == f.len() {
            out.push(i + 1 - f.len());
            matched = border[matched - 1];
        }
    }
    Ok(out)
}

/// Distinct words between consecutive occurrences of `f` inside `w`,
/// sorted.
pub fn return_words(w: &Word, f: &[Letter]) -> Result<Vec<Word>> {
    let occ = occurrences(w, f)?;
    if occ.len() < 2 {
        return Err(Error::InsufficientOccurrences { found: occ.len() });
    }
    let set: BTreeSet<&[Letter]> = occ.windows(2).map(|p| &w[p[0]..p[1]]).collect();
    set.into_iter().map(|s| Word::new(s.to_vec(), w.alphabet_size())).collect()
}

/// Fixed-capacity set of letters.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct LetterSet([u64; 4]);

impl LetterSet {
    pub fn insert(&mut self, l: Letter) {
        self.0[(l >> 6) as usize] |= 1 << (l & 63);
    }

    pub fn contains(&self, l: Letter) -> bool {
        self.0[(l >> 6) as usize] & (1 << (l & 63)) != 0
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Length-`n` factors classified by the extensions observed inside the
/// window.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SpecialFactors {
    pub left: Vec<Word>,
    pub right: Vec<Word>,
    pub bispecial: Vec<Word>,
}

pub fn special_factors(w: &Word, n: usize) -> Result<SpecialFactors> {
    if n >= w.len() {
        return Err(Error::IndexOutOfRange(alloc::format!("factor length {n} must be below word length {}", w.len())));
    }
    let mut ext: BTreeMap<&[Letter], (LetterSet, LetterSet)> = BTreeMap::new();
    for i in 0..=w.len() - n {
        let e = ext.entry(&w[i..i + n]).or_default();
        if i > 0 {
            e.0.insert(w[i - 1]);
        }
        if i + n < w.len() {
            e.1.insert(w[i + n]);
        }
    }
    let mut out = SpecialFactors::default();
    for (f, (left, right)) in ext {
        let word = || Word::new(f.to_vec(), w.alphabet_size());
        if left.len() >= 2 {
            out.left.push(word()?);
        }
        if right.len() >= 2 {
            out.right.push(word()?);
        }
        if left.len() >= 2 && right.len() >= 2 {
            out.bispecial.push(word()?);
        }
    }
    Ok(out)
}

/// Distances between consecutive occurrences, per letter id.
pub fn letter_gaps(w: &[Letter]) -> BTreeMap<Letter, BTreeSet<usize>> {
    let mut last: BTreeMap<Letter, usize> = BTreeMap::new();
    let mut gaps: BTreeMap<Letter, BTreeSet<usize>> = BTreeMap::new();
    for (i, &l) in w.iter().enumerate() {
        if let Some(prev) = last.insert(l, i) {
            gaps.entry(l).or_default().insert(i - prev);
        }
    }
    gaps
}
