//! Pansiot words and their cylindric representation.
//!
//! A word over `d` letters is Pansiot when (i) every factor of length `d−1`
//! has distinct letters and (ii) two consecutive occurrences of a letter are
//! followed by different letters. Consecutive occurrences of a letter are
//! then `d−1`, `d` or `d+1` apart; wound on a cylinder of circumference `d`
//! they give right-slanted, vertical and left-slanted sticks.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::words::{Letter, Word};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum PansiotProperty {
    /// Repeated letter inside a window of length `d−1`.
    DistinctWindow,
    /// Two consecutive occurrences of a letter followed by the same letter.
    DistinctSuccessors,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PansiotViolation {
    pub property: PansiotProperty,
    /// Position at which the violation is complete.
    pub index: usize,
    pub letter: Letter,
}

impl fmt::Display for PansiotViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = match self.property {
            PansiotProperty::DistinctWindow => "(i) repeated letter in a window of length d-1",
            PansiotProperty::DistinctSuccessors => "(ii) consecutive occurrences followed by the same letter",
        };
        write!(f, "{p} at index {} (letter {})", self.index, self.letter)
    }
}

/// First violation of (i) or (ii), scanning left to right; (i) is reported
/// first when both complete at the same index.
pub fn pansiot_violation(w: &[Letter], d: usize) -> Option<PansiotViolation> {
    let mut last: BTreeMap<Letter, usize> = BTreeMap::new();
    // previous occurrence of w[j] before j
    let mut prev: Vec<Option<usize>> = Vec::with_capacity(w.len());
    for (j, &y) in w.iter().enumerate() {
        let p = last.insert(y, j);
        prev.push(p);
        if let Some(p) = p {
            if j - p < d.saturating_sub(1) {
                return Some(PansiotViolation { property: PansiotProperty::DistinctWindow, index: j, letter: y });
            }
        }
        if j >= 1 {
            if let Some(s) = prev[j - 1] {
                if w[s + 1] == y {
                    return Some(PansiotViolation {
                        property: PansiotProperty::DistinctSuccessors,
                        index: j,
                        letter: w[j - 1],
                    });
                }
            }
        }
    }
    None
}

pub fn is_pansiot(w: &[Letter], d: usize) -> bool {
    pansiot_violation(w, d).is_none()
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum StickKind {
    /// Distance `d−1`.
    RightSlanted,
    /// Distance `d`.
    Vertical,
    /// Distance `d+1`.
    LeftSlanted,
}

impl StickKind {
    pub fn from_distance(dist: usize, d: usize) -> Option<StickKind> {
        match dist {
            x if x + 1 == d => Some(StickKind::RightSlanted),
            x if x == d => Some(StickKind::Vertical),
            x if x == d + 1 => Some(StickKind::LeftSlanted),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Stick {
    pub letter: Letter,
    pub first_pos: usize,
    pub second_pos: usize,
    pub kind: StickKind,
}

/// Classification from the sticks seen in a finite word.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum LetterClass {
    /// Right-slanted sticks and no left-slanted ones.
    Frequent,
    /// Left-slanted sticks and no right-slanted ones.
    Rare,
    /// Both slant kinds in one trace.
    ViolatesStar,
    /// No slanted stick observed.
    Undetermined,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TraceReport {
    pub letter: Letter,
    pub sticks: Vec<Stick>,
    pub class: LetterClass,
}

impl TraceReport {
    pub fn all(&self, kind: StickKind) -> bool {
        self.sticks.iter().all(|s| s.kind == kind)
    }
}

/// Consecutive occurrences whose distance is not `d−1`, `d` or `d+1`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DistanceViolation {
    pub letter: Letter,
    pub first_pos: usize,
    pub second_pos: usize,
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct StickReport {
    pub traces: Vec<TraceReport>,
    /// Sticks starting at adjacent positions with the same kind.
    pub parallel: Vec<(Stick, Stick)>,
    pub distance_violations: Vec<DistanceViolation>,
}

impl StickReport {
    pub fn class_of(&self, letter: Letter) -> Option<LetterClass> {
        self.traces.iter().find(|t| t.letter == letter).map(|t| t.class)
    }

    pub fn star_violations(&self) -> impl Iterator<Item = &TraceReport> {
        self.traces.iter().filter(|t| t.class == LetterClass::ViolatesStar)
    }

    /// All frequent traces are right-slanted only, or all rare traces are
    /// left-slanted only.
    pub fn trace_disjunction(&self) -> bool {
        let all = |class, kind| self.traces.iter().filter(|t| t.class == class).all(|t| t.all(kind));
        all(LetterClass::Frequent, StickKind::RightSlanted) || all(LetterClass::Rare, StickKind::LeftSlanted)
    }
}

/// Sticks of every letter without checking that `w` is Pansiot.
pub fn trace_sticks(w: &[Letter], d: usize) -> StickReport {
    let mut last: BTreeMap<Letter, usize> = BTreeMap::new();
    let mut by_letter: BTreeMap<Letter, Vec<Stick>> = BTreeMap::new();
    let mut starting_at: Vec<Option<Stick>> = vec![None; w.len()];
    let mut report = StickReport::default();
    for (j, &x) in w.iter().enumerate() {
        let Some(i) = last.insert(x, j) else {
            by_letter.entry(x).or_default();
            continue;
        };
        match StickKind::from_distance(j - i, d) {
            Some(kind) => {
                let s = Stick { letter: x, first_pos: i, second_pos: j, kind };
                by_letter.entry(x).or_default().push(s);
                starting_at[i] = Some(s);
            }
            None => report.distance_violations.push(DistanceViolation { letter: x, first_pos: i, second_pos: j }),
        }
    }
    for pair in starting_at.windows(2) {
        if let [Some(a), Some(b)] = pair {
            if a.kind == b.kind {
                report.parallel.push((*a, *b));
            }
        }
    }
    report.traces = by_letter
        .into_iter()
        .map(|(letter, sticks)| {
            let right = sticks.iter().any(|s| s.kind == StickKind::RightSlanted);
            let left = sticks.iter().any(|s| s.kind == StickKind::LeftSlanted);
            let class = match (right, left) {
                (true, true) => LetterClass::ViolatesStar,
                (true, false) => LetterClass::Frequent,
                (false, true) => LetterClass::Rare,
                (false, false) => LetterClass::Undetermined,
            };
            TraceReport { letter, sticks, class }
        })
        .collect();
    report
}

/// Sticks of a Pansiot word; the first (i)/(ii) violation otherwise.
pub fn sticks(w: &[Letter], d: usize) -> Result<StickReport, PansiotViolation> {
    match pansiot_violation(w, d) {
        Some(v) => Err(v),
        None => Ok(trace_sticks(w, d)),
    }
}

/// Residue classes modulo `modulus` in which every position that can start
/// a stick inside the word starts a vertical stick of the given letter
/// class.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ResidueClasses {
    pub modulus: usize,
    /// Vertical sticks of the letter class.
    pub vertical_sticks: usize,
    pub full: Vec<usize>,
}

impl ResidueClasses {
    fn scan(report: &StickReport, class: LetterClass, modulus: usize, d: usize, len: usize) -> Self {
        let mut starts = vec![false; len];
        for t in report.traces.iter().filter(|t| t.class == class) {
            for s in t.sticks.iter().filter(|s| s.kind == StickKind::Vertical) {
                starts[s.first_pos] = true;
            }
        }
        let last_start = len - d;
        let full =
            (0..modulus).filter(|&p| p < last_start && (p..last_start).step_by(modulus).all(|i| starts[i])).collect();
        ResidueClasses { modulus, vertical_sticks: starts.iter().filter(|&&b| b).count(), full }
    }
}

/// (†): positions `≡ p (mod d+1)` carry vertical sticks of frequent letters.
/// (‡): positions `≡ q (mod d−1)` carry vertical sticks of rare letters.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ResidueReport {
    pub frequent: ResidueClasses,
    pub rare: ResidueClasses,
}

impl ResidueReport {
    /// (†) and (‡) at once, which a balanced Pansiot sequence cannot show.
    pub fn conflict(&self) -> bool {
        !self.frequent.full.is_empty() && !self.rare.full.is_empty()
    }
}

/// `None` unless `w` is Pansiot and `|w| ≥ 3(d+1)`.
pub fn residue_detectors(w: &[Letter], d: usize) -> Option<ResidueReport> {
    if d < 3 || w.len() < 3 * (d + 1) {
        return None;
    }
    let report = sticks(w, d).ok()?;
    Some(ResidueReport {
        frequent: ResidueClasses::scan(&report, LetterClass::Frequent, d + 1, d, w.len()),
        rare: ResidueClasses::scan(&report, LetterClass::Rare, d - 1, d, w.len()),
    })
}

/// Bounded depth-first enumeration of balanced Pansiot words.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SearchConfig {
    pub d: usize,
    /// Target length; defaults to `6(d+1)`.
    pub depth: usize,
    /// Stop collecting complete words after this many.
    pub max_words: usize,
}

impl SearchConfig {
    pub fn new(d: usize) -> Self {
        SearchConfig { d, depth: 6 * (d + 1), max_words: usize::MAX }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SearchOutcome {
    /// Words of length `depth`, in lexicographic order.
    pub words: Vec<Word>,
    pub nodes: u64,
    /// Words that cannot be extended before reaching `depth`.
    pub dead_ends: u64,
    pub longest_dead_end: usize,
    /// More complete words exist than `max_words`.
    pub truncated: bool,
}

impl SearchOutcome {
    pub fn merge(mut self, other: SearchOutcome, max_words: usize) -> SearchOutcome {
        self.words.extend(other.words);
        self.words.sort();
        self.truncated |= other.truncated || self.words.len() > max_words;
        self.words.truncate(max_words);
        self.nodes += other.nodes;
        self.dead_ends += other.dead_ends;
        self.longest_dead_end = self.longest_dead_end.max(other.longest_dead_end);
        self
    }
}

struct Searcher {
    d: usize,
    depth: usize,
    max_words: usize,
    w: Vec<Letter>,
    prev: Vec<Option<usize>>,
    last: Vec<Option<usize>>,
    /// counts[i][x]: occurrences of x in w[..i]
    counts: Vec<Vec<u32>>,
    /// bounds[L-1][x] = (min, max) count of x over windows of length L
    bounds: Vec<Vec<(u32, u32)>>,
    undo: Vec<(usize, usize, (u32, u32))>,
    out: SearchOutcome,
}

impl Searcher {
    fn new(cfg: &SearchConfig) -> Self {
        Searcher {
            d: cfg.d,
            depth: cfg.depth,
            max_words: cfg.max_words,
            w: Vec::new(),
            prev: Vec::new(),
            last: vec![None; cfg.d],
            counts: vec![vec![0; cfg.d]],
            bounds: Vec::new(),
            undo: Vec::new(),
            out: SearchOutcome::default(),
        }
    }

    /// Appends `y` if (i), (ii) and balance still hold; returns the undo mark.
    fn push(&mut self, y: Letter) -> Option<usize> {
        let j = self.w.len();
        let d = self.d;
        let p = self.last[y as usize];
        if p.is_some_and(|p| j - p < d - 1) {
            return None;
        }
        if j >= 1 {
            if let Some(s) = self.prev[j - 1] {
                if self.w[s + 1] == y {
                    return None;
                }
            }
        }
        let mut row = self.counts[j].clone();
        row[y as usize] += 1;
        let n = j + 1;
        let mark = self.undo.len();
        if self.bounds.len() < n {
            self.bounds.push(vec![(u32::MAX, 0); d]);
        }
        for len in 1..=n {
            let start = &self.counts[n - len];
            for x in 0..d {
                let c = row[x] - start[x];
                let (lo, hi) = self.bounds[len - 1][x];
                if lo != u32::MAX && (c + 1 < hi || c > lo + 1) {
                    self.rollback(mark);
                    return None;
                }
                if c < lo || c > hi {
                    self.undo.push((len - 1, x, (lo, hi)));
                    self.bounds[len - 1][x] = (lo.min(c), hi.max(c));
                }
            }
        }
        self.w.push(y);
        self.prev.push(p);
        self.last[y as usize] = Some(j);
        self.counts.push(row);
        Some(mark)
    }

    fn rollback(&mut self, mark: usize) {
        while self.undo.len() > mark {
            let (l, x, b) = self.undo.pop().expect("above mark");
            self.bounds[l][x] = b;
        }
    }

    fn pop(&mut self, mark: usize) {
        let y = self.w.pop().expect("non-empty");
        let p = self.prev.pop().expect("non-empty");
        self.last[y as usize] = p;
        self.counts.pop();
        self.rollback(mark);
    }

    fn run(&mut self) {
        self.out.nodes += 1;
        if self.w.len() >= self.depth {
            if self.out.words.len() < self.max_words {
                self.out.words.push(Word::from_letters(&self.w));
            } else {
                self.out.truncated = true;
            }
            return;
        }
        let mut extended = false;
        for y in 0..self.d as Letter {
            if let Some(mark) = self.push(y) {
                extended = true;
                self.run();
                self.pop(mark);
            }
        }
        if !extended {
            self.out.dead_ends += 1;
            self.out.longest_dead_end = self.out.longest_dead_end.max(self.w.len());
        }
    }
}

/// The canonical start `0 1 … d−2`: by (i) every Pansiot word over `d`
/// letters begins with `d−1` distinct letters, so up to renaming it begins
/// this way.
pub fn canonical_start(d: usize) -> Vec<Letter> {
    (0..d.saturating_sub(1) as Letter).collect()
}

/// Extensions of `prefix` of length `cfg.depth`. Returns `None` if `prefix`
/// itself is not a balanced Pansiot word over `d` letters.
pub fn search_from(cfg: &SearchConfig, prefix: &[Letter]) -> Option<SearchOutcome> {
    if cfg.d < 3 || prefix.iter().any(|&l| l as usize >= cfg.d) {
        return None;
    }
    let mut s = Searcher::new(cfg);
    for &y in prefix {
        s.push(y)?;
    }
    s.run();
    Some(s.out)
}

/// Every balanced Pansiot word of length `cfg.depth` starting with
/// [`canonical_start`].
pub fn search(cfg: &SearchConfig) -> SearchOutcome {
    search_from(cfg, &canonical_start(cfg.d)).unwrap_or_default()
}
