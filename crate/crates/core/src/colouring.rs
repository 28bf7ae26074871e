//! Constant gap sequences, colourings and the named balanced presets.
//!
//! `colour(u, y, y')` replaces the i-th `a` of `u` by `y[i]` and the i-th `b`
//! by `y'[i]`; both constant gap sequences start at phase 0. The
//! discolouration `π` maps the letters of `y` back to `a` and those of `y'`
//! back to `b`.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::sturmian::{ContinuedFraction, ThetaForm};
use crate::words::{Alphabet, Letter, Word};
use crate::{Error, Result};

/// Periodic sequence in which each letter recurs at one fixed distance.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConstantGapSequence {
    period_word: Vec<Letter>,
    gaps: BTreeMap<Letter, usize>,
}

/// Checks gaps on the doubled period word.
pub fn validate_constant_gap(period_word: &[Letter]) -> Result<ConstantGapSequence> {
    if period_word.is_empty() {
        return Err(Error::EmptyWord);
    }
    let n = period_word.len();
    let mut gaps = BTreeMap::new();
    let mut letters: Vec<Letter> = period_word.to_vec();
    letters.sort_unstable();
    letters.dedup();
    for &letter in &letters {
        let pos: Vec<usize> = (0..2 * n).filter(|&i| period_word[i % n] == letter).collect();
        let first = pos[1] - pos[0];
        if let Some(w) = pos.windows(2).find(|w| w[1] - w[0] != first) {
            return Err(Error::NonConstantGap { letter, first, second: w[1] - w[0] });
        }
        gaps.insert(letter, first);
    }
    Ok(ConstantGapSequence { period_word: period_word.to_vec(), gaps })
}

impl ConstantGapSequence {
    pub fn period_word(&self) -> &[Letter] {
        &self.period_word
    }

    pub fn gaps(&self) -> &BTreeMap<Letter, usize> {
        &self.gaps
    }

    pub fn gap(&self, letter: Letter) -> Option<usize> {
        self.gaps.get(&letter).copied()
    }

    /// Least common multiple of the gaps.
    pub fn minimal_period(&self) -> usize {
        self.gaps.values().fold(1, |acc, &g| acc.lcm(&g))
    }

    pub fn letter_at(&self, i: usize) -> Letter {
        self.period_word[i % self.period_word.len()]
    }

    pub fn contains(&self, letter: Letter) -> bool {
        self.gaps.contains_key(&letter)
    }
}

/// Which letters discolour to `a` (true) and which to `b` (false).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlphabetSplit {
    class: Vec<Option<bool>>,
}

impl AlphabetSplit {
    pub fn new(y: &ConstantGapSequence, y_prime: &ConstantGapSequence) -> Result<Self> {
        let size = y.gaps.keys().chain(y_prime.gaps.keys()).map(|&l| l as usize + 1).max().unwrap_or(0);
        let mut class = alloc::vec![None; size];
        for &l in y.gaps.keys() {
            class[l as usize] = Some(true);
        }
        for &l in y_prime.gaps.keys() {
            if class[l as usize].is_some() {
                return Err(Error::AlphabetsNotDisjoint);
            }
            class[l as usize] = Some(false);
        }
        Ok(AlphabetSplit { class })
    }

    pub fn is_a(&self, letter: Letter) -> Option<bool> {
        self.class.get(letter as usize).copied().flatten()
    }

    pub fn alphabet_size(&self) -> usize {
        self.class.len()
    }
}

pub fn colour(u: &[Letter], y: &ConstantGapSequence, y_prime: &ConstantGapSequence) -> Result<Word> {
    let split = AlphabetSplit::new(y, y_prime)?;
    let (mut ia, mut ib) = (0usize, 0usize);
    let mut out = Vec::with_capacity(u.len());
    for &l in u {
        match l {
            0 => {
                out.push(y.letter_at(ia));
                ia += 1;
            }
            1 => {
                out.push(y_prime.letter_at(ib));
                ib += 1;
            }
            letter => return Err(Error::NotBinary { letter }),
        }
    }
    Word::new(out, split.alphabet_size())
}

/// `π(v)` over `{a = 0, b = 1}`.
pub fn discolour(v: &[Letter], split: &AlphabetSplit) -> Result<Word> {
    let letters = v
        .iter()
        .map(|&l| match split.is_a(l) {
            Some(true) => Ok(0),
            Some(false) => Ok(1),
            None => Err(Error::UnclassifiedLetter(l)),
        })
        .collect::<Result<Vec<_>>>()?;
    Word::new(letters, 2)
}

/// Splits `"1'2'3'"`, `"1p2p3p"` or `"1′2′"` into one token per letter; a
/// trailing prime marker is normalized to `p`.
pub fn tokenize(text: &str) -> Vec<String> {
    let mut tokens: Vec<String> = Vec::new();
    for c in text.chars().filter(|c| !c.is_whitespace()) {
        match (c, tokens.last_mut()) {
            ('\'' | '′' | 'p', Some(last)) if !last.ends_with('p') => last.push('p'),
            _ => tokens.push(c.to_string()),
        }
    }
    tokens
}

/// `v = colour(u, y, y')` with `u` the standard sequence of `slope`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BalancedSpec {
    pub slope: ContinuedFraction,
    pub y: ConstantGapSequence,
    pub y_prime: ConstantGapSequence,
    pub alphabet: Alphabet,
}

impl BalancedSpec {
    /// Letters of `y` get ids in order of first appearance, followed by those
    /// of `y'`.
    pub fn from_tokens(slope: ContinuedFraction, y: &[String], y_prime: &[String]) -> Result<Self> {
        if y.is_empty() || y_prime.is_empty() {
            return Err(Error::EmptyWord);
        }
        let mut names: Vec<String> = Vec::new();
        let ids = |tokens: &[String], names: &mut Vec<String>, start: usize| -> Result<Vec<Letter>> {
            tokens
                .iter()
                .map(|t| match names.iter().position(|n| n == t) {
                    Some(i) if i >= start => Ok(i as Letter),
                    Some(_) => Err(Error::AlphabetsNotDisjoint),
                    None => {
                        names.push(t.clone());
                        Ok((names.len() - 1) as Letter)
                    }
                })
                .collect()
        };
        let y_ids = ids(y, &mut names, 0)?;
        let start = names.len();
        let y_prime_ids = ids(y_prime, &mut names, start)?;
        let alphabet = Alphabet::new(names)?;
        Ok(BalancedSpec {
            slope,
            y: validate_constant_gap(&y_ids)?,
            y_prime: validate_constant_gap(&y_prime_ids)?,
            alphabet,
        })
    }

    pub fn from_text(slope: ContinuedFraction, y: &str, y_prime: &str) -> Result<Self> {
        BalancedSpec::from_tokens(slope, &tokenize(y), &tokenize(y_prime))
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet.len()
    }

    pub fn split(&self) -> AlphabetSplit {
        AlphabetSplit::new(&self.y, &self.y_prime).expect("validated at construction")
    }

    /// Coloured prefix of length `len`.
    pub fn prefix(&self, len: usize) -> Word {
        let u = self.slope.standard_prefix(len);
        colour(&u, &self.y, &self.y_prime).expect("validated at construction")
    }

    /// `ρ(v) = ρ_a(u)/gap` or `ρ_b(u)/gap`, with `ρ_a(u) = θ/(1+θ)` and
    /// `ρ_b(u) = 1/(1+θ)`.
    pub fn letter_frequency(&self, letter: Letter) -> Result<ThetaForm> {
        let (numer, gap) = if let Some(g) = self.y.gap(letter) {
            ((BigInt::from(1), BigInt::from(0)), g)
        } else if let Some(g) = self.y_prime.gap(letter) {
            ((BigInt::from(0), BigInt::from(1)), g)
        } else {
            return Err(Error::UnknownLetter(alloc::format!("{letter}")));
        };
        let g = BigInt::from(gap);
        Ok(ThetaForm::new(numer, (g.clone(), g)))
    }

    /// `Some(δ)` when `y = (1 2 … δ)^ω` and `y' = (1' … δ')^ω` up to naming,
    /// i.e. both periods consist of δ distinct letters.
    pub fn cyclic_delta(&self) -> Option<usize> {
        let delta = self.y.period_word.len();
        let cyclic = |s: &ConstantGapSequence| s.period_word.len() == delta && s.gaps.len() == delta;
        (cyclic(&self.y) && cyclic(&self.y_prime)).then_some(delta)
    }
}

/// Named sequences reaching or probing the lower bound.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Preset {
    /// `x_{2δ}`: slope `[0; 1, ⌊δ/2⌋, (1)]`, `y = (1…δ)^ω`, `y' = (1'…δ')^ω`.
    X2Delta(usize),
    /// Slope `[0; 1, 3, (2)]` with `y = (123456)^ω`, `y' = (1'…6')^ω`.
    X12,
    /// Slope `[0; 5, 1, (1, 1, 1, 2)]`, `y = (12)^ω` and a period-40 `y'`.
    X11,
}

pub const X11_Y_PRIME: &str = "1'2'3'4'5'6'7'8'1'9'3'2'5'4'7'6'1'8'3'9'5'2'7'4'1'6'3'8'5'9'7'2'1'4'3'6'5'8'7'9'";

impl Preset {
    pub fn spec(self) -> Result<BalancedSpec> {
        let cyclic = |delta: usize, primed: bool| -> Vec<String> {
            (1..=delta).map(|i| if primed { alloc::format!("{i}p") } else { i.to_string() }).collect()
        };
        match self {
            Preset::X2Delta(delta) => {
                if delta < 6 {
                    return Err(Error::DeltaTooSmall(delta));
                }
                let slope = ContinuedFraction::new(alloc::vec![1, delta as u64 / 2], alloc::vec![1])?;
                BalancedSpec::from_tokens(slope, &cyclic(delta, false), &cyclic(delta, true))
            }
            Preset::X12 => {
                let slope = ContinuedFraction::new(alloc::vec![1, 3], alloc::vec![2])?;
                BalancedSpec::from_tokens(slope, &cyclic(6, false), &cyclic(6, true))
            }
            Preset::X11 => {
                let slope = ContinuedFraction::new(alloc::vec![5, 1], alloc::vec![1, 1, 1, 2])?;
                BalancedSpec::from_text(slope, "12", X11_Y_PRIME)
            }
        }
    }

    /// Alphabet size of the coloured sequence.
    pub fn alphabet_size(self) -> usize {
        match self {
            Preset::X2Delta(delta) => 2 * delta,
            Preset::X12 => 12,
            Preset::X11 => 11,
        }
    }
}

impl FromStr for Preset {
    type Err = Error;

    /// `x12`, `x11`, `x2delta:<δ>` (also `x2delta(<δ>)`).
    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        match lower.as_str() {
            "x12" => return Ok(Preset::X12),
            "x11" => return Ok(Preset::X11),
            _ => {}
        }
        let delta = lower
            .strip_prefix("x2delta")
            .map(|r| r.trim_start_matches([':', '(', '=']).trim_end_matches(')'))
            .and_then(|r| r.parse::<usize>().ok())
            .ok_or_else(|| Error::UnknownPreset(s.to_string()))?;
        if delta < 6 {
            return Err(Error::DeltaTooSmall(delta));
        }
        Ok(Preset::X2Delta(delta))
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Preset::X2Delta(d) => write!(f, "x2delta:{d}"),
            Preset::X12 => write!(f, "x12"),
            Preset::X11 => write!(f, "x11"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{is_balanced, letter_gaps};
    use crate::Rational;
    use core::cmp::Ordering;

    fn text_gap(period: &str) -> Result<ConstantGapSequence> {
        let alphabet = Alphabet::from_chars("0123456789").unwrap();
        validate_constant_gap(&alphabet.parse(period).unwrap())
    }

    #[test]
    fn constant_gap_examples() {
        let y = text_gap("0102").unwrap();
        assert_eq!(y.gaps().iter().map(|(&l, &g)| (l, g)).collect::<Vec<_>>(), [(0, 2), (1, 4), (2, 4)]);
        assert_eq!(y.minimal_period(), 4);
        let y = text_gap("123456").unwrap();
        assert!(y.gaps().values().all(|&g| g == 6));
        assert_eq!(text_gap("011"), Err(Error::NonConstantGap { letter: 1, first: 1, second: 2 }));
        assert_eq!(validate_constant_gap(&[]), Err(Error::EmptyWord));
    }

    #[test]
    fn example_colouring() {
        let spec = BalancedSpec::from_text(ContinuedFraction::fibonacci(), "AB", "0102").unwrap();
        let v = spec.prefix(31);
        assert_eq!(spec.alphabet.render(&v), "0A10B2A01B02A0B10A2B01A02B0A10B");
        let u = discolour(&v, &spec.split()).unwrap();
        assert_eq!(Alphabet::binary().render(&u[..5]), "babba");
    }

    #[test]
    fn tiny_colouring() {
        let spec = BalancedSpec::from_text(ContinuedFraction::fibonacci(), "1", "2").unwrap();
        let v = colour(&[0, 1], &spec.y, &spec.y_prime).unwrap();
        assert_eq!(spec.alphabet.render(&v), "12");
        assert_eq!(colour(&[2], &spec.y, &spec.y_prime), Err(Error::NotBinary { letter: 2 }));
        assert_eq!(discolour(&[5], &spec.split()), Err(Error::UnclassifiedLetter(5)));
    }

    #[test]
    fn alphabets_must_be_disjoint() {
        let r = BalancedSpec::from_text(ContinuedFraction::fibonacci(), "12", "21");
        assert_eq!(r, Err(Error::AlphabetsNotDisjoint));
    }

    #[test]
    fn tokenizer_normalizes_primes() {
        assert_eq!(tokenize("1'2′3p"), ["1p", "2p", "3p"]);
        assert_eq!(tokenize("AB"), ["A", "B"]);
    }

    #[test]
    fn presets() {
        let x11 = Preset::X11.spec().unwrap();
        let rendered: String =
            x11.y_prime.period_word().iter().map(|&l| x11.alphabet.name(l).replace('p', "'")).collect();
        assert_eq!(rendered, X11_Y_PRIME);
        assert_eq!(x11.alphabet_size(), 11);
        assert_eq!(x11.y_prime.minimal_period(), 40);
        let x12 = Preset::X12.spec().unwrap();
        assert_eq!(x12.slope.to_string(), "[0; 1, 3, (2)]");
        assert_eq!(x12.cyclic_delta(), Some(6));
        assert_eq!(Preset::X2Delta(7).spec().unwrap().slope.to_string(), "[0; 1, 3, (1)]");
        assert_eq!(Preset::X2Delta(5).spec(), Err(Error::DeltaTooSmall(5)));
        assert_eq!("x2delta:9".parse::<Preset>().unwrap(), Preset::X2Delta(9));
        assert!("x13".parse::<Preset>().is_err());
        assert!("x2delta:4".parse::<Preset>().is_err());
        assert_eq!(x11.cyclic_delta(), None);
    }

    #[test]
    fn frequencies() {
        let q = |n: i64, d: i64| Rational::new(n.into(), d.into());
        let fib = ContinuedFraction::fibonacci();
        let spec = BalancedSpec::from_text(fib.clone(), "AB", "0102").unwrap();
        let phi = (5f64.sqrt() - 1.0) / 2.0;
        let zero = spec.alphabet.index_of("0").unwrap();
        let a = spec.alphabet.index_of("A").unwrap();
        assert!((spec.letter_frequency(zero).unwrap().approx_f64(&fib) - phi / 2.0).abs() < 1e-12);
        assert!((spec.letter_frequency(a).unwrap().approx_f64(&fib) - phi * phi / 2.0).abs() < 1e-12);
        assert!(spec.letter_frequency(40).is_err());

        let x12 = Preset::X12.spec().unwrap();
        let primed = x12.alphabet.index_of("1p").unwrap();
        let f = x12.letter_frequency(primed).unwrap();
        assert_eq!(f.cmp_rational(&x12.slope, &q(1, 11)), Ordering::Greater);
        assert_eq!(f.cmp_rational(&x12.slope, &q(1, 10)), Ordering::Less);
    }

    #[test]
    fn presets_are_balanced_and_discolour_to_standard() {
        for preset in [Preset::X12, Preset::X11, Preset::X2Delta(6), Preset::X2Delta(7), Preset::X2Delta(10)] {
            let spec = preset.spec().unwrap();
            let v = spec.prefix(5000);
            assert!(is_balanced(&v), "{preset}");
            assert_eq!(discolour(&v, &spec.split()).unwrap(), spec.slope.standard_prefix(5000));
            assert_eq!(v.iter().collect::<alloc::collections::BTreeSet<_>>().len(), preset.alphabet_size());
        }
    }

    #[test]
    fn letter_gaps_are_two_consecutive_integers() {
        for preset in [Preset::X12, Preset::X11, Preset::X2Delta(7), Preset::X2Delta(9)] {
            let v = preset.spec().unwrap().prefix(3000);
            for (letter, gaps) in letter_gaps(&v) {
                let g: Vec<usize> = gaps.into_iter().collect();
                assert!(g.len() == 2 && g[1] == g[0] + 1, "{preset} letter {letter}: {g:?}");
            }
        }
    }

    #[test]
    fn frequency_estimates_converge() {
        for preset in [Preset::X12, Preset::X11, Preset::X2Delta(8)] {
            let spec = preset.spec().unwrap();
            for n in [500usize, 2000, 5000] {
                let v = spec.prefix(n);
                let counts = v.parikh();
                for letter in 0..spec.alphabet_size() as Letter {
                    let f = spec.letter_frequency(letter).unwrap().approx_f64(&spec.slope);
                    let observed = counts.count(letter) as f64 / n as f64;
                    assert!((observed - f).abs() <= 2.0 / n as f64, "{preset} n={n} letter {letter}");
                }
            }
        }
    }
}
