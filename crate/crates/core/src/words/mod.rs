//! Finite words over small indexed alphabets.
//!
//! Letters are dense ids `0..alphabet_size`; textual names only appear in an
//! [`Alphabet`] table used at the I/O boundary.

mod balance;
mod factors;
mod repetition;

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::ops::Deref;

use crate::{Error, Result};

pub use balance::{balance_violation, is_balanced, BalanceViolation};
pub use factors::{letter_gaps, occurrences, return_words, special_factors, LetterSet, SpecialFactors};
pub use repetition::{
    border_array, exponent, max_factor_exponent, minimal_period, scan_periods, scan_periods_from, MaxExponent,
    RepetitionCandidate,
};

pub type Letter = u8;

/// Largest supported alphabet.
pub const MAX_ALPHABET: usize = 256;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Word {
    letters: Vec<Letter>,
    alphabet_size: usize,
}

impl Word {
    pub fn new(letters: Vec<Letter>, alphabet_size: usize) -> Result<Self> {
        if alphabet_size > MAX_ALPHABET {
            return Err(Error::AlphabetTooLarge(alphabet_size));
        }
        if let Some(&letter) = letters.iter().find(|&&l| l as usize >= alphabet_size) {
            return Err(Error::LetterOutOfRange { letter, alphabet_size });
        }
        Ok(Word { letters, alphabet_size })
    }

    /// Alphabet size is inferred as `max letter + 1`.
    pub fn from_letters(letters: &[Letter]) -> Self {
        let alphabet_size = letters.iter().map(|&l| l as usize + 1).max().unwrap_or(0);
        Word { letters: letters.to_vec(), alphabet_size }
    }

    pub fn empty(alphabet_size: usize) -> Self {
        Word { letters: Vec::new(), alphabet_size }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn factor(&self, start: usize, len: usize) -> Word {
        Word { letters: self.letters[start..start + len].to_vec(), alphabet_size: self.alphabet_size }
    }

    pub fn prefix(&self, len: usize) -> Word {
        self.factor(0, len.min(self.len()))
    }

    pub fn parikh(&self) -> ParikhVector {
        ParikhVector::of(&self.letters, self.alphabet_size)
    }

    /// Applies a letter-to-letter map; the map's length is the new alphabet size.
    pub fn map_letters(&self, image: &[Letter]) -> Result<Word> {
        let letters = self.letters.iter().map(|&l| image[l as usize]).collect();
        Word::new(letters, image.iter().map(|&l| l as usize + 1).max().unwrap_or(0))
    }
}

impl Deref for Word {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.letters
    }
}

/// Exact letter counts of a word.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct ParikhVector {
    counts: Vec<usize>,
}

impl ParikhVector {
    pub fn of(letters: &[Letter], alphabet_size: usize) -> Self {
        let mut counts = alloc::vec![0usize; alphabet_size];
        for &l in letters {
            counts[l as usize] += 1;
        }
        ParikhVector { counts }
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn count(&self, letter: Letter) -> usize {
        self.counts.get(letter as usize).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }
}

/// Mapping between letter ids and their textual names.
///
/// Tokenization is greedy longest-match, so names such as `1` and `1p` can
/// share an alphabet.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Alphabet {
    names: Vec<String>,
}

impl Alphabet {
    pub fn new(names: Vec<String>) -> Result<Self> {
        if names.len() > MAX_ALPHABET {
            return Err(Error::AlphabetTooLarge(names.len()));
        }
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || n.chars().any(char::is_whitespace) || names[..i].contains(n) {
                return Err(Error::Parse(alloc::format!("bad or duplicate letter name {n:?}")));
            }
        }
        Ok(Alphabet { names })
    }

    /// The Sturmian alphabet `{a, b}` with `a = 0`, `b = 1`.
    pub fn binary() -> Self {
        Alphabet { names: alloc::vec!["a".to_string(), "b".to_string()] }
    }

    /// One single-character name per char, in the order given.
    pub fn from_chars(chars: &str) -> Result<Self> {
        Alphabet::new(chars.chars().map(|c| c.to_string()).collect())
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, letter: Letter) -> &str {
        &self.names[letter as usize]
    }

    pub fn index_of(&self, name: &str) -> Option<Letter> {
        self.names.iter().position(|n| n == name).map(|i| i as Letter)
    }

    /// Whitespace separates tokens and is otherwise ignored.
    pub fn parse(&self, text: &str) -> Result<Word> {
        let mut letters = Vec::with_capacity(text.len());
        let mut rest = text.trim_start();
        while !rest.is_empty() {
            let best = self
                .names
                .iter()
                .enumerate()
                .filter(|(_, n)| rest.starts_with(n.as_str()))
                .max_by_key(|(_, n)| n.len());
            match best {
                Some((i, n)) => {
                    letters.push(i as Letter);
                    rest = rest[n.len()..].trim_start();
                }
                None => {
                    let c = rest.chars().next().unwrap_or_default();
                    return Err(Error::UnknownLetter(c.to_string()));
                }
            }
        }
        Word::new(letters, self.names.len())
    }

    pub fn render(&self, word: &[Letter]) -> String {
        word.iter().map(|&l| self.name(l)).collect()
    }

    /// Names joined by single spaces; always parses back.
    pub fn render_separated(&self, word: &[Letter]) -> String {
        let mut out = String::new();
        for (i, &l) in word.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            out.push_str(self.name(l));
        }
        out
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &l in &self.letters {
            if self.alphabet_size <= 26 {
                write!(f, "{}", (b'a' + l) as char)?;
            } else {
                write!(f, "<{l}>")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
pub(crate) fn w(s: &str) -> Word {
    // test helper: 'a' -> 0, 'b' -> 1, ...
    let letters: Vec<Letter> = s.bytes().map(|c| c - b'a').collect();
    let size = letters.iter().map(|&l| l as usize + 1).max().unwrap_or(0).max(2);
    Word::new(letters, size).unwrap()
}
