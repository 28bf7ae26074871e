//! Resolving presets, inline specs and word expressions.

use std::fs;
use std::path::Path;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use balword_core::colouring::{BalancedSpec, Preset};
use balword_core::critexp::Sequence;
use balword_core::sturmian::ContinuedFraction;
use balword_core::{Alphabet, Letter, Word};

use crate::json::SpecJson;

/// An infinite sequence together with its alphabet and a label for reports.
#[derive(Clone, Debug)]
pub struct Source {
    pub label: String,
    pub sequence: Sequence,
    pub alphabet: Alphabet,
}

impl Source {
    pub fn sturmian(label: String, cf: ContinuedFraction) -> Self {
        Source { label, sequence: Sequence::Sturmian(cf), alphabet: Alphabet::binary() }
    }

    pub fn balanced(label: String, spec: BalancedSpec) -> Self {
        Source { label, alphabet: spec.alphabet.clone(), sequence: Sequence::Balanced(spec) }
    }

    pub fn prefix(&self, len: usize) -> Word {
        self.sequence.prefix(len)
    }
}

/// `fibonacci` or any colouring preset.
pub fn preset(name: &str) -> Result<Source> {
    if name.trim().eq_ignore_ascii_case("fibonacci") {
        return Ok(Source::sturmian("fibonacci".into(), ContinuedFraction::fibonacci()));
    }
    let preset = Preset::from_str(name)?;
    Ok(Source::balanced(preset.to_string(), preset.spec()?))
}

/// A bare `--slope` gives the standard Sturmian sequence; adding `--y` and
/// `--yprime` colours it.
pub fn inline(slope: &str, y: Option<&str>, y_prime: Option<&str>) -> Result<Source> {
    let cf = ContinuedFraction::from_str(slope)?;
    match (y, y_prime) {
        (None, None) => Ok(Source::sturmian(cf.to_string(), cf)),
        (Some(y), Some(y_prime)) => {
            let label = format!("{cf} y={y} y'={y_prime}");
            Ok(Source::balanced(label, BalancedSpec::from_text(cf, y, y_prime)?))
        }
        _ => bail!("--y and --yprime must be given together"),
    }
}

pub fn spec_file(path: &Path) -> Result<Source> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let j: SpecJson = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    Ok(Source::balanced(path.display().to_string(), BalancedSpec::try_from(&j)?))
}

/// Parses a word expression.
///
/// Grammar: items are single characters (optionally followed by `'` or `′`,
/// which makes a primed letter named `<c>p`), numeric ranges `i..j` that
/// expand to the letters `i, i+1, …, j`, and parenthesised groups. Any item
/// may be followed by `^n`. Whitespace separates items. Letters get ids in
/// order of first appearance.
pub fn parse_word_expr(text: &str) -> Result<(Alphabet, Word)> {
    let mut p = ExprParser { chars: text.chars().collect(), pos: 0 };
    let tokens = p.sequence()?;
    if p.pos < p.chars.len() {
        bail!("unexpected {:?} at offset {} in {text:?}", p.chars[p.pos], p.pos);
    }
    let mut names: Vec<String> = Vec::new();
    let mut letters: Vec<Letter> = Vec::with_capacity(tokens.len());
    for t in tokens {
        let id = match names.iter().position(|n| *n == t) {
            Some(i) => i,
            None => {
                names.push(t);
                names.len() - 1
            }
        };
        letters.push(Letter::try_from(id).map_err(|_| anyhow!("more than 256 distinct letters"))?);
    }
    let alphabet = Alphabet::new(names)?;
    let word = Word::new(letters, alphabet.len())?;
    Ok((alphabet, word))
}

struct ExprParser {
    chars: Vec<char>,
    pos: usize,
}

impl ExprParser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn sequence(&mut self) -> Result<Vec<String>> {
        let mut out = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                None | Some(')') => return Ok(out),
                Some(_) => {
                    let item = self.item()?;
                    let n = self.power()?;
                    for _ in 0..n {
                        out.extend(item.iter().cloned());
                    }
                }
            }
        }
    }

    fn item(&mut self) -> Result<Vec<String>> {
        let c = self.peek().ok_or_else(|| anyhow!("unexpected end of expression"))?;
        if c == '(' {
            self.pos += 1;
            let inner = self.sequence()?;
            if self.peek() != Some(')') {
                bail!("unclosed '(' in word expression");
            }
            self.pos += 1;
            return Ok(inner);
        }
        if c == '^' {
            bail!("'^' without a preceding item");
        }
        if c.is_ascii_digit() {
            let start = self.pos;
            let digits = self.digits();
            if self.chars[self.pos..].starts_with(&['.', '.']) {
                self.pos += 2;
                let hi = self.digits();
                let (lo, hi) = (parse_int(&digits)?, parse_int(&hi)?);
                if lo > hi {
                    bail!("empty range {lo}..{hi}");
                }
                return Ok((lo..=hi).map(|i| i.to_string()).collect());
            }
            // without a range, each digit is its own letter
            self.pos = start + 1;
        } else {
            self.pos += 1;
        }
        let mut name = c.to_string();
        if matches!(self.peek(), Some('\'' | '′')) {
            self.pos += 1;
            name.push('p');
        }
        Ok(vec![name])
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn power(&mut self) -> Result<usize> {
        self.skip_ws();
        if self.peek() != Some('^') {
            return Ok(1);
        }
        self.pos += 1;
        self.skip_ws();
        let d = self.digits();
        parse_int(&d)
    }
}

fn parse_int(s: &str) -> Result<usize> {
    s.parse().map_err(|_| anyhow!("expected a number, found {s:?}"))
}

/// Human form of a letter name: a trailing `p` after a digit becomes `′`.
pub fn human_name(name: &str) -> String {
    match name.strip_suffix('p') {
        Some(base) if !base.is_empty() && base.chars().all(|c| c.is_ascii_digit()) => {
            format!("{base}′")
        }
        _ => name.to_string(),
    }
}

/// Concatenated when every human name is one character, space-separated
/// otherwise.
pub fn render_human(alphabet: &Alphabet, word: &[Letter]) -> String {
    let names: Vec<String> = word.iter().map(|&l| human_name(alphabet.name(l))).collect();
    if names.iter().all(|n| n.chars().count() == 1) {
        names.concat()
    } else {
        names.join(" ")
    }
}
