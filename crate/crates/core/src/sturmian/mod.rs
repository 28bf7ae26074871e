//! Continued fractions of slopes, standard Sturmian prefixes and the exact
//! calculus of their bispecial factors.
//!
//! Slopes are restricted to eventually periodic continued fractions
//! `[0; a₁, a₂, …]` with a non-empty period, so every slope is an irrational
//! quadratic number in `(0, 1)`. Comparisons against rationals are decided by
//! nesting convergent intervals, which always terminates for such values.

mod bispecial;
mod compare;
mod convergents;
mod standard;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write};
use core::str::FromStr;

use crate::{Error, Result};

pub use bispecial::{BinaryParikh, BispecialDescriptor};
pub use compare::{compare_linear_form, ThetaForm};
pub use convergents::{Convergent, Convergents};

/// Eventually periodic continued fraction `[0; pre…, (period…)^ω]`.
///
/// Stored in canonical form: the period is primitive and the preperiod is as
/// short as possible, so structural equality is equality of values.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ContinuedFraction {
    preperiod: Vec<u64>,
    period: Vec<u64>,
}

impl ContinuedFraction {
    pub fn new(preperiod: Vec<u64>, period: Vec<u64>) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::InvalidContinuedFraction("period must be non-empty".into()));
        }
        if preperiod.iter().chain(&period).any(|&a| a == 0) {
            return Err(Error::InvalidContinuedFraction("partial quotients must be positive".into()));
        }
        let mut cf = ContinuedFraction { preperiod, period };
        cf.canonicalize();
        Ok(cf)
    }

    /// `[0; 1, 1, 1, …]`, the slope φ = (√5 − 1)/2 of the Fibonacci word.
    pub fn fibonacci() -> Self {
        ContinuedFraction { preperiod: Vec::new(), period: alloc::vec![1] }
    }

    fn canonicalize(&mut self) {
        let len = self.period.len();
        if let Some(p) = (1..=len).find(|&p| len % p == 0 && (p..len).all(|i| self.period[i] == self.period[i - p])) {
            self.period.truncate(p);
        }
        while let Some(&last) = self.preperiod.last() {
            if last != *self.period.last().unwrap() {
                break;
            }
            self.preperiod.pop();
            self.period.rotate_right(1);
        }
    }

    pub fn preperiod(&self) -> &[u64] {
        &self.preperiod
    }

    pub fn period(&self) -> &[u64] {
        &self.period
    }

    /// Partial quotient `a_n` for `n ≥ 1`.
    pub fn term(&self, n: usize) -> u64 {
        assert!(n >= 1, "partial quotients are indexed from 1");
        let i = n - 1;
        match self.preperiod.get(i) {
            Some(&a) => a,
            None => self.period[(i - self.preperiod.len()) % self.period.len()],
        }
    }

    /// `[0; a_n, a_{n+1}, …]`.
    pub fn tail(&self, n: usize) -> ContinuedFraction {
        assert!(n >= 1);
        let i = n - 1;
        if i < self.preperiod.len() {
            ContinuedFraction { preperiod: self.preperiod[i..].to_vec(), period: self.period.clone() }
        } else {
            let mut period = self.period.clone();
            period.rotate_left((i - self.preperiod.len()) % self.period.len());
            ContinuedFraction { preperiod: Vec::new(), period }
        }
    }

    /// `[0; first, a_{n+1}, a_{n+2}, …]`.
    pub fn with_head(&self, first: u64, n: usize) -> Result<ContinuedFraction> {
        let rest = self.tail(n + 1);
        let mut preperiod = alloc::vec![first];
        preperiod.extend_from_slice(&rest.preperiod);
        ContinuedFraction::new(preperiod, rest.period)
    }

    /// Run-length directive sequence `D^{a₁} G^{a₂} …`, with the periodic part
    /// doubled when needed so that it starts and ends on whole D/G cycles.
    pub fn directive(&self) -> String {
        let morphism = |i: usize| if i % 2 == 0 { 'D' } else { 'G' };
        let mut out = String::new();
        for (i, a) in self.preperiod.iter().enumerate() {
            let _ = write!(out, "{}^{} ", morphism(i), a);
        }
        let reps = if self.period.len() % 2 == 1 { 2 } else { 1 };
        out.push('(');
        let start = self.preperiod.len();
        let cycle = self.period.len() * reps;
        for j in 0..cycle {
            if j > 0 {
                out.push(' ');
            }
            let _ = write!(out, "{}^{}", morphism(start + j), self.period[j % self.period.len()]);
        }
        out.push_str(")^ω");
        out
    }
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[0; ")?;
        for a in &self.preperiod {
            write!(f, "{a}, ")?;
        }
        write!(f, "(")?;
        for (i, a) in self.period.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")]")
    }
}

/// Accepts `[0; 1, 3, (2)]`, `0;1,3,(2)` or `0;1,3,2,2`. Without a
/// parenthesized period the final quotient repeats forever.
impl FromStr for ContinuedFraction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Parse(alloc::format!("slope {s:?}: {msg}"));
        let body: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let body = body.strip_prefix('[').unwrap_or(&body);
        let body = body.strip_suffix(']').unwrap_or(body);
        let rest = body.strip_prefix("0;").ok_or_else(|| bad("must start with \"0;\""))?;
        let (head, period_text) = match rest.find('(') {
            Some(open) => {
                let close = rest.rfind(')').ok_or_else(|| bad("unclosed period"))?;
                if close + 1 != rest.len() || close < open {
                    return Err(bad("period must come last"));
                }
                (rest[..open].trim_end_matches(','), Some(&rest[open + 1..close]))
            }
            None => (rest, None),
        };
        let parse_list = |t: &str| -> Result<Vec<u64>> {
            t.split(',')
                .filter(|x| !x.is_empty())
                .map(|x| x.parse::<u64>().map_err(|_| bad("bad partial quotient")))
                .collect()
        };
        let mut preperiod = parse_list(head)?;
        let period = match period_text {
            Some(t) => parse_list(t)?,
            None => alloc::vec![preperiod.pop().ok_or_else(|| bad("no partial quotients"))?],
        };
        ContinuedFraction::new(preperiod, period)
    }
}
