//! Critical exponents: exact scans of prefixes, the bispecial formula for
//! Sturmian sequences, and the return-word certification of the `x_{2δ}` and
//! `x_{12}` families.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::colouring::{discolour, validate_constant_gap, BalancedSpec, Preset};
use crate::sturmian::{BispecialDescriptor, ContinuedFraction};
use crate::words::{is_balanced, max_factor_exponent, return_words, special_factors, Letter, MaxExponent, Word};
use crate::{Error, Fraction, Rational, Result};

/// Anything that yields arbitrarily long prefixes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Sequence {
    Sturmian(ContinuedFraction),
    Balanced(BalancedSpec),
}

impl Sequence {
    pub fn prefix(&self, len: usize) -> Word {
        match self {
            Sequence::Sturmian(cf) => cf.standard_prefix(len),
            Sequence::Balanced(spec) => spec.prefix(len),
        }
    }
}

impl From<ContinuedFraction> for Sequence {
    fn from(cf: ContinuedFraction) -> Self {
        Sequence::Sturmian(cf)
    }
}

impl From<BalancedSpec> for Sequence {
    fn from(spec: BalancedSpec) -> Self {
        Sequence::Balanced(spec)
    }
}

/// Maximum exponent over the factors of the length-`len` prefix. A lower
/// bound on the critical exponent, exact once the supremum is attained
/// inside the prefix.
pub fn critical_exponent_bruteforce(seq: &Sequence, len: usize) -> Result<MaxExponent> {
    if len < 2 {
        return Err(Error::IndexOutOfRange(alloc::format!("prefix length {len} must be at least 2")));
    }
    max_factor_exponent(&seq.prefix(len))
}

/// Enclosure `[lower, upper]` of the critical exponent of a standard
/// Sturmian sequence.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SturmianExponent {
    pub lower: Fraction,
    pub upper: Fraction,
    /// `1 + max (|r|+|s|−2)/min(|r|,|s|)` over the bispecials evaluated one by one.
    pub finite_max: Fraction,
    pub argmax: (usize, u64),
    /// Largest `N` evaluated explicitly.
    pub explicit_up_to: usize,
    /// Number of periodic terms fixed in the tail bound.
    pub tail_depth: usize,
}

impl SturmianExponent {
    pub fn width(&self) -> Fraction {
        Fraction::from_rational(&(self.upper.to_rational() - self.lower.to_rational())).expect("ordered")
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lower.to_rational() <= x && x <= &self.upper.to_rational()
    }
}

/// `[c₀; c₁, …, c_k]`.
fn finite_cf(terms: &[u64]) -> Rational {
    let mut it = terms.iter().rev();
    let mut x = Rational::from_integer(BigInt::from(*it.next().expect("non-empty")));
    for &c in it {
        x = Rational::from_integer(BigInt::from(c)) + x.recip();
    }
    x
}

/// `E(u) = 1 + sup (|r|+|s|−2)/min(|r|,|s|)` over all bispecial factors.
///
/// With `P_N = p_N + q_N`, the pair `(N, m)` has `|r| = P_N` and
/// `|s| = m P_N + P_{N−1}`. For `m ≥ 1` the ratio grows with `m` and is
/// beaten by `(N+1, 0)`, whose ratio is `1 + (P_{N+1} − 2)/P_N`. Pairs up to
/// `explicit_up_to` are evaluated exactly; beyond that the reversed expansion
/// `P_N/P_{N−1} = [a_N; a_{N−1}, …, a₂, a₁+1]` starts with `K+1` periodic
/// terms `c₀…c_K`, so it lies between `[c₀; …, c_K]` and `[c₀; …, c_K + 1]`.
pub fn sturmian_critical_exponent(cf: &ContinuedFraction, n_max: usize, tol: &Fraction) -> Result<SturmianExponent> {
    if n_max < 2 {
        return Err(Error::IndexOutOfRange(alloc::format!("N_max = {n_max} must be at least 2")));
    }
    if tol.numer().is_zero() {
        return Err(Error::InvalidTolerance);
    }
    let tol = tol.to_rational();
    let pre = cf.preperiod().len();
    let period = cf.period();
    let t = period.len();

    let mut depth = 0usize;
    let (tail_lo, tail_hi) = loop {
        let mut lo: Option<Rational> = None;
        let mut hi: Option<Rational> = None;
        let mut width = Rational::zero();
        for j in 0..t {
            let mut terms: Vec<u64> = (0..=depth).map(|i| period[(j + t * (depth + 1) - i) % t]).collect();
            let a = finite_cf(&terms);
            *terms.last_mut().expect("non-empty") += 1;
            let b = finite_cf(&terms);
            let (l, h) = if a < b { (a, b) } else { (b, a) };
            width = width.max(&h - &l);
            lo = Some(lo.map_or(l.clone(), |x: Rational| x.max(l)));
            hi = Some(hi.map_or(h.clone(), |x: Rational| x.max(h)));
        }
        if width <= tol {
            break (lo.expect("period non-empty"), hi.expect("period non-empty"));
        }
        depth += 1;
    };

    let explicit = n_max.max(pre + depth + 2);
    let cs = cf.convergents(explicit + 1);
    let p = |n: usize| &cs[n + 1].p + &cs[n + 1].q;
    let two = BigUint::from(2u8);
    let mut best: Option<(Rational, (usize, u64))> = None;
    for n in 1..=explicit {
        let (pn, pprev) = (p(n), p(n - 1));
        let a_next = cf.term(n + 1);
        for m in [0, a_next - 1] {
            let r = pn.clone();
            let s = BigUint::from(m) * &pn + &pprev;
            let ratio = Rational::new(BigInt::from(&r + &s - &two), BigInt::from(r.min(s)));
            if best.as_ref().is_none_or(|(b, _)| &ratio > b) {
                best = Some((ratio, (n, m)));
            }
            if a_next == 1 {
                break;
            }
        }
    }
    let (ratio, argmax) = best.expect("explicit range is non-empty");
    let finite = Rational::one() + ratio;
    let two = Rational::from_integer(BigInt::from(2));
    let lower = finite.clone().max(&two + tail_lo);
    let upper = finite.clone().max(&two + tail_hi);
    let frac = |x: &Rational| Fraction::from_rational(x).expect("positive");
    Ok(SturmianExponent {
        lower: frac(&lower),
        upper: frac(&upper),
        finite_max: frac(&finite),
        argmax,
        explicit_up_to: explicit,
        tail_depth: depth,
    })
}

/// Numbers of prefix (`k`) and non-prefix (`l`) return words in a
/// concatenation, with `k = δk'` and `l = δl'`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct AdmissiblePair {
    pub k: u64,
    pub l: u64,
    pub k_prime: u64,
    pub l_prime: u64,
}

impl AdmissiblePair {
    /// `k|r| + l|s|`.
    pub fn return_len(&self, desc: &BispecialDescriptor) -> BigUint {
        BigUint::from(self.k) * desc.r_len() + BigUint::from(self.l) * desc.s_len()
    }
}

/// Pairs `(k, l) = (δk', δl')` with `k' ≤ k_cap`, `k + l ≥ 1` and
/// `θ'(k−1) − 1 < l < θ'(k+1) + 1`. Only necessary conditions, so the
/// list may contain pairs that no return word realises.
pub fn admissible_pairs(desc: &BispecialDescriptor, delta: u64, k_cap: u64) -> Vec<AdmissiblePair> {
    let theta = &desc.derived_slope;
    let mut out = Vec::new();
    for k_prime in 0..=k_cap {
        // l < θ'(k+1) + 1 < k + 2
        for l_prime in 0..=k_prime + 1 {
            let (k, l) = (delta * k_prime, delta * l_prime);
            if k + l >= 1 && theta.factor_exists(k, l) {
                out.push(AdmissiblePair { k, l, k_prime, l_prime });
            }
        }
    }
    out
}

/// Largest `|w|/|v|` for one bispecial: `|w| = |r| + |s| − 2` over the
/// shortest admissible `|v|`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatioReport {
    pub descriptor: BispecialDescriptor,
    pub best_pair: AdmissiblePair,
    pub return_len: BigUint,
    pub ratio: Fraction,
    pub bound: Fraction,
}

impl RatioReport {
    pub fn passes(&self) -> bool {
        self.ratio < self.bound
    }
}

pub fn ratio_report(desc: &BispecialDescriptor, delta: u64, k_cap: u64) -> Result<RatioReport> {
    let best_pair =
        admissible_pairs(desc, delta, k_cap).into_iter().min_by_key(|p| p.return_len(desc)).ok_or_else(|| {
            Error::UnsupportedShape(alloc::format!(
                "no admissible pair with k' <= {k_cap} at (N, m) = ({}, {})",
                desc.n,
                desc.m
            ))
        })?;
    let return_len = best_pair.return_len(desc);
    let w = desc.r_len() + desc.s_len() - BigUint::from(2u8);
    Ok(RatioReport {
        ratio: Fraction::new(w, return_len.clone()),
        bound: Fraction::new(1u8, 2 * delta - 2),
        descriptor: desc.clone(),
        best_pair,
        return_len,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Verdict {
    Pass,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FamilyCertificate {
    pub preset: Preset,
    pub delta: u64,
    pub bound: Fraction,
    pub checked_up_to: usize,
    pub reports: Vec<RatioReport>,
    pub short_factors: ShortFactorReport,
    pub verdict: Verdict,
    /// First failing report, if any.
    pub witness: Option<RatioReport>,
}

impl fmt::Display for FamilyCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} for {} (checked up to N = {})", self.verdict, self.preset, self.checked_up_to)
    }
}

pub const DEFAULT_N_MAX: usize = 30;
pub const SHORT_FACTOR_PREFIX: usize = 2000;

/// Checks every bispecial `(N, m)` with `1 ≤ N ≤ n_max`, `m < a_{N+1}`
/// except `(1, 0)`, whose image is the single letter `b` and is handled by
/// [`short_factor_check`]. `k_cap` defaults to `10δ`.
pub fn certify_family(preset: Preset, n_max: usize, k_cap: Option<u64>) -> Result<FamilyCertificate> {
    if n_max < 2 {
        return Err(Error::IndexOutOfRange(alloc::format!("N_max = {n_max} must be at least 2")));
    }
    let delta = match preset {
        Preset::X2Delta(d) => d,
        Preset::X12 => 6,
        Preset::X11 => return Err(Error::UnsupportedShape("x11 cannot be certified by this engine".into())),
    };
    let spec = preset.spec()?;
    let short_factors = short_factor_check(&spec, SHORT_FACTOR_PREFIX.max(10 * delta))?;
    let delta = delta as u64;
    let k_cap = k_cap.unwrap_or(10 * delta);
    let mut reports = Vec::new();
    for n in 1..=n_max {
        for m in 0..spec.slope.term(n + 1) {
            if (n, m) == (1, 0) {
                continue;
            }
            let desc = spec.slope.bispecial_descriptor(n, m)?;
            reports.push(ratio_report(&desc, delta, k_cap)?);
        }
    }
    let witness = reports.iter().find(|r| !r.passes()).cloned();
    let verdict = if witness.is_none() && short_factors.passes() { Verdict::Pass } else { Verdict::Fail };
    Ok(FamilyCertificate {
        preset,
        delta,
        bound: Fraction::new(1u8, 2 * delta - 2),
        checked_up_to: n_max,
        reports,
        short_factors,
        verdict,
        witness,
    })
}

/// Distances on a coloured prefix for bispecials whose image is a single
/// letter.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ShortFactorReport {
    pub delta: usize,
    pub prefix_len: usize,
    pub min_letter_distance: usize,
    /// Minimum distance between occurrences of a length-2 factor made of
    /// two letters from `y'`; `None` when no such factor repeats.
    pub min_primed_pair_distance: Option<usize>,
    /// `π(prefix)` is a concatenation of `(ba)^h b` and `(ba)^{h+1} b` with
    /// `h = ⌊δ/2⌋`, the last block possibly cut short.
    pub blocks_ok: bool,
}

impl ShortFactorReport {
    pub fn passes(&self) -> bool {
        self.min_letter_distance >= 2 * self.delta - 2
            && self.min_primed_pair_distance.is_none_or(|d| d > 4 * self.delta - 4)
            && self.blocks_ok
    }
}

fn blocks_ok(u: &[Letter], h: usize) -> bool {
    let (a, b) = (0, 1);
    let mut i = 0;
    while i < u.len() {
        if u[i] != b {
            return false;
        }
        let mut j = 0;
        while i + 2 * j + 2 < u.len() + 1 && u.get(i + 2 * j + 1) == Some(&a) && u.get(i + 2 * j + 2) == Some(&b) {
            j += 1;
        }
        let end = i + 2 * j + 1;
        if end + 1 >= u.len() {
            // cut short by the end of the prefix
            return j <= h + 1;
        }
        if j != h && j != h + 1 {
            return false;
        }
        i = end;
    }
    true
}

/// Requires `y = (1…δ)^ω`, `y' = (1'…δ')^ω` and a slope `[0; 1, ⌊δ/2⌋, …]`.
pub fn short_factor_check(spec: &BalancedSpec, prefix_len: usize) -> Result<ShortFactorReport> {
    let delta = spec
        .cyclic_delta()
        .ok_or_else(|| Error::UnsupportedShape("y and y' must each cycle through δ distinct letters".into()))?;
    let h = delta / 2;
    if spec.slope.term(1) != 1 || spec.slope.term(2) != h as u64 {
        return Err(Error::UnsupportedShape(alloc::format!("slope must start [0; 1, {h}, ...]")));
    }
    if prefix_len < 10 * delta {
        return Err(Error::IndexOutOfRange(alloc::format!("prefix length must be at least {}", 10 * delta)));
    }
    let v = spec.prefix(prefix_len);
    let split = spec.split();
    let mut last: BTreeMap<Letter, usize> = BTreeMap::new();
    let mut min_letter = usize::MAX;
    for (i, &l) in v.iter().enumerate() {
        if let Some(j) = last.insert(l, i) {
            min_letter = min_letter.min(i - j);
        }
    }
    let mut last_pair: BTreeMap<(Letter, Letter), usize> = BTreeMap::new();
    let mut min_pair: Option<usize> = None;
    for (i, p) in v.windows(2).enumerate() {
        if split.is_a(p[0]) == Some(false) && split.is_a(p[1]) == Some(false) {
            if let Some(j) = last_pair.insert((p[0], p[1]), i) {
                min_pair = Some(min_pair.map_or(i - j, |d| d.min(i - j)));
            }
        }
    }
    let u = discolour(&v, &split)?;
    Ok(ShortFactorReport {
        delta,
        prefix_len,
        min_letter_distance: min_letter,
        min_primed_pair_distance: min_pair,
        blocks_ok: blocks_ok(&u, h),
    })
}

/// Observed bispecial factors of a coloured prefix whose image contains both
/// `a` and `b`, and the return words whose image has a letter count not
/// divisible by δ.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct DivisibilityReport {
    pub bispecials: usize,
    pub return_words: usize,
    pub violations: Vec<(Word, Word)>,
}

pub fn return_word_divisibility(
    spec: &BalancedSpec,
    prefix_len: usize,
    max_factor_len: usize,
) -> Result<DivisibilityReport> {
    let delta = spec
        .cyclic_delta()
        .ok_or_else(|| Error::UnsupportedShape("y and y' must each cycle through δ distinct letters".into()))?;
    let v = spec.prefix(prefix_len);
    let split = spec.split();
    let mut report = DivisibilityReport::default();
    for n in 2..=max_factor_len.min(prefix_len.saturating_sub(1)) {
        for w in special_factors(&v, n)?.bispecial {
            let pw = discolour(&w, &split)?.parikh();
            if pw.count(0) == 0 || pw.count(1) == 0 {
                continue;
            }
            let Ok(returns) = return_words(&v, &w) else {
                continue;
            };
            report.bispecials += 1;
            for r in returns {
                report.return_words += 1;
                let pr = discolour(&r, &split)?.parikh();
                if pr.count(0) % delta != 0 || pr.count(1) % delta != 0 {
                    report.violations.push((w.clone(), r));
                }
            }
        }
    }
    Ok(report)
}

/// Brute-force record for `x_{11}`, compared with both `10/9` and `11/10`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct X11Report {
    pub prefix_len: usize,
    pub y_prime_constant_gap: bool,
    pub balanced: bool,
    pub max: MaxExponent,
    pub attains_10_9: bool,
    pub attains_11_10: bool,
}

impl fmt::Display for X11Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = &self.max.exponent;
        let which = match (self.attains_10_9, self.attains_11_10) {
            (true, _) => "10/9 = (d-1)/(d-2) is attained; 11/10 is not",
            (_, true) => "11/10 is attained; 10/9 is not",
            _ => "neither 10/9 nor 11/10 is attained",
        };
        write!(f, "x11 prefix {}: max exponent {} ({}); {}", self.prefix_len, e, e.to_decimal(7), which)
    }
}

pub fn x11_report(prefix_len: usize) -> Result<X11Report> {
    let spec = Preset::X11.spec()?;
    let y_prime_constant_gap = validate_constant_gap(spec.y_prime.period_word()).is_ok();
    let v = spec.prefix(prefix_len);
    let max = max_factor_exponent(&v)?;
    Ok(X11Report {
        prefix_len,
        y_prime_constant_gap,
        balanced: is_balanced(&v),
        attains_10_9: max.exponent == Fraction::new(10u8, 9u8),
        attains_11_10: max.exponent == Fraction::new(11u8, 10u8),
        max,
    })
}
