//! JSON forms of words, fractions, slopes, specs and command reports.
//!
//! Every report type converts from the engine value and decodes back to it;
//! decimal `approx` fields are advisory and ignored on the way in.

use std::str::FromStr;

use anyhow::{anyhow, Context, Result};
use balword_core::colouring::{BalancedSpec, Preset};
use balword_core::critexp::{
    ratio_report, FamilyCertificate, RatioReport, ShortFactorReport, SturmianExponent, Verdict,
};
use balword_core::pansiot::{
    LetterClass, PansiotProperty, PansiotViolation, ResidueClasses, ResidueReport, StickKind, StickReport,
};
use balword_core::sturmian::ContinuedFraction;
use balword_core::words::{BalanceViolation, MaxExponent};
use balword_core::{Alphabet, Fraction, Letter, Word};
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct WordJson {
    pub alphabet: Vec<String>,
    pub letters: String,
}

impl WordJson {
    /// Letters are concatenated when that parses back unambiguously and
    /// space-separated otherwise.
    pub fn new(alphabet: &Alphabet, word: &[Letter]) -> Self {
        let plain = alphabet.render(word);
        let letters = match alphabet.parse(&plain) {
            Ok(w) if w.letters() == word => plain,
            _ => alphabet.render_separated(word),
        };
        WordJson { alphabet: alphabet.names().to_vec(), letters }
    }

    pub fn decode(&self) -> Result<(Alphabet, Word)> {
        let alphabet = Alphabet::new(self.alphabet.clone())?;
        let word = alphabet.parse(&self.letters)?;
        Ok((alphabet, word))
    }
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct FractionJson {
    pub num: String,
    pub den: String,
    #[serde(default)]
    pub approx: f64,
}

impl From<&Fraction> for FractionJson {
    fn from(f: &Fraction) -> Self {
        FractionJson { num: f.numer().to_string(), den: f.denom().to_string(), approx: f.approx_f64() }
    }
}

impl TryFrom<&FractionJson> for Fraction {
    type Error = anyhow::Error;

    fn try_from(j: &FractionJson) -> Result<Fraction> {
        let num = BigUint::from_str(&j.num).with_context(|| format!("bad numerator {:?}", j.num))?;
        let den = BigUint::from_str(&j.den).with_context(|| format!("bad denominator {:?}", j.den))?;
        if den == BigUint::ZERO {
            return Err(anyhow!("zero denominator"));
        }
        Ok(Fraction::new(num, den))
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CfJson {
    pub preperiod: Vec<u64>,
    pub period: Vec<u64>,
}

impl From<&ContinuedFraction> for CfJson {
    fn from(cf: &ContinuedFraction) -> Self {
        CfJson { preperiod: cf.preperiod().to_vec(), period: cf.period().to_vec() }
    }
}

impl TryFrom<&CfJson> for ContinuedFraction {
    type Error = anyhow::Error;

    fn try_from(j: &CfJson) -> Result<ContinuedFraction> {
        Ok(ContinuedFraction::new(j.preperiod.clone(), j.period.clone())?)
    }
}

/// `y` and `y_prime` in machine form, e.g. `"1p2p3p"`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SpecJson {
    pub slope: CfJson,
    pub y: String,
    pub y_prime: String,
}

impl From<&BalancedSpec> for SpecJson {
    fn from(spec: &BalancedSpec) -> Self {
        SpecJson {
            slope: (&spec.slope).into(),
            y: spec.alphabet.render(spec.y.period_word()),
            y_prime: spec.alphabet.render(spec.y_prime.period_word()),
        }
    }
}

impl TryFrom<&SpecJson> for BalancedSpec {
    type Error = anyhow::Error;

    fn try_from(j: &SpecJson) -> Result<BalancedSpec> {
        Ok(BalancedSpec::from_text((&j.slope).try_into()?, &j.y, &j.y_prime)?)
    }
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct GenerateJson {
    pub source: String,
    pub word: WordJson,
    /// `π` image over `{a, b}` when the sequence is coloured.
    pub discoloured: Option<WordJson>,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct ExponentJson {
    pub source: String,
    pub prefix_length: usize,
    pub exponent: FractionJson,
    pub start: usize,
    pub len: usize,
    pub period: usize,
    pub factor: WordJson,
}

impl ExponentJson {
    pub fn new(source: &str, alphabet: &Alphabet, word: &[Letter], max: &MaxExponent) -> Self {
        ExponentJson {
            source: source.to_string(),
            prefix_length: word.len(),
            exponent: (&max.exponent).into(),
            start: max.start,
            len: max.len,
            period: max.period,
            factor: WordJson::new(alphabet, &word[max.start..max.start + max.len]),
        }
    }

    pub fn decode(&self) -> Result<MaxExponent> {
        Ok(MaxExponent {
            exponent: (&self.exponent).try_into()?,
            start: self.start,
            len: self.len,
            period: self.period,
        })
    }
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct RatioRowJson {
    pub n: usize,
    pub m: u64,
    pub r_len: String,
    pub s_len: String,
    pub k_prime: u64,
    pub l_prime: u64,
    pub return_len: String,
    pub ratio: FractionJson,
    pub passes: bool,
}

impl From<&RatioReport> for RatioRowJson {
    fn from(r: &RatioReport) -> Self {
        RatioRowJson {
            n: r.descriptor.n,
            m: r.descriptor.m,
            r_len: r.descriptor.r_len().to_string(),
            s_len: r.descriptor.s_len().to_string(),
            k_prime: r.best_pair.k_prime,
            l_prime: r.best_pair.l_prime,
            return_len: r.return_len.to_string(),
            ratio: (&r.ratio).into(),
            passes: r.passes(),
        }
    }
}

impl RatioRowJson {
    /// Recomputes the row from `(N, m)` and checks it against the record.
    pub fn decode(&self, spec: &BalancedSpec, delta: u64) -> Result<RatioReport> {
        let desc = spec.slope.bispecial_descriptor(self.n, self.m)?;
        let report = ratio_report(&desc, delta, self.k_prime.max(1))?;
        if report.best_pair.k_prime != self.k_prime
            || report.best_pair.l_prime != self.l_prime
            || report.ratio != Fraction::try_from(&self.ratio)?
        {
            return Err(anyhow!("row ({}, {}) does not match the engine", self.n, self.m));
        }
        Ok(report)
    }
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct ShortFactorJson {
    pub delta: usize,
    pub prefix_len: usize,
    pub min_letter_distance: usize,
    pub min_primed_pair_distance: Option<usize>,
    pub blocks_ok: bool,
    pub passes: bool,
}

impl From<&ShortFactorReport> for ShortFactorJson {
    fn from(r: &ShortFactorReport) -> Self {
        ShortFactorJson {
            delta: r.delta,
            prefix_len: r.prefix_len,
            min_letter_distance: r.min_letter_distance,
            min_primed_pair_distance: r.min_primed_pair_distance,
            blocks_ok: r.blocks_ok,
            passes: r.passes(),
        }
    }
}

impl From<&ShortFactorJson> for ShortFactorReport {
    fn from(j: &ShortFactorJson) -> Self {
        ShortFactorReport {
            delta: j.delta,
            prefix_len: j.prefix_len,
            min_letter_distance: j.min_letter_distance,
            min_primed_pair_distance: j.min_primed_pair_distance,
            blocks_ok: j.blocks_ok,
        }
    }
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct CertificateJson {
    pub family: String,
    pub delta: u64,
    pub bound: FractionJson,
    pub checked_up_to: usize,
    pub rows: Vec<RatioRowJson>,
    pub short_factors: ShortFactorJson,
    pub verdict: String,
    pub witness: Option<RatioRowJson>,
}

impl From<&FamilyCertificate> for CertificateJson {
    fn from(c: &FamilyCertificate) -> Self {
        CertificateJson {
            family: c.preset.to_string(),
            delta: c.delta,
            bound: (&c.bound).into(),
            checked_up_to: c.checked_up_to,
            rows: c.reports.iter().map(RatioRowJson::from).collect(),
            short_factors: (&c.short_factors).into(),
            verdict: c.verdict.to_string(),
            witness: c.witness.as_ref().map(RatioRowJson::from),
        }
    }
}

impl CertificateJson {
    pub fn decode(&self) -> Result<FamilyCertificate> {
        let preset = Preset::from_str(&self.family)?;
        let spec = preset.spec()?;
        let reports = self.rows.iter().map(|r| r.decode(&spec, self.delta)).collect::<Result<Vec<_>>>()?;
        let witness = self.witness.as_ref().map(|r| r.decode(&spec, self.delta)).transpose()?;
        let verdict = match self.verdict.as_str() {
            "PASS" => Verdict::Pass,
            "FAIL" => Verdict::Fail,
            v => return Err(anyhow!("unknown verdict {v:?}")),
        };
        Ok(FamilyCertificate {
            preset,
            delta: self.delta,
            bound: (&self.bound).try_into()?,
            checked_up_to: self.checked_up_to,
            reports,
            short_factors: (&self.short_factors).into(),
            verdict,
            witness,
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BalanceJson {
    pub balanced: bool,
    pub letter: Option<String>,
    pub len: Option<usize>,
    pub heavy_start: Option<usize>,
    pub light_start: Option<usize>,
}

impl BalanceJson {
    pub fn new(alphabet: &Alphabet, v: Option<&BalanceViolation>) -> Self {
        BalanceJson {
            balanced: v.is_none(),
            letter: v.map(|v| alphabet.name(v.letter).to_string()),
            len: v.map(|v| v.len),
            heavy_start: v.map(|v| v.heavy_start),
            light_start: v.map(|v| v.light_start),
        }
    }

    pub fn decode(&self, alphabet: &Alphabet) -> Result<Option<BalanceViolation>> {
        if self.balanced {
            return Ok(None);
        }
        let missing = || anyhow!("unbalanced record without a witness");
        let name = self.letter.as_deref().ok_or_else(missing)?;
        Ok(Some(BalanceViolation {
            letter: alphabet.index_of(name).ok_or_else(|| anyhow!("unknown letter {name:?}"))?,
            len: self.len.ok_or_else(missing)?,
            heavy_start: self.heavy_start.ok_or_else(missing)?,
            light_start: self.light_start.ok_or_else(missing)?,
        }))
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ViolationJson {
    /// `"i"` or `"ii"`.
    pub property: String,
    pub index: usize,
    pub letter: String,
}

impl ViolationJson {
    pub fn new(alphabet: &Alphabet, v: &PansiotViolation) -> Self {
        let property = match v.property {
            PansiotProperty::DistinctWindow => "i",
            PansiotProperty::DistinctSuccessors => "ii",
        };
        ViolationJson { property: property.into(), index: v.index, letter: alphabet.name(v.letter).to_string() }
    }

    pub fn decode(&self, alphabet: &Alphabet) -> Result<PansiotViolation> {
        let property = match self.property.as_str() {
            "i" => PansiotProperty::DistinctWindow,
            "ii" => PansiotProperty::DistinctSuccessors,
            p => return Err(anyhow!("unknown property {p:?}")),
        };
        let letter = alphabet.index_of(&self.letter).ok_or_else(|| anyhow!("unknown letter {:?}", self.letter))?;
        Ok(PansiotViolation { property, index: self.index, letter })
    }
}

pub fn class_name(class: LetterClass) -> &'static str {
    match class {
        LetterClass::Frequent => "frequent",
        LetterClass::Rare => "rare",
        LetterClass::ViolatesStar => "violates-star",
        LetterClass::Undetermined => "undetermined",
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TraceJson {
    pub letter: String,
    pub class: String,
    pub right_slanted: usize,
    pub vertical: usize,
    pub left_slanted: usize,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ResidueJson {
    pub modulus: usize,
    pub vertical_sticks: usize,
    pub full: Vec<usize>,
}

impl From<&ResidueClasses> for ResidueJson {
    fn from(r: &ResidueClasses) -> Self {
        ResidueJson { modulus: r.modulus, vertical_sticks: r.vertical_sticks, full: r.full.clone() }
    }
}

impl From<&ResidueJson> for ResidueClasses {
    fn from(j: &ResidueJson) -> Self {
        ResidueClasses { modulus: j.modulus, vertical_sticks: j.vertical_sticks, full: j.full.clone() }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ResiduesJson {
    pub frequent: ResidueJson,
    pub rare: ResidueJson,
    pub conflict: bool,
}

impl From<&ResidueReport> for ResiduesJson {
    fn from(r: &ResidueReport) -> Self {
        ResiduesJson { frequent: (&r.frequent).into(), rare: (&r.rare).into(), conflict: r.conflict() }
    }
}

impl From<&ResiduesJson> for ResidueReport {
    fn from(j: &ResiduesJson) -> Self {
        ResidueReport { frequent: (&j.frequent).into(), rare: (&j.rare).into() }
    }
}

/// Per-letter stick counts; the stick lists themselves are not serialized.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SticksJson {
    pub traces: Vec<TraceJson>,
    pub parallel: usize,
    pub distance_violations: usize,
    pub star_violations: Vec<String>,
    pub trace_disjunction: bool,
}

impl SticksJson {
    pub fn new(alphabet: &Alphabet, report: &StickReport) -> Self {
        let traces = report
            .traces
            .iter()
            .map(|t| {
                let count = |k| t.sticks.iter().filter(|s| s.kind == k).count();
                TraceJson {
                    letter: alphabet.name(t.letter).to_string(),
                    class: class_name(t.class).to_string(),
                    right_slanted: count(StickKind::RightSlanted),
                    vertical: count(StickKind::Vertical),
                    left_slanted: count(StickKind::LeftSlanted),
                }
            })
            .collect();
        SticksJson {
            traces,
            parallel: report.parallel.len(),
            distance_violations: report.distance_violations.len(),
            star_violations: report.star_violations().map(|t| alphabet.name(t.letter).to_string()).collect(),
            trace_disjunction: report.trace_disjunction(),
        }
    }
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct InspectJson {
    pub source: String,
    pub length: usize,
    pub d: usize,
    pub balance: BalanceJson,
    pub pansiot: bool,
    pub violation: Option<ViolationJson>,
    pub sticks: SticksJson,
    pub residues: Option<ResiduesJson>,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct FormulaJson {
    pub slope: CfJson,
    pub lower: FractionJson,
    pub upper: FractionJson,
    pub finite_max: FractionJson,
    pub argmax: (usize, u64),
    pub explicit_up_to: usize,
    pub tail_depth: usize,
}

impl FormulaJson {
    pub fn new(cf: &ContinuedFraction, e: &SturmianExponent) -> Self {
        FormulaJson {
            slope: cf.into(),
            lower: (&e.lower).into(),
            upper: (&e.upper).into(),
            finite_max: (&e.finite_max).into(),
            argmax: e.argmax,
            explicit_up_to: e.explicit_up_to,
            tail_depth: e.tail_depth,
        }
    }

    pub fn decode(&self) -> Result<(ContinuedFraction, SturmianExponent)> {
        let e = SturmianExponent {
            lower: (&self.lower).try_into()?,
            upper: (&self.upper).try_into()?,
            finite_max: (&self.finite_max).try_into()?,
            argmax: self.argmax,
            explicit_up_to: self.explicit_up_to,
            tail_depth: self.tail_depth,
        };
        Ok(((&self.slope).try_into()?, e))
    }
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct SearchWordJson {
    pub word: WordJson,
    pub sticks: SticksJson,
    pub residues: Option<ResiduesJson>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SearchSummaryJson {
    pub d: usize,
    pub depth: usize,
    pub words: usize,
    pub nodes: u64,
    pub dead_ends: u64,
    pub longest_dead_end: usize,
    pub truncated: bool,
}

/// One JSON-lines record of a search.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum SearchLine {
    Word(SearchWordJson),
    Summary(SearchSummaryJson),
}
