//! The `balword` command line.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Result};
use balword_core::colouring::{discolour, Preset};
use balword_core::critexp::{
    certify_family, sturmian_critical_exponent, FamilyCertificate, RatioReport, Sequence, Verdict, DEFAULT_N_MAX,
};
use balword_core::pansiot::{
    pansiot_violation, residue_detectors, trace_sticks, ResidueReport, SearchConfig, StickKind, StickReport,
};
use balword_core::words::{balance_violation, MaxExponent};
use balword_core::{Alphabet, Fraction, Letter};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::input::{self, human_name, render_human, Source};
use crate::json::{
    class_name, BalanceJson, CertificateJson, ExponentJson, FormulaJson, GenerateJson, InspectJson, ResiduesJson,
    SearchLine, SearchSummaryJson, SearchWordJson, SticksJson, ViolationJson, WordJson,
};
use crate::parallel;

#[derive(Parser, Debug)]
#[command(name = "balword", version, about = "Sturmian and balanced sequences, exactly")]
pub struct Cli {
    /// Worker threads; results do not depend on it.
    #[arg(long, global = true, env = "BALWORD_THREADS")]
    pub threads: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args, Debug, Default)]
pub struct SourceArgs {
    /// fibonacci, x12, x11 or x2delta:<δ>
    #[arg(long)]
    pub preset: Option<String>,
    /// Continued fraction such as "0;1,3,(2)"; the last term repeats if no period is given
    #[arg(long)]
    pub slope: Option<String>,
    #[arg(long)]
    pub y: Option<String>,
    #[arg(long = "yprime")]
    pub y_prime: Option<String>,
    /// JSON file holding {"slope", "y", "y_prime"}
    #[arg(long)]
    pub spec: Option<PathBuf>,
}

impl SourceArgs {
    fn given(&self) -> bool {
        self.preset.is_some() || self.slope.is_some() || self.spec.is_some()
    }

    fn resolve(&self) -> Result<Source> {
        match (&self.preset, &self.slope, &self.spec) {
            (Some(p), None, None) if self.y.is_none() && self.y_prime.is_none() => input::preset(p),
            (None, Some(s), None) => input::inline(s, self.y.as_deref(), self.y_prime.as_deref()),
            (None, None, Some(path)) if self.y.is_none() && self.y_prime.is_none() => input::spec_file(path),
            (None, None, None) => bail!("give one of --preset, --slope or --spec"),
            _ => bail!("--preset, --slope (with --y/--yprime) and --spec are mutually exclusive"),
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print a prefix of a standard or coloured sequence
    Generate {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, default_value_t = 100)]
        length: usize,
        /// Also print the image over {a, b}
        #[arg(long)]
        discolour: bool,
    },
    /// Exact maximum exponent of a prefix or a word, with a witness
    Exponent {
        #[command(flatten)]
        source: SourceArgs,
        /// Word expression such as "ababa" or "(1..11)^5"
        #[arg(long)]
        word: Option<String>,
        #[arg(long, default_value_t = 5000)]
        length: usize,
    },
    /// Check the return-word ratios of a family against 1/(2δ-2)
    Certify {
        /// x12 or x2delta:<δ>
        family: Option<String>,
        #[arg(long)]
        preset: Option<String>,
        #[arg(long, default_value_t = DEFAULT_N_MAX)]
        nmax: usize,
        /// Largest k' tried; default 10δ
        #[arg(long)]
        kcap: Option<u64>,
    },
    /// Balance, Pansiot properties, sticks and residue classes
    Inspect {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        word: Option<String>,
        #[arg(long, default_value_t = 2000)]
        length: usize,
        /// Alphabet size for the Pansiot checks; default: the word's alphabet
        #[arg(long)]
        d: Option<usize>,
    },
    /// Enclosure of the critical exponent of a standard Sturmian sequence
    Formula {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, default_value_t = DEFAULT_N_MAX)]
        nmax: usize,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Bounded search for balanced Pansiot words over d letters
    Search {
        #[arg(long)]
        d: usize,
        /// Default 6(d+1)
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long = "max-words")]
        max_words: Option<usize>,
    },
}

/// Outcome of a successful run.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Status {
    Success,
    Fail,
}

/// Parses the process arguments, runs, and maps the result to an exit
/// code: 0 success or PASS, 1 FAIL, 2 usage or input error.
pub fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match run(&cli, &mut out) {
        Ok(Status::Success) => ExitCode::SUCCESS,
        Ok(Status::Fail) => ExitCode::from(1),
        // reader went away, e.g. `| head`
        Err(e) if e.downcast_ref::<std::io::Error>().is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe) => {
            ExitCode::SUCCESS
        }
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

pub fn run(cli: &Cli, out: &mut impl Write) -> Result<Status> {
    let pool = parallel::pool(cli.threads)?;
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Generate { source, length, discolour } => generate(out, json, source, *length, *discolour),
        Command::Exponent { source, word, length } => exponent(out, json, &pool, source, word.as_deref(), *length),
        Command::Certify { family, preset, nmax, kcap } => {
            let name = match (family, preset) {
                (Some(f), None) | (None, Some(f)) => f,
                (Some(_), Some(_)) => bail!("give the family once"),
                (None, None) => bail!("certify needs a family such as x12 or x2delta:7"),
            };
            certify(out, json, name.parse()?, *nmax, *kcap)
        }
        Command::Inspect { source, word, length, d } => inspect(out, json, source, word.as_deref(), *length, *d),
        Command::Formula { source, nmax, tol } => formula(out, json, source, *nmax, *tol),
        Command::Search { d, depth, max_words } => search(out, json, &pool, *d, *depth, *max_words),
    }
}

fn positive(name: &str, v: usize) -> Result<usize> {
    if v == 0 {
        bail!("--{name} must be positive");
    }
    Ok(v)
}

fn frac(f: &Fraction) -> String {
    format!("{f} ({})", f.to_decimal(7))
}

fn emit_json(out: &mut impl Write, value: &impl Serialize) -> Result<()> {
    // serialize first so write errors stay `io::Error`
    let line = serde_json::to_string(value)?;
    writeln!(out, "{line}")?;
    Ok(())
}

fn generate(out: &mut impl Write, json: bool, source: &SourceArgs, length: usize, with_pi: bool) -> Result<Status> {
    let src = source.resolve()?;
    let v = src.prefix(positive("length", length)?);
    let pi = match (&src.sequence, with_pi) {
        (_, false) => None,
        (Sequence::Balanced(spec), true) => Some(discolour(&v, &spec.split())?),
        (Sequence::Sturmian(_), true) => bail!("--discolour needs a coloured sequence"),
    };
    if json {
        let record = GenerateJson {
            source: src.label,
            word: WordJson::new(&src.alphabet, &v),
            discoloured: pi.as_ref().map(|p| WordJson::new(&Alphabet::binary(), p)),
        };
        emit_json(out, &record)?;
        return Ok(Status::Success);
    }
    match pi {
        None => writeln!(out, "{}", render_human(&src.alphabet, &v))?,
        Some(pi) => {
            let top: Vec<String> = v.iter().map(|&l| human_name(src.alphabet.name(l))).collect();
            let binary = Alphabet::binary();
            let bottom: Vec<&str> = pi.iter().map(|&l| binary.name(l)).collect();
            let width = top.iter().map(|t| t.chars().count()).max().unwrap_or(1);
            let sep = if width > 1 { " " } else { "" };
            let pad = |s: &str| format!("{s:<width$}");
            let row = |cells: Vec<String>| cells.join(sep).trim_end().to_string();
            writeln!(out, "{}", row(top.iter().map(|t| pad(t)).collect()))?;
            writeln!(out, "{}", row(bottom.iter().map(|b| pad(b)).collect()))?;
        }
    }
    Ok(Status::Success)
}

fn exponent(
    out: &mut impl Write,
    json: bool,
    pool: &rayon::ThreadPool,
    source: &SourceArgs,
    word: Option<&str>,
    length: usize,
) -> Result<Status> {
    let (label, alphabet, w, x11) = match (word, source.given()) {
        (Some(expr), false) => {
            let (alphabet, w) = input::parse_word_expr(expr)?;
            (expr.to_string(), alphabet, w, false)
        }
        (None, true) => {
            let src = source.resolve()?;
            let length = positive("length", length)?;
            if length < 2 {
                bail!("--length must be at least 2");
            }
            let x11 = src.label == Preset::X11.to_string();
            (src.label.clone(), src.alphabet.clone(), src.prefix(length), x11)
        }
        (Some(_), true) => bail!("--word cannot be combined with a sequence"),
        (None, false) => bail!("give --word or a sequence (--preset, --slope or --spec)"),
    };
    let max = parallel::max_factor_exponent(pool, &w)?;
    if json {
        emit_json(out, &ExponentJson::new(&label, &alphabet, &w, &max))?;
        return Ok(Status::Success);
    }
    let MaxExponent { exponent, start, len, period } = &max;
    writeln!(out, "{}", frac(exponent))?;
    let factor = render_human(&alphabet, &w[*start..start + len]);
    writeln!(out, "witness: start {start}, length {len}, period {period}: {factor}")?;
    if x11 {
        let which = if *exponent == Fraction::new(10u8, 9u8) {
            "10/9 = (d-1)/(d-2) is attained; 11/10 is not"
        } else if *exponent == Fraction::new(11u8, 10u8) {
            "11/10 is attained; 10/9 is not"
        } else {
            "neither 10/9 nor 11/10 is attained in this prefix"
        };
        writeln!(out, "x11: {which}")?;
    }
    Ok(Status::Success)
}

fn certify(out: &mut impl Write, json: bool, preset: Preset, nmax: usize, kcap: Option<u64>) -> Result<Status> {
    let cert = certify_family(preset, nmax, kcap)?;
    let status = match cert.verdict {
        Verdict::Pass => Status::Success,
        Verdict::Fail => Status::Fail,
    };
    if json {
        emit_json(out, &CertificateJson::from(&cert))?;
    } else {
        write_certificate(out, &cert, kcap.unwrap_or(10 * cert.delta))?;
    }
    Ok(status)
}

fn write_certificate(out: &mut impl Write, cert: &FamilyCertificate, kcap: u64) -> Result<()> {
    writeln!(out, "family {}: delta {}, bound {}, k' <= {kcap}", cert.preset, cert.delta, frac(&cert.bound))?;
    let cells = |r: &RatioReport| {
        [
            r.descriptor.n.to_string(),
            r.descriptor.m.to_string(),
            r.descriptor.r_len().to_string(),
            r.descriptor.s_len().to_string(),
            r.best_pair.k_prime.to_string(),
            r.best_pair.l_prime.to_string(),
            r.return_len.to_string(),
            frac(&r.ratio),
            if r.passes() { "ok" } else { "FAIL" }.to_string(),
        ]
    };
    let header = ["N", "m", "|r|", "|s|", "k'", "l'", "|v|", "ratio", ""].map(String::from);
    let rows: Vec<[String; 9]> = std::iter::once(header).chain(cert.reports.iter().map(cells)).collect();
    let widths: Vec<usize> = (0..9).map(|c| rows.iter().map(|r| r[c].len()).max().unwrap_or(0)).collect();
    for row in &rows {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .enumerate()
            .map(|(c, (cell, &w))| if c < 7 { format!("{cell:>w$}") } else { format!("{cell:<w$}") })
            .collect();
        writeln!(out, "{}", line.join("  ").trim_end())?;
    }
    let sf = &cert.short_factors;
    let delta = sf.delta;
    let pair = match sf.min_primed_pair_distance {
        Some(p) => p.to_string(),
        None => "none".to_string(),
    };
    writeln!(
        out,
        "short factors (prefix {}): letter distance {} (need >= {}), primed pair distance {pair} (need > {}), block structure {}: {}",
        sf.prefix_len,
        sf.min_letter_distance,
        2 * delta - 2,
        4 * delta - 4,
        if sf.blocks_ok { "intact" } else { "broken" },
        if sf.passes() { "ok" } else { "FAIL" },
    )?;
    if let Some(w) = &cert.witness {
        writeln!(
            out,
            "witness: (N, m) = ({}, {}), (k', l') = ({}, {}), |r| = {}, |s| = {}, ratio {} >= {}",
            w.descriptor.n,
            w.descriptor.m,
            w.best_pair.k_prime,
            w.best_pair.l_prime,
            w.descriptor.r_len(),
            w.descriptor.s_len(),
            frac(&w.ratio),
            w.bound
        )?;
    }
    writeln!(out, "{cert}")?;
    Ok(())
}

struct Inspection {
    json: InspectJson,
    report: StickReport,
    residues: Option<ResidueReport>,
}

fn inspect_word(label: String, alphabet: Alphabet, w: &[Letter], d: usize) -> Inspection {
    let violation = pansiot_violation(w, d);
    let report = trace_sticks(w, d);
    let residues = residue_detectors(w, d);
    let json = InspectJson {
        source: label,
        length: w.len(),
        d,
        balance: BalanceJson::new(&alphabet, balance_violation(w).as_ref()),
        pansiot: violation.is_none(),
        violation: violation.as_ref().map(|v| ViolationJson::new(&alphabet, v)),
        sticks: SticksJson::new(&alphabet, &report),
        residues: residues.as_ref().map(ResiduesJson::from),
    };
    Inspection { json, report, residues }
}

fn inspect(
    out: &mut impl Write,
    json: bool,
    source: &SourceArgs,
    word: Option<&str>,
    length: usize,
    d: Option<usize>,
) -> Result<Status> {
    let (label, alphabet, w) = match (word, source.given()) {
        (Some(expr), false) => {
            let (alphabet, w) = input::parse_word_expr(expr)?;
            (expr.to_string(), alphabet, w)
        }
        (None, true) => {
            let src = source.resolve()?;
            let w = src.prefix(positive("length", length)?);
            (src.label, src.alphabet, w)
        }
        (Some(_), true) => bail!("--word cannot be combined with a sequence"),
        (None, false) => bail!("give --word or a sequence (--preset, --slope or --spec)"),
    };
    let d = d.unwrap_or(alphabet.len());
    if d < 2 {
        bail!("--d must be at least 2");
    }
    if d < alphabet.len() {
        bail!("the word uses {} letters but --d is {d}", alphabet.len());
    }
    let ins = inspect_word(label, alphabet, &w, d);
    if json {
        emit_json(out, &ins.json)?;
    } else {
        write_inspection(out, &ins)?;
    }
    Ok(Status::Success)
}

fn write_inspection(out: &mut impl Write, ins: &Inspection) -> Result<()> {
    let j = &ins.json;
    let name = |l: &str| human_name(l);
    writeln!(out, "source: {}", j.source)?;
    writeln!(out, "length: {}, d = {}", j.length, j.d)?;
    match &j.balance {
        b if b.balanced => writeln!(out, "balanced: true")?,
        b => writeln!(
            out,
            "balanced: false, factors of length {} at {} and {} differ by at least 2 in letter {}",
            b.len.unwrap_or(0),
            b.heavy_start.unwrap_or(0),
            b.light_start.unwrap_or(0),
            name(b.letter.as_deref().unwrap_or("?"))
        )?,
    }
    match &j.violation {
        None => writeln!(out, "pansiot: true")?,
        Some(v) => {
            let what = if v.property == "i" {
                "(i) repeated letter in a window of length d-1"
            } else {
                "(ii) two consecutive occurrences followed by the same letter"
            };
            writeln!(out, "pansiot: false, {what} at index {} (letter {})", v.index, name(&v.letter))?;
        }
    }
    let r = &ins.report;
    let all_sticks: Vec<StickKind> = r.traces.iter().flat_map(|t| t.sticks.iter().map(|s| s.kind)).collect();
    let count = |k| all_sticks.iter().filter(|&&s| s == k).count();
    let (rs, vs, ls) = (count(StickKind::RightSlanted), count(StickKind::Vertical), count(StickKind::LeftSlanted));
    let mut line = format!("sticks: {rs} right-slanted, {vs} vertical, {ls} left-slanted");
    if vs > 0 && rs == 0 && ls == 0 && r.distance_violations.is_empty() {
        line.push_str(" (all vertical)");
    }
    writeln!(out, "{line}")?;
    if !r.distance_violations.is_empty() {
        let mut by_distance: BTreeMap<usize, usize> = BTreeMap::new();
        for v in &r.distance_violations {
            *by_distance.entry(v.second_pos - v.first_pos).or_default() += 1;
        }
        let list: Vec<String> = by_distance.iter().map(|(dist, n)| format!("distance-{dist} x{n}")).collect();
        writeln!(out, "other distances: {}", list.join(", "))?;
    }
    let mut classes: BTreeMap<&str, Vec<String>> = BTreeMap::new();
    for t in &j.sticks.traces {
        classes.entry(t.class.as_str()).or_default().push(name(&t.letter));
    }
    for (class, letters) in &classes {
        writeln!(out, "{class}: {}", letters.join(" "))?;
    }
    writeln!(out, "parallel sticks: {}", j.sticks.parallel)?;
    if j.pansiot {
        let holds = if j.sticks.trace_disjunction { "holds" } else { "fails" };
        writeln!(out, "frequent all right-slanted or rare all left-slanted: {holds}")?;
    }
    if let Some(res) = &ins.residues {
        for (tag, rc) in [("frequent", &res.frequent), ("rare", &res.rare)] {
            writeln!(
                out,
                "{tag} vertical sticks: {}, full residue classes mod {}: {:?}",
                rc.vertical_sticks, rc.modulus, rc.full
            )?;
        }
        writeln!(out, "residue conflict: {}", res.conflict())?;
    }
    Ok(())
}

/// `tol` becomes the exact `1/⌈1/tol⌉`.
fn tolerance(tol: f64) -> Result<Fraction> {
    if !(tol.is_finite() && tol > 0.0 && tol < 1.0) {
        bail!("--tol must lie strictly between 0 and 1");
    }
    Ok(Fraction::new(1u8, (1.0 / tol).ceil() as u64))
}

fn formula(out: &mut impl Write, json: bool, source: &SourceArgs, nmax: usize, tol: f64) -> Result<Status> {
    let src = source.resolve()?;
    let cf = match &src.sequence {
        Sequence::Sturmian(cf) => cf.clone(),
        Sequence::Balanced(spec) => spec.slope.clone(),
    };
    let e = sturmian_critical_exponent(&cf, positive("nmax", nmax)?, &tolerance(tol)?)?;
    if json {
        emit_json(out, &FormulaJson::new(&cf, &e))?;
        return Ok(Status::Success);
    }
    writeln!(out, "slope {cf}, directive {}", cf.directive())?;
    writeln!(out, "critical exponent in [{}, {}]", e.lower.to_decimal(12), e.upper.to_decimal(12))?;
    writeln!(out, "lower: {}", frac(&e.lower))?;
    writeln!(out, "upper: {}", frac(&e.upper))?;
    writeln!(
        out,
        "largest explicit value {} at (N, m) = ({}, {}), N <= {}, tail depth {}",
        frac(&e.finite_max),
        e.argmax.0,
        e.argmax.1,
        e.explicit_up_to,
        e.tail_depth
    )?;
    Ok(Status::Success)
}

fn search(
    out: &mut impl Write,
    json: bool,
    pool: &rayon::ThreadPool,
    d: usize,
    depth: Option<usize>,
    max_words: Option<usize>,
) -> Result<Status> {
    if d < 3 {
        bail!("--d must be at least 3");
    }
    if d > 256 {
        return Err(anyhow!("--d must be at most 256"));
    }
    let mut cfg = SearchConfig::new(d);
    if let Some(depth) = depth {
        cfg.depth = positive("depth", depth)?;
    }
    if let Some(m) = max_words {
        cfg.max_words = m;
    }
    let outcome = parallel::search(pool, &cfg);
    let alphabet = Alphabet::new((0..d).map(|i| i.to_string()).collect())?;
    for w in &outcome.words {
        let report = trace_sticks(w, d);
        let residues = residue_detectors(w, d);
        if json {
            let line = SearchLine::Word(SearchWordJson {
                word: WordJson::new(&alphabet, w),
                sticks: SticksJson::new(&alphabet, &report),
                residues: residues.as_ref().map(ResiduesJson::from),
            });
            emit_json(out, &line)?;
            continue;
        }
        let mut classes: BTreeMap<&str, usize> = BTreeMap::new();
        for t in &report.traces {
            *classes.entry(class_name(t.class)).or_default() += 1;
        }
        let classes: Vec<String> = classes.iter().map(|(c, n)| format!("{c} {n}")).collect();
        let disjunction = if report.trace_disjunction() { "holds" } else { "fails" };
        writeln!(out, "{}  [{}; disjunction {disjunction}]", alphabet.render_separated(w), classes.join(", "))?;
    }
    let summary = SearchSummaryJson {
        d,
        depth: cfg.depth,
        words: outcome.words.len(),
        nodes: outcome.nodes,
        dead_ends: outcome.dead_ends,
        longest_dead_end: outcome.longest_dead_end,
        truncated: outcome.truncated,
    };
    if json {
        emit_json(out, &SearchLine::Summary(summary))?;
    } else {
        writeln!(
            out,
            "d = {d}, depth {}: {} words{}, {} nodes, {} dead ends (longest {})",
            summary.depth,
            summary.words,
            if summary.truncated { " (truncated)" } else { "" },
            summary.nodes,
            summary.dead_ends,
            summary.longest_dead_end
        )?;
    }
    Ok(Status::Success)
}

#[cfg(test)]
mod tests {
    use super::*;
    use balword_core::pansiot::PansiotProperty;

    fn run_args(args: &[&str]) -> (Result<Status>, String) {
        let cli = Cli::try_parse_from(std::iter::once("balword").chain(args.iter().copied())).unwrap();
        let mut buf = Vec::new();
        let status = run(&cli, &mut buf);
        (status, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn certificate_json_decodes_to_the_engine_value() {
        let (status, text) = run_args(&["certify", "x12", "--nmax", "8", "--format", "json"]);
        assert_eq!(status.unwrap(), Status::Success);
        let j: CertificateJson = serde_json::from_str(&text).unwrap();
        assert_eq!(j.decode().unwrap(), certify_family(Preset::X12, 8, None).unwrap());
        let (status, text) = run_args(&["certify", "x2delta:6", "--nmax", "8", "--format", "json"]);
        assert_eq!(status.unwrap(), Status::Fail);
        let j: CertificateJson = serde_json::from_str(&text).unwrap();
        assert_eq!(j.decode().unwrap(), certify_family(Preset::X2Delta(6), 8, None).unwrap());
    }

    #[test]
    fn formula_json_decodes() {
        let (_, text) = run_args(&["formula", "--preset", "fibonacci", "--nmax", "12", "--format", "json"]);
        let j: FormulaJson = serde_json::from_str(&text).unwrap();
        let (cf, e) = j.decode().unwrap();
        let tol = tolerance(1e-9).unwrap();
        assert_eq!(e, sturmian_critical_exponent(&cf, 12, &tol).unwrap());
    }

    #[test]
    fn inspect_json_decodes() {
        let (_, text) = run_args(&["inspect", "--word", "(1..11)^5", "--format", "json"]);
        let j: InspectJson = serde_json::from_str(&text).unwrap();
        let (alphabet, w) = input::parse_word_expr("(1..11)^5").unwrap();
        let v = j.violation.as_ref().unwrap().decode(&alphabet).unwrap();
        assert_eq!(Some(v), pansiot_violation(&w, 11));
        assert_eq!(v.property, PansiotProperty::DistinctSuccessors);
        let (_, text) = run_args(&["inspect", "--word", "aabb", "--d", "3", "--format", "json"]);
        let j: InspectJson = serde_json::from_str(&text).unwrap();
        let (alphabet, w) = input::parse_word_expr("aabb").unwrap();
        assert_eq!(j.balance.decode(&alphabet).unwrap(), balance_violation(&w));
    }

    #[test]
    fn residues_round_trip_through_search_lines() {
        let (_, text) = run_args(&["search", "--d", "8", "--depth", "54", "--format", "json"]);
        let lines: Vec<SearchLine> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
        let SearchLine::Summary(summary) = lines.last().unwrap() else { panic!("summary last") };
        assert_eq!(summary.words + 1, lines.len());
        for line in &lines[..lines.len() - 1] {
            let SearchLine::Word(rec) = line else { panic!("word record") };
            let (_, w) = rec.word.decode().unwrap();
            let expected = residue_detectors(&w, 8);
            assert_eq!(rec.residues.as_ref().map(ResidueReport::from), expected);
        }
    }

    #[test]
    fn tolerance_is_exact() {
        assert_eq!(tolerance(1e-9).unwrap(), Fraction::new(1u8, 1_000_000_000u64));
        assert!(tolerance(0.0).is_err());
        assert!(tolerance(f64::NAN).is_err());
    }
}
