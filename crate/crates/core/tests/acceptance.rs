//! Acceptance checks, one line per criterion.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use balword_core::colouring::{colour, validate_constant_gap, BalancedSpec, ConstantGapSequence, Preset};
use balword_core::critexp::{
    certify_family, critical_exponent_bruteforce, return_word_divisibility, short_factor_check,
    sturmian_critical_exponent, x11_report, Sequence, Verdict,
};
use balword_core::sturmian::ContinuedFraction;
use balword_core::words::{is_balanced, max_factor_exponent, Letter};
use balword_core::{Alphabet, Fraction, Rational};
use num_bigint::{BigInt, BigUint};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, what: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn within(start: Instant, limit: Duration) -> Result<String, String> {
    let t = start.elapsed();
    check(t < limit, format!("took {t:.2?}, limit {limit:?}"))?;
    Ok(format!("{t:.2?}"))
}

fn frac(n: u64, d: u64) -> Fraction {
    Fraction::new(n, d)
}

fn binary(s: &str) -> Vec<Letter> {
    Alphabet::binary().parse(s).unwrap().into_letters()
}

fn fibonacci_prefix() -> Outcome {
    let start = Instant::now();
    let u = ContinuedFraction::fibonacci().standard_prefix(22);
    let got = Alphabet::binary().render(&u);
    check(got == "babbababbabbababbababb", format!("got {got}"))?;
    within(start, Duration::from_secs(1))
}

/// `G: a → a, b → ab` and `D: a → ba, b → b`, applied right to left.
fn morphisms(word: &str, directive: &str) -> String {
    let mut w = word.to_string();
    for m in directive.chars().rev() {
        w = w
            .chars()
            .map(|c| match (m, c) {
                ('G', 'b') => "ab",
                ('D', 'a') => "ba",
                (_, 'a') => "a",
                _ => "b",
            })
            .collect();
    }
    w
}

fn example_two() -> Outcome {
    let expected = ["bababab", "bababab", "babababab", "bababab", "babababab"].concat();
    check(morphisms("aab", "DGGGDD") == expected, "DG³D²(aab) does not match the listed blocks")?;
    let cf: ContinuedFraction = "[0; 1, 3, 2, 2]".parse().map_err(|e| format!("{e}"))?;
    let render = |n| Alphabet::binary().render(&cf.standard_prefix(n));
    let p43 = render(43);
    check(render(expected.len()) == expected, "length-39 prefix differs")?;
    check(p43.starts_with(&expected), format!("length-43 prefix {p43} does not start with DG³D²(aab)"))?;
    Ok(format!(
        "DG³D²(aab) has {} letters; it equals standard_prefix(39) and begins standard_prefix(43) = {p43}",
        expected.len()
    ))
}

fn colouring_example() -> Outcome {
    let spec = BalancedSpec::from_text(ContinuedFraction::fibonacci(), "AB", "0102").map_err(|e| e.to_string())?;
    let v = spec.prefix(31);
    let got = spec.alphabet.render(&v);
    check(got == "0A10B2A01B02A0B10A2B01A02B0A10B", format!("got {got}"))?;
    let y = validate_constant_gap(spec.y.period_word()).unwrap();
    let fib = binary("babbababbabbababbababb");
    let u = ContinuedFraction::fibonacci().standard_prefix(31);
    check(u[..22] == fib[..], "Fibonacci prefix changed")?;
    let direct = colour(&u, &y, &spec.y_prime).unwrap();
    check(direct == v, "colour() disagrees with the preset prefix")?;
    Ok(got)
}

/// `x ≤ (5 + √5)/2 = 3 + φ`, exactly.
fn below_three_plus_phi(x: &Rational) -> bool {
    let t = x * Rational::from_integer(BigInt::from(2)) - Rational::from_integer(BigInt::from(5));
    t < Rational::from_integer(BigInt::from(0)) || &t * &t <= Rational::from_integer(BigInt::from(5))
}

fn fibonacci_formula() -> Outcome {
    let start = Instant::now();
    let tol = frac(1, 1_000_000_000);
    let e = sturmian_critical_exponent(&ContinuedFraction::fibonacci(), 40, &tol).map_err(|e| e.to_string())?;
    check(below_three_plus_phi(&e.lower.to_rational()), format!("lower end {} above 3+φ", e.lower.to_decimal(12)))?;
    let upper = e.upper.to_rational();
    check(!below_three_plus_phi(&upper) || upper == e.lower.to_rational(), "upper end below 3+φ")?;
    check(e.width() <= tol, format!("width {}", e.width().to_decimal(15)))?;
    let t = within(start, Duration::from_secs(1))?;
    Ok(format!("[{}, {}] width {:.2e}, {t}", e.lower.to_decimal(12), e.upper.to_decimal(12), e.width().approx_f64()))
}

fn x12_flagship() -> Outcome {
    let x12 = Sequence::Balanced(Preset::X12.spec().unwrap());
    let at_5000 = critical_exponent_bruteforce(&x12, 5000).unwrap();
    check(at_5000.exponent == frac(11, 10), format!("prefix 5000 gave {}", at_5000.exponent))?;
    let mut t = String::new();
    for n in [1000, 2000, 5000, 10_000, 20_000, 50_000] {
        let start = Instant::now();
        let m = critical_exponent_bruteforce(&x12, n).unwrap();
        check(m.exponent <= frac(11, 10), format!("prefix {n} reached {}", m.exponent))?;
        if n == 50_000 {
            t = within(start, Duration::from_secs(60))?;
        }
    }
    Ok(format!("11/10 at 5000 and never above up to 50000 ({t} at 50000)"))
}

fn x2delta_family() -> Outcome {
    let mut notes = Vec::new();
    for delta in 7..=10u64 {
        let start = Instant::now();
        let seq = Sequence::Balanced(Preset::X2Delta(delta as usize).spec().unwrap());
        let m = critical_exponent_bruteforce(&seq, 20_000).unwrap();
        let target = frac(2 * delta - 1, 2 * delta - 2);
        check(m.exponent == target, format!("δ={delta}: {} ≠ {target}", m.exponent))?;
        within(start, Duration::from_secs(60))?;
        notes.push(format!("δ={delta}: {target}"));
    }
    Ok(notes.join(", "))
}

fn certification_values() -> Outcome {
    let start = Instant::now();
    let x12 = certify_family(Preset::X12, 30, None).map_err(|e| e.to_string())?;
    check(x12.verdict == Verdict::Pass, format!("x12: {x12}"))?;
    let at = |n, m| x12.reports.iter().find(|r| (r.descriptor.n, r.descriptor.m) == (n, m)).map(|r| r.ratio.clone());
    check(at(1, 1) == Some(frac(1, 14)), format!("(1,1): {:?}", at(1, 1)))?;
    check(at(1, 2) == Some(frac(5, 96)), format!("(1,2): {:?}", at(1, 2)))?;
    let six = certify_family(Preset::X2Delta(6), 8, None).map_err(|e| e.to_string())?;
    check(six.verdict == Verdict::Fail, "x2delta:6 passed")?;
    let w = six.witness.ok_or("no witness")?;
    check((w.descriptor.n, w.descriptor.m) == (7, 0), format!("witness at {:?}", (w.descriptor.n, w.descriptor.m)))?;
    check((w.best_pair.k_prime, w.best_pair.l_prime) == (2, 1), "witness pair")?;
    check(
        (w.descriptor.r_len(), w.descriptor.s_len()) == (BigUint::from(66u8), BigUint::from(41u8)),
        "witness return lengths",
    )?;
    check(w.ratio == frac(105, 1038), format!("witness ratio {}", w.ratio))?;
    let t = within(start, Duration::from_secs(5))?;
    Ok(format!(
        "x12 {}; x2delta:6 {} with 105/1038 at (7,0), (k',l')=(2,1), |r|=66, |s|=41; {t}",
        x12.verdict, six.verdict
    ))
}

/// Constant gap sequence with `n` letters, built by splitting the residue
/// class of smallest modulus into 2 or 3 classes.
fn random_constant_gap(rng: &mut ChaCha8Rng, n: usize) -> Vec<(usize, usize)> {
    let mut classes = vec![(0usize, 1usize)];
    while classes.len() < n {
        let i = (0..classes.len()).min_by_key(|&i| classes[i].1).unwrap();
        let k = if classes.len() + 2 <= n && rng.gen_bool(0.5) { 3 } else { 2 };
        let (r, m) = classes.remove(i);
        classes.extend((0..k).map(|j| (r + j * m, k * m)));
    }
    classes
}

fn period_word(classes: &[(usize, usize)], first_id: Letter) -> Vec<Letter> {
    let len = classes.iter().map(|c| c.1).fold(1, num_integer::lcm);
    (0..len).map(|i| first_id + classes.iter().position(|&(r, m)| i % m == r).unwrap() as Letter).collect()
}

fn lower_bound_suite() -> Outcome {
    let bound = |d: u64| frac(d - 1, d - 2);
    let mut worst_margin: Option<(f64, String)> = None;
    let mut record = |e: &Fraction, d: u64, what: String| {
        let margin = e.approx_f64() - bound(d).approx_f64();
        if worst_margin.as_ref().is_none_or(|(m, _)| margin < *m) {
            worst_margin = Some((margin, what));
        }
    };
    for preset in [Preset::X11, Preset::X12, Preset::X2Delta(7), Preset::X2Delta(8)] {
        let d = preset.alphabet_size() as u64;
        let m = critical_exponent_bruteforce(&Sequence::Balanced(preset.spec().unwrap()), 5000).unwrap();
        check(m.exponent >= bound(d), format!("{preset}: {} < {}", m.exponent, bound(d)))?;
        record(&m.exponent, d, preset.to_string());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for trial in 0..20 {
        let d = rng.gen_range(11..=16usize);
        let na = rng.gen_range(1..d);
        let y = period_word(&random_constant_gap(&mut rng, na), 0);
        let y_prime = period_word(&random_constant_gap(&mut rng, d - na), na as Letter);
        let pre: Vec<u64> = (0..rng.gen_range(0..=3)).map(|_| rng.gen_range(1..=4)).collect();
        let per: Vec<u64> = (0..rng.gen_range(1..=3)).map(|_| rng.gen_range(1..=3)).collect();
        let cf = ContinuedFraction::new(pre, per).unwrap();
        let (y, y_prime): (ConstantGapSequence, ConstantGapSequence) =
            (validate_constant_gap(&y).unwrap(), validate_constant_gap(&y_prime).unwrap());
        let v = colour(&cf.standard_prefix(5000), &y, &y_prime).unwrap();
        let letters: BTreeSet<Letter> = v.iter().copied().collect();
        check(letters.len() == d, format!("trial {trial}: {} letters used, expected {d}", letters.len()))?;
        check(is_balanced(&v), format!("trial {trial}: colouring not balanced"))?;
        let m = max_factor_exponent(&v).unwrap();
        check(
            m.exponent >= bound(d as u64),
            format!("trial {trial} (d={d}, {cf}): {} < {}", m.exponent, bound(d as u64)),
        )?;
        record(&m.exponent, d as u64, format!("trial {trial} (d={d}, {cf})"));
    }
    let (margin, what) = worst_margin.unwrap();
    Ok(format!("4 presets and 20 random specs all ≥ (d-1)/(d-2); tightest: {what}, margin {margin:.4}"))
}

fn naive_max_exponent(w: &[Letter]) -> Fraction {
    let mut best = frac(1, 1);
    for i in 0..w.len() {
        for j in i + 1..=w.len() {
            let f = &w[i..j];
            let p = (1..=f.len()).find(|&p| (p..f.len()).all(|k| f[k] == f[k - p])).unwrap();
            best = best.max(frac(f.len() as u64, p as u64));
        }
    }
    best
}

fn naive_balanced(w: &[Letter]) -> bool {
    (1..w.len()).all(|len| {
        (0..3).all(|x| {
            let counts: Vec<usize> = w.windows(len).map(|f| f.iter().filter(|&&l| l == x).count()).collect();
            counts.iter().max().unwrap() - counts.iter().min().unwrap() <= 1
        })
    })
}

/// Words over `{0, 1, 2}` in which each letter first appears after all
/// smaller ones; every word is a renaming of exactly one of them.
fn canonical_words(max_len: usize, mut visit: impl FnMut(&[Letter])) {
    fn go(w: &mut Vec<Letter>, used: Letter, max_len: usize, visit: &mut dyn FnMut(&[Letter])) {
        visit(w);
        if w.len() == max_len {
            return;
        }
        for l in 0..=used.min(2) {
            w.push(l);
            go(w, used.max(l + 1), max_len, visit);
            w.pop();
        }
    }
    go(&mut Vec::new(), 0, max_len, &mut visit);
}

fn oracle_equivalence() -> Outcome {
    let mut exp_checked = 0usize;
    let mut mismatch = None;
    canonical_words(12, |w| {
        if w.is_empty() || mismatch.is_some() {
            return;
        }
        exp_checked += 1;
        if max_factor_exponent(w).unwrap().exponent != naive_max_exponent(w) {
            mismatch = Some(format!("max exponent of {w:?}"));
        }
    });
    let mut bal_checked = 0usize;
    canonical_words(10, |w| {
        if mismatch.is_some() {
            return;
        }
        bal_checked += 1;
        if is_balanced(w) != naive_balanced(w) {
            mismatch = Some(format!("balance of {w:?}"));
        }
    });
    if let Some(m) = mismatch {
        return Err(m);
    }
    let mut pairs = 0usize;
    for cf in ["[0; (1)]", "[0; 1, 3, (2)]", "[0; 5, 1, (1, 1, 1, 2)]"] {
        let cf: ContinuedFraction = cf.parse().unwrap();
        let u = cf.standard_prefix(20_000);
        let mut seen = BTreeSet::new();
        for len in 1..=15 {
            for f in u.windows(len) {
                let b = f.iter().filter(|&&l| l == 1).count() as u64;
                seen.insert((b, len as u64 - b));
            }
        }
        for k in 0..=15u64 {
            for l in 0..=15 - k {
                if k + l == 0 {
                    continue;
                }
                pairs += 1;
                check(cf.factor_exists(k, l) == seen.contains(&(k, l)), format!("{cf}: (k, l) = ({k}, {l})"))?;
            }
        }
    }
    Ok(format!(
        "{exp_checked} canonical words (length ≤ 12) for exponents, {bal_checked} (length ≤ 10) for balance, {pairs} (k,l) pairs; 0 mismatches"
    ))
}

fn short_factor_scans() -> Outcome {
    let mut notes = Vec::new();
    for (preset, delta) in [(Preset::X12, 6usize), (Preset::X2Delta(7), 7)] {
        let spec = preset.spec().unwrap();
        let r = short_factor_check(&spec, 2000).map_err(|e| e.to_string())?;
        check(
            r.min_letter_distance == 2 * delta - 2,
            format!("{preset}: min letter distance {}", r.min_letter_distance),
        )?;
        let pair = r.min_primed_pair_distance.ok_or(format!("{preset}: no repeated primed pair"))?;
        check(pair > 4 * delta - 4, format!("{preset}: primed pair distance {pair}"))?;
        let div = return_word_divisibility(&spec, 2000, 60).map_err(|e| e.to_string())?;
        check(div.violations.is_empty(), format!("{preset}: {} divisibility violations", div.violations.len()))?;
        notes.push(format!(
            "{preset}: letter {}, primed pair {pair}, {} return words of {} bispecials divisible by {delta}",
            r.min_letter_distance, div.return_words, div.bispecials
        ));
    }
    Ok(notes.join("; "))
}

fn x11_check() -> Outcome {
    let start = Instant::now();
    let r = x11_report(50_000).map_err(|e| e.to_string())?;
    check(r.y_prime_constant_gap, "y' is not constant gap")?;
    check(r.balanced, "prefix is not balanced")?;
    check(r.attains_10_9 != r.attains_11_10, format!("{r}"))?;
    let t = within(start, Duration::from_secs(120))?;
    Ok(format!("{r}; {t}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("Fibonacci generation", fibonacci_prefix),
        ("Example 2 reproduction", example_two),
        ("colouring reproduction", colouring_example),
        ("Sturmian formula engine", fibonacci_formula),
        ("x12 flagship", x12_flagship),
        ("x2delta family", x2delta_family),
        ("certification values", certification_values),
        ("lower-bound empirical suite", lower_bound_suite),
        ("oracle equivalence", oracle_equivalence),
        ("short-factor and divisibility scans", short_factor_scans),
        ("x11 check", x11_check),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(note) => println!("criterion {:>2} PASS  {name}: {note}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
