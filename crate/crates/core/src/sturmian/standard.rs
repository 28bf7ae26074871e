use alloc::vec;
use alloc::vec::Vec;

use super::ContinuedFraction;
use crate::words::{Letter, Word};

const A: Letter = 0;
const B: Letter = 1;

#[derive(Clone, Copy)]
enum Morphism {
    /// a → a, b → ab
    G,
    /// a → ba, b → b
    D,
}

impl Morphism {
    fn apply(self, w: &[Letter], cap: usize) -> Vec<Letter> {
        let mut out = Vec::with_capacity((2 * w.len()).min(cap));
        for &l in w {
            if out.len() >= cap {
                break;
            }
            match (self, l) {
                (Morphism::G, B) => out.extend([A, B]),
                (Morphism::D, A) => out.extend([B, A]),
                (_, l) => out.push(l),
            }
        }
        out.truncate(cap);
        out
    }
}

impl ContinuedFraction {
    /// Prefix of exactly `len` letters of the standard sequence of this
    /// slope, over `{a = 0, b = 1}`.
    ///
    /// The directive sequence is `D^{a₁} G^{a₂} D^{a₃} …`. Applying the first
    /// `k` runs to the first letter of the remaining standard sequence (`b`
    /// if run `k + 1` is a `D` run, else `a`) yields a guaranteed prefix; `k`
    /// grows until that prefix is long enough. Intermediate words are capped
    /// at `len`, which is sound because the morphisms are non-erasing.
    pub fn standard_prefix(&self, len: usize) -> Word {
        let mut runs = 1usize;
        loop {
            let seed = if runs % 2 == 0 { B } else { A };
            let mut word = vec![seed];
            for r in (1..=runs).rev() {
                let morphism = if r % 2 == 1 { Morphism::D } else { Morphism::G };
                for _ in 0..self.term(r) {
                    word = morphism.apply(&word, len);
                }
            }
            if word.len() >= len {
                word.truncate(len);
                return Word::new(word, 2).expect("binary letters");
            }
            runs += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{is_balanced, Alphabet};
    use proptest::prelude::*;

    fn render(w: &Word) -> alloc::string::String {
        Alphabet::binary().render(w)
    }

    #[test]
    fn fibonacci_prefix() {
        let fib = ContinuedFraction::fibonacci().standard_prefix(22);
        assert_eq!(render(&fib), "babbababbabbababbababb");
    }

    #[test]
    fn starts_with_b_power_then_a() {
        for a1 in 1..6u64 {
            let cf = ContinuedFraction::new(vec![a1], vec![2, 1]).unwrap();
            let prefix = cf.standard_prefix(a1 as usize + 1);
            let mut expected = vec![B; a1 as usize];
            expected.push(A);
            assert_eq!(prefix.letters(), expected.as_slice());
        }
    }

    fn slope() -> impl Strategy<Value = ContinuedFraction> {
        (proptest::collection::vec(1u64..5, 0..3), proptest::collection::vec(1u64..5, 1..3))
            .prop_map(|(pre, per)| ContinuedFraction::new(pre, per).unwrap())
    }

    proptest! {
        #[test]
        fn longer_prefixes_extend_shorter(cf in slope(), n in 1usize..300) {
            let short = cf.standard_prefix(n);
            let long = cf.standard_prefix(3 * n);
            prop_assert_eq!(short.letters(), &long[..n]);
        }

        #[test]
        fn prefixes_are_balanced_without_aa(cf in slope()) {
            let u = cf.standard_prefix(400);
            prop_assert!(is_balanced(&u));
            prop_assert!(!u.windows(2).any(|p| p == [A, A]));
        }
    }
}
