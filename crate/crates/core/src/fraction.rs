use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};

/// Signed exact rational used for comparisons against slopes.
pub type Rational = Ratio<BigInt>;

/// Non-negative exact fraction in lowest terms.
///
/// Exponents `|z|/per(z)` and return-word ratios `|w|/|v|` are all of this
/// form. The denominator is always at least one.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Fraction(Ratio<BigUint>);

impl Fraction {
    /// Panics if `den` is zero.
    pub fn new(num: impl Into<BigUint>, den: impl Into<BigUint>) -> Self {
        let den = den.into();
        assert!(!den.is_zero(), "fraction with zero denominator");
        Fraction(Ratio::new(num.into(), den))
    }

    pub fn from_integer(n: impl Into<BigUint>) -> Self {
        Fraction(Ratio::from_integer(n.into()))
    }

    pub fn numer(&self) -> &BigUint {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigUint {
        self.0.denom()
    }

    pub fn to_rational(&self) -> Rational {
        Rational::new(BigInt::from(self.numer().clone()), BigInt::from(self.denom().clone()))
    }

    /// Fails on negative input.
    pub fn from_rational(r: &Rational) -> Option<Self> {
        let n = r.numer().to_biguint()?;
        let d = r.denom().to_biguint()?;
        Some(Fraction::new(n, d))
    }

    /// Decimal expansion truncated (not rounded) to `digits` places.
    pub fn to_decimal(&self, digits: usize) -> String {
        decimal_string(self.numer(), self.denom(), digits)
    }

    /// Floating approximation, advisory only.
    pub fn approx_f64(&self) -> f64 {
        approx_ratio(self.numer(), self.denom())
    }
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Fraction {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl From<Ratio<BigUint>> for Fraction {
    fn from(r: Ratio<BigUint>) -> Self {
        Fraction(r)
    }
}

pub(crate) fn decimal_string(num: &BigUint, den: &BigUint, digits: usize) -> String {
    use core::fmt::Write;
    let (int, mut rem) = num.div_rem(den);
    let mut out = String::new();
    let _ = write!(out, "{int}");
    if digits > 0 {
        out.push('.');
        let ten = BigUint::from(10u8);
        for _ in 0..digits {
            rem *= &ten;
            let (d, r) = rem.div_rem(den);
            rem = r;
            let _ = write!(out, "{d}");
        }
    }
    out
}

pub(crate) fn approx_ratio(num: &BigUint, den: &BigUint) -> f64 {
    // keep both operands within f64 range before dividing
    let shift = num.bits().max(den.bits()).saturating_sub(900);
    let n = (num >> shift).to_f64().unwrap_or(f64::INFINITY);
    let d = (den >> shift).to_f64().unwrap_or(f64::INFINITY);
    n / d
}

/// Floating approximation of a signed rational.
pub(crate) fn approx_rational(r: &Rational) -> f64 {
    let v = approx_ratio(r.numer().magnitude(), r.denom().magnitude());
    if (r.numer() < &BigInt::zero()) ^ (r.denom() < &BigInt::zero()) {
        -v
    } else {
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_display() {
        let f = Fraction::new(22u32, 20u32);
        assert_eq!(f.to_string(), "11/10");
        assert_eq!(f.to_decimal(7), "1.1000000");
    }

    #[test]
    fn decimal_truncates() {
        assert_eq!(Fraction::new(2u32, 3u32).to_decimal(4), "0.6666");
        assert_eq!(Fraction::new(105u32, 1038u32).to_decimal(7), "0.1011560");
    }

    #[test]
    fn ordering_is_exact() {
        assert!(Fraction::new(105u32, 1038u32) > Fraction::new(1u32, 10u32));
        assert!(Fraction::new(5u32, 96u32) < Fraction::new(1u32, 10u32));
    }

    #[test]
    fn approx_handles_huge_operands() {
        let big = BigUint::from(3u8).pow(2000);
        let f = Fraction::new(big.clone() * 2u8, big);
        assert!((f.approx_f64() - 2.0).abs() < 1e-12);
    }
}
