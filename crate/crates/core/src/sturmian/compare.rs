use core::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::ContinuedFraction;
use crate::Rational;

impl ContinuedFraction {
    /// Exact ordering of the rational `x` against the slope θ. Never `Equal`.
    pub fn cmp_rational(&self, x: &Rational) -> Ordering {
        let mut it = self.convergent_iter().skip(1).map(|c| c.to_rational());
        let mut a = it.next().expect("infinite");
        for b in it {
            // θ lies strictly between consecutive convergents
            let (lo, hi) = if a < b { (&a, &b) } else { (&b, &a) };
            if x <= lo {
                return Ordering::Less;
            }
            if x >= hi {
                return Ordering::Greater;
            }
            a = b;
        }
        unreachable!("convergent iterator is infinite")
    }

    /// Whether the standard sequence has a factor with `k` letters `b` and
    /// `l` letters `a`: `(k−1)θ − 1 < l < (k+1)θ + 1`.
    pub fn factor_exists(&self, k: u64, l: u64) -> bool {
        let int = |v: i128| Rational::from_integer(BigInt::from(v));
        let (k, l) = (k as i128, l as i128);
        let lower = compare_linear_form(self, &int(l + 1), &int(k - 1)) == Ordering::Greater;
        let upper = compare_linear_form(self, &int(l - 1), &int(k + 1)) == Ordering::Less;
        lower && upper
    }
}

/// Ordering of `r` against `c·θ`. With `c ≠ 0` the result is never `Equal`.
pub fn compare_linear_form(cf: &ContinuedFraction, r: &Rational, c: &Rational) -> Ordering {
    if c.is_zero() {
        return r.cmp(&Rational::zero());
    }
    let x = r / c;
    let ord = cf.cmp_rational(&x);
    if c.is_negative() {
        ord.reverse()
    } else {
        ord
    }
}

/// `(n₁θ + n₀) / (d₁θ + d₀)` with integer coefficients and a denominator that
/// stays positive on `[0, 1]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ThetaForm {
    pub num: (BigInt, BigInt),
    pub den: (BigInt, BigInt),
}

impl ThetaForm {
    pub fn new(num: (BigInt, BigInt), den: (BigInt, BigInt)) -> Self {
        let f = ThetaForm { num, den };
        assert!(
            f.den_at(&Rational::zero()).is_positive() && f.den_at(&Rational::from_integer(1.into())).is_positive(),
            "denominator must be positive on [0, 1]"
        );
        f
    }

    fn den_at(&self, t: &Rational) -> Rational {
        t * Rational::from_integer(self.den.0.clone()) + Rational::from_integer(self.den.1.clone())
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        let n = t * Rational::from_integer(self.num.0.clone()) + Rational::from_integer(self.num.1.clone());
        n / self.den_at(t)
    }

    /// Exact ordering of the form's value at θ against `x`.
    pub fn cmp_rational(&self, cf: &ContinuedFraction, x: &Rational) -> Ordering {
        // value vs x  ⟺  (n₁ − x d₁)θ vs x d₀ − n₀
        let int = |v: &BigInt| Rational::from_integer(v.clone());
        let c = int(&self.num.0) - x * int(&self.den.0);
        let r = x * int(&self.den.1) - int(&self.num.1);
        compare_linear_form(cf, &r, &c).reverse()
    }

    /// Rational enclosure of the value at θ with width at most `tol`.
    pub fn enclosure(&self, cf: &ContinuedFraction, tol: &Rational) -> (Rational, Rational) {
        let mut theta_tol = tol.clone();
        loop {
            let (lo, hi) = cf.enclosure(&theta_tol);
            // monotone on an interval free of poles
            let (a, b) = (self.eval(&lo), self.eval(&hi));
            let (a, b) = if a <= b { (a, b) } else { (b, a) };
            if &(&b - &a) <= tol {
                return (a, b);
            }
            theta_tol /= Rational::from_integer(BigInt::from(16));
        }
    }

    pub fn approx_f64(&self, cf: &ContinuedFraction) -> f64 {
        let tol = Rational::new(BigInt::from(1), BigInt::from(10u64.pow(15)));
        let (lo, hi) = self.enclosure(cf, &tol);
        crate::fraction::approx_rational(&((lo + hi) / Rational::from_integer(BigInt::from(2))))
    }
}
