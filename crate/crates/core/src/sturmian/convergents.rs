use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::ContinuedFraction;
use crate::Rational;

/// `p_N / q_N` for `N ≥ −1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Convergent {
    pub index: i64,
    pub p: BigUint,
    pub q: BigUint,
}

impl Convergent {
    pub fn to_rational(&self) -> Rational {
        Rational::new(BigInt::from(self.p.clone()), BigInt::from(self.q.clone()))
    }
}

/// Infinite iterator over convergents, starting at index −1, built from
/// `X_{N+1} = a_{N+1} X_N + X_{N−1}` with `p₋₁ = 1, p₀ = 0, q₋₁ = 0, q₀ = 1`.
pub struct Convergents<'a> {
    cf: &'a ContinuedFraction,
    prev: (BigUint, BigUint),
    cur: (BigUint, BigUint),
    index: i64,
}

impl Iterator for Convergents<'_> {
    type Item = Convergent;

    fn next(&mut self) -> Option<Convergent> {
        let out = Convergent { index: self.index, p: self.cur.0.clone(), q: self.cur.1.clone() };
        // a₀ = 0 makes the step from index −1 to 0 uniform
        let a = match self.index + 1 {
            0 => BigUint::zero(),
            n => BigUint::from(self.cf.term(n as usize)),
        };
        let next = (&a * &self.cur.0 + &self.prev.0, &a * &self.cur.1 + &self.prev.1);
        self.prev = core::mem::replace(&mut self.cur, next);
        self.index += 1;
        Some(out)
    }
}

impl ContinuedFraction {
    pub fn convergent_iter(&self) -> Convergents<'_> {
        Convergents {
            cf: self,
            prev: (BigUint::zero(), BigUint::one()),
            cur: (BigUint::one(), BigUint::zero()),
            index: -1,
        }
    }

    /// Convergents with indices `−1 ..= up_to`.
    pub fn convergents(&self, up_to: usize) -> Vec<Convergent> {
        self.convergent_iter().take(up_to + 2).collect()
    }

    /// Rational interval `[lo, hi]` containing the slope, of width at most
    /// `tol`. The slope lies strictly inside.
    pub fn enclosure(&self, tol: &Rational) -> (Rational, Rational) {
        let mut it = self.convergent_iter().skip(1);
        let mut a = it.next().unwrap().to_rational();
        for c in it {
            let b = c.to_rational();
            let (lo, hi) = if a < b { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
            if &(&hi - &lo) <= tol {
                return (lo, hi);
            }
            a = b;
        }
        unreachable!("convergent iterator is infinite")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn pq(c: &Convergent) -> (u64, u64) {
        (c.p.clone().try_into().unwrap(), c.q.clone().try_into().unwrap())
    }

    #[test]
    fn initial_conditions() {
        let cf = ContinuedFraction::fibonacci();
        let cs = cf.convergents(0);
        assert_eq!(cs.len(), 2);
        assert_eq!((cs[0].index, pq(&cs[0])), (-1, (1, 0)));
        assert_eq!((cs[1].index, pq(&cs[1])), (0, (0, 1)));
    }

    #[test]
    fn delta_six_family() {
        let cf = ContinuedFraction::new(vec![1, 3], vec![1]).unwrap();
        let cs = cf.convergents(7);
        assert_eq!(pq(&cs[8]), (29, 37));
        assert_eq!(pq(&cs[7]), (18, 23));
    }

    #[test]
    fn x12_slope() {
        let cf = ContinuedFraction::new(vec![1, 3], vec![2]).unwrap();
        let cs = cf.convergents(2);
        assert_eq!(pq(&cs[2]), (1, 1));
        assert_eq!(pq(&cs[3]), (3, 4));
    }

    #[test]
    fn enclosure_width() {
        let tol = Rational::new(BigInt::from(1), BigInt::from(10u64.pow(12)));
        let (lo, hi) = ContinuedFraction::fibonacci().enclosure(&tol);
        assert!(&hi - &lo <= tol);
        let phi = (5f64.sqrt() - 1.0) / 2.0;
        assert!(crate::fraction::approx_rational(&lo) <= phi + 1e-12);
        assert!(crate::fraction::approx_rational(&hi) >= phi - 1e-12);
    }

    proptest! {
        #[test]
        fn determinant_identity(pre in proptest::collection::vec(1u64..6, 0..4),
                                period in proptest::collection::vec(1u64..6, 1..4)) {
            let cf = ContinuedFraction::new(pre, period).unwrap();
            let cs = cf.convergents(60);
            for w in cs.windows(2) {
                let n = w[1].index;
                let lhs = BigInt::from(w[1].p.clone()) * BigInt::from(w[0].q.clone())
                    - BigInt::from(w[0].p.clone()) * BigInt::from(w[1].q.clone());
                let rhs = if n % 2 == 0 { BigInt::from(-1) } else { BigInt::from(1) };
                prop_assert_eq!(lhs, rhs, "N = {}", n);
            }
        }
    }
}
