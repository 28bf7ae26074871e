use num_bigint::BigUint;
use num_traits::One;

use super::ContinuedFraction;
use crate::words::ParikhVector;
use crate::{Error, Result};

/// Parikh vector over `{a, b}` with arbitrary-precision counts.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BinaryParikh {
    pub a: BigUint,
    pub b: BigUint,
}

impl BinaryParikh {
    pub fn len(&self) -> BigUint {
        &self.a + &self.b
    }

    pub fn is_empty(&self) -> bool {
        self.len() == BigUint::ZERO
    }

    pub fn matches(&self, v: &ParikhVector) -> bool {
        self.a == BigUint::from(v.count(0)) && self.b == BigUint::from(v.count(1))
    }
}

/// A bispecial factor `z` of a standard sequence, identified by `(N, m)`,
/// with its prefix return word `r`, non-prefix return word `s` and the slope
/// of the derived sequence to `z`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BispecialDescriptor {
    pub n: usize,
    pub m: u64,
    pub v_r: BinaryParikh,
    pub v_s: BinaryParikh,
    pub v_z: BinaryParikh,
    pub derived_slope: ContinuedFraction,
}

impl BispecialDescriptor {
    pub fn r_len(&self) -> BigUint {
        self.v_r.len()
    }

    pub fn s_len(&self) -> BigUint {
        self.v_s.len()
    }

    pub fn z_len(&self) -> BigUint {
        self.v_z.len()
    }

    pub fn shortest_return(&self) -> BigUint {
        self.r_len().min(self.s_len())
    }
}

impl ContinuedFraction {
    /// `V(r) = (p_N, q_N)`, `V(s) = (m p_N + p_{N−1}, m q_N + q_{N−1})`,
    /// `V(z) = V(r) + V(s) − (1, 1)` and `θ' = [0; a_{N+1} − m, a_{N+2}, …]`.
    ///
    /// `(1, 0)` is accepted; with `a₁ = 1` it describes `z = b`.
    pub fn bispecial_descriptor(&self, n: usize, m: u64) -> Result<BispecialDescriptor> {
        if n == 0 {
            return Err(Error::IndexOutOfRange("N must be at least 1".into()));
        }
        let limit = self.term(n + 1);
        if m >= limit {
            return Err(Error::MOutOfRange { m, limit });
        }
        let cs = self.convergents(n);
        let (prev, cur) = (&cs[n], &cs[n + 1]);
        let mm = BigUint::from(m);
        let v_r = BinaryParikh { a: cur.p.clone(), b: cur.q.clone() };
        let v_s = BinaryParikh { a: &mm * &cur.p + &prev.p, b: &mm * &cur.q + &prev.q };
        let v_z = BinaryParikh { a: &v_r.a + &v_s.a - BigUint::one(), b: &v_r.b + &v_s.b - BigUint::one() };
        let derived_slope = self.with_head(limit - m, n + 1)?;
        Ok(BispecialDescriptor { n, m, v_r, v_s, v_z, derived_slope })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{occurrences, return_words};
    use alloc::vec;
    use proptest::prelude::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn delta_six_counterexample_descriptor() {
        let cf = ContinuedFraction::new(vec![1, 3], vec![1]).unwrap();
        let d = cf.bispecial_descriptor(7, 0).unwrap();
        assert_eq!(d.v_r, BinaryParikh { a: big(29), b: big(37) });
        assert_eq!(d.v_s, BinaryParikh { a: big(18), b: big(23) });
        assert_eq!((d.r_len(), d.s_len(), d.z_len()), (big(66), big(41), big(105)));
        assert_eq!(d.derived_slope, ContinuedFraction::fibonacci());
    }

    #[test]
    fn x12_short_descriptors() {
        let cf = ContinuedFraction::new(vec![1, 3], vec![2]).unwrap();
        let d = cf.bispecial_descriptor(1, 1).unwrap();
        assert_eq!((d.r_len(), d.s_len()), (big(2), big(3)));
        assert_eq!(d.derived_slope, ContinuedFraction::new(vec![], vec![2]).unwrap());
        let d = cf.bispecial_descriptor(1, 2).unwrap();
        assert_eq!((d.r_len(), d.s_len()), (big(2), big(5)));
        assert_eq!(d.derived_slope, ContinuedFraction::new(vec![1], vec![2]).unwrap());
        assert_eq!(cf.bispecial_descriptor(1, 3), Err(Error::MOutOfRange { m: 3, limit: 3 }));
        assert!(cf.bispecial_descriptor(0, 0).is_err());
    }

    fn slope() -> impl Strategy<Value = ContinuedFraction> {
        (proptest::collection::vec(1u64..4, 0..3), proptest::collection::vec(1u64..4, 1..3))
            .prop_map(|(pre, per)| ContinuedFraction::new(pre, per).unwrap())
    }

    proptest! {
        /// z is a prefix; r is the prefix return word, s the other one.
        #[test]
        fn descriptors_match_scanned_words(cf in slope(), n in 1usize..6, m_seed in 0u64..8) {
            let m = m_seed % cf.term(n + 1);
            let d = cf.bispecial_descriptor(n, m).unwrap();
            let z_len: usize = d.z_len().try_into().unwrap();
            let r_len: usize = d.r_len().try_into().unwrap();
            let s_len: usize = d.s_len().try_into().unwrap();
            let u = cf.standard_prefix(40 * (r_len + s_len) + 200);
            prop_assert!(d.v_r.matches(&u.prefix(r_len).parikh()));
            prop_assert!(d.v_z.matches(&u.prefix(z_len).parikh()));
            if z_len > 0 {
                let z = u.prefix(z_len);
                let returns = return_words(&u, &z).unwrap();
                let lens: alloc::vec::Vec<usize> = returns.iter().map(|w| w.len()).collect();
                prop_assert!(lens.contains(&r_len) && lens.contains(&s_len));
                prop_assert_eq!(returns.len(), 2);
                prop_assert!(returns.contains(&u.prefix(r_len)));
                let occ = occurrences(&u, &z).unwrap();
                prop_assert_eq!(occ[0], 0);
            }
        }
    }
}
