//! Counting basic commutators with the Witt necklace formula
//! `W(w, q) = (1/w) * sum_{d | w} mu(d) * q^(w/d)`.

use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::Zero;

use crate::arith::{divisors, factorize};

/// The Moebius function. `n` must be at least 1.
pub fn moebius(n: u64) -> i8 {
    assert!(n >= 1, "moebius is defined for n >= 1");
    let factors = factorize(n);
    if factors.iter().any(|&(_, e)| e > 1) {
        0
    } else if factors.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Number of basic commutators of the given weight on an alphabet of
/// `letters` symbols.
///
/// # Panics
///
/// If `weight` is 0, or if the Moebius sum is not divisible by `weight`
/// (which would mean the arithmetic is broken, not the input).
pub fn witt_count(weight: u32, letters: u64) -> BigUint {
    assert!(weight >= 1, "weight must be at least 1");
    let q = BigInt::from(letters);
    let mut sum = BigInt::zero();
    for d in divisors(u64::from(weight)) {
        let term = q.pow((u64::from(weight) / d) as u32);
        match moebius(d) {
            1 => sum += term,
            -1 => sum -= term,
            _ => {}
        }
    }
    let w = BigInt::from(weight);
    assert!(
        (&sum % &w).is_zero(),
        "Moebius sum for weight {weight} on {letters} letters is not divisible by the weight"
    );
    let count = sum / w;
    assert!(count.sign() != Sign::Minus);
    count.magnitude().clone()
}

/// `b_1, ..., b_k` where `b_i` counts basic commutators of weight `class + 1`
/// on `i` letters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WittTable {
    class: u32,
    counts: Vec<BigUint>,
}

impl WittTable {
    pub fn class(&self) -> u32 {
        self.class
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    /// `b_i` with 1-based `i`; `b_0` is taken as 0.
    pub fn b(&self, i: usize) -> BigUint {
        if i == 0 {
            BigUint::zero()
        } else {
            self.counts[i - 1].clone()
        }
    }

    /// `b_i - b_{i-1}`, the number of copies of `Z_{n_i}` in the multiplier.
    pub fn increment(&self, i: usize) -> BigUint {
        self.b(i) - self.b(i - 1)
    }
}

pub fn b_sequence(class: u32, rank: usize) -> WittTable {
    assert!(class >= 1, "nilpotency class must be at least 1");
    let counts = (1..=rank as u64).map(|i| witt_count(class + 1, i)).collect();
    WittTable { class, counts }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    /// Brute-force Moebius: the unique function with `sum_{d|n} mu(d) = [n == 1]`.
    fn moebius_by_divisor_sum(n: u64) -> i64 {
        if n == 1 {
            return 1;
        }
        -(1..n).filter(|d| n.is_multiple_of(*d)).map(moebius_by_divisor_sum).sum::<i64>()
    }

    #[test]
    fn moebius_examples() {
        assert_eq!(moebius(1), 1);
        assert_eq!(moebius(6), 1);
        assert_eq!(moebius(12), 0);
        assert_eq!(moebius(30), -1);
    }

    #[test]
    fn moebius_matches_divisor_sum_oracle() {
        for n in 1..=300 {
            assert_eq!(i64::from(moebius(n)), moebius_by_divisor_sum(n), "n = {n}");
        }
    }

    #[test]
    fn witt_examples() {
        for q in 0..20 {
            assert_eq!(witt_count(1, q), big(q));
        }
        for w in 2..30 {
            assert_eq!(witt_count(w, 1), big(0));
        }
        assert_eq!(witt_count(2, 2), big(1));
        assert_eq!(witt_count(3, 2), big(2));
        assert_eq!(witt_count(2, 3), big(3));
        assert_eq!(witt_count(6, 4), big(670));
    }

    #[test]
    fn witt_zero_letters() {
        for w in 1..10 {
            assert_eq!(witt_count(w, 0), big(0));
        }
    }

    #[test]
    fn witt_large_is_exact() {
        // W(61, 2) = (2^61 - 2) / 61 for prime weight
        let expected = (BigUint::from(2u32).pow(61) - 2u32) / 61u32;
        assert_eq!(witt_count(61, 2), expected);
        // grows past 128 bits without trouble
        assert!(witt_count(200, 5).bits() > 128);
    }

    #[test]
    fn b_sequence_examples() {
        assert_eq!(b_sequence(1, 4).counts(), &[big(0), big(1), big(3), big(6)]);
        assert_eq!(b_sequence(2, 2).counts(), &[big(0), big(2)]);
        for c in 1..8 {
            assert_eq!(b_sequence(c, 1).counts(), &[big(0)]);
        }
        let t = b_sequence(1, 4);
        assert_eq!(t.b(0), big(0));
        assert_eq!(t.increment(3), big(2));
    }

    #[test]
    fn schur_increments() {
        let t = b_sequence(1, 12);
        for i in 2..=12 {
            assert_eq!(t.increment(i), big(i as u64 - 1));
        }
    }

    proptest! {
        #[test]
        fn monotone_in_letters(w in 1u32..12, t in 0u64..20) {
            prop_assert!(witt_count(w, t) <= witt_count(w, t + 1));
        }

        #[test]
        fn b_sequence_nondecreasing(c in 1u32..8, k in 1usize..10) {
            let t = b_sequence(c, k);
            prop_assert_eq!(t.counts()[0].clone(), big(0));
            for w in t.counts().windows(2) {
                prop_assert!(w[0] <= w[1]);
            }
        }
    }

    #[test]
    fn necklace_identity_prime_weight() {
        // for prime p: p * W(p, q) = q^p - q
        for p in [2u32, 3, 5, 7, 11, 13] {
            for q in 1..6u64 {
                let lhs = witt_count(p, q) * p;
                let rhs = BigUint::from(q).pow(p) - q;
                assert_eq!(lhs, rhs);
            }
        }
    }
}
