//! The higher Schur multiplier `N_c M(G)` by two independent routes.
//!
//! [`nilpotent_multiplier`] is the closed form over the invariant-factor
//! chain: `Z_{n_2}^(b_2) + Z_{n_3}^(b_3 - b_2) + ... + Z_{n_k}^(b_k - b_{k-1})`
//! with `b_i` the Witt counts of weight `c + 1` on `i` letters.
//!
//! [`tensor_oracle`] enumerates the basic commutators of weight `c + 1` on the
//! `t` given cyclic factors and sends each one to the tensor product of the
//! cyclic groups of its letters, which is cyclic of order the gcd of those
//! orders. The multiset of resulting cyclic groups is then canonicalized.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::abelian::{canonicalize, canonicalize_runs, CyclicDecomposition, InvariantFactors};
use crate::arith::gcd;
use crate::hall::enumerate_basic;
use crate::witt::b_sequence;
use crate::Error;

/// `multiplicity` copies of `Z_order`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Summand {
    pub order: BigUint,
    pub multiplicity: BigUint,
}

/// A finite abelian group in compressed invariant-factor form: orders
/// strictly decreasing, each dividing the one before, no order below 2 and no
/// zero multiplicity. An empty list is the trivial group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiplierResult {
    pub summands: Vec<Summand>,
    pub class: u32,
    pub source: InvariantFactors,
}

impl MultiplierResult {
    pub fn is_trivial(&self) -> bool {
        self.summands.is_empty()
    }

    /// Total number of cyclic summands, i.e. the rank of the multiplier.
    pub fn total_multiplicity(&self) -> BigUint {
        self.summands.iter().map(|s| &s.multiplicity).sum()
    }

    /// Same group, ignoring class and source.
    pub fn same_group(&self, other: &MultiplierResult) -> bool {
        self.summands == other.summands
    }
}

/// `Z6 (+) Z2^(2)`; the trivial group renders as `0`.
impl fmt::Display for MultiplierResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.summands.is_empty() {
            return f.write_str("0");
        }
        for (i, s) in self.summands.iter().enumerate() {
            if i > 0 {
                f.write_str(" (+) ")?;
            }
            if s.multiplicity.is_one() {
                write!(f, "Z{}", s.order)?;
            } else {
                write!(f, "Z{}^({})", s.order, s.multiplicity)?;
            }
        }
        Ok(())
    }
}

/// Closed-form multiplier of the group with invariant factors `g`.
pub fn nilpotent_multiplier(g: &InvariantFactors, class: u32) -> MultiplierResult {
    let chain = g.chain();
    let witt = b_sequence(class, chain.len());
    let mut summands: Vec<Summand> = Vec::new();
    for (i, order) in chain.iter().enumerate().skip(1) {
        let multiplicity = witt.increment(i + 1);
        if multiplicity.is_zero() {
            continue;
        }
        match summands.last_mut() {
            Some(last) if last.order == *order => last.multiplicity += multiplicity,
            _ => summands.push(Summand { order: order.clone(), multiplicity }),
        }
    }
    MultiplierResult { summands, class, source: g.clone() }
}

/// Multiplier of `Z_{r_1} + ... + Z_{r_t}` through the basic commutators of
/// weight `class + 1` on `t` letters. Accepts any decomposition.
///
/// Fails with [`Error::CapExceeded`] when the enumeration is larger than
/// `cap`; [`nilpotent_multiplier`] has no such limit.
pub fn tensor_oracle(d: &CyclicDecomposition, class: u32, cap: u64) -> Result<MultiplierResult, Error> {
    assert!(class >= 1, "nilpotency class must be at least 1");
    let orders = d.orders();
    let letters = u32::try_from(orders.len()).expect("fewer than 2^32 cyclic factors");
    let basis = enumerate_basic(class + 1, letters, cap)?;

    let mut tally: BTreeMap<u64, BigUint> = BTreeMap::new();
    for commutator in &basis {
        let g = commutator
            .distinct_letters()
            .into_iter()
            .map(|i| orders[i as usize - 1])
            .fold(0, gcd);
        if g > 1 {
            *tally.entry(g).or_default() += 1u32;
        }
    }

    let runs: Vec<(u64, BigUint)> = tally.into_iter().collect();
    let summands = canonicalize_runs(&runs)
        .into_iter()
        .map(|(order, multiplicity)| Summand { order, multiplicity })
        .collect();
    Ok(MultiplierResult { summands, class, source: canonicalize(d) })
}

/// Order of a multiplier: always as a factored product, and as an exact
/// integer when it has at most [`MultiplierOrder::MAX_DECIMAL_DIGITS`] digits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplierOrder {
    pub decimal: Option<BigUint>,
    pub factored: String,
}

impl MultiplierOrder {
    pub const MAX_DECIMAL_DIGITS: usize = 10_000;
}

pub fn multiplier_order(m: &MultiplierResult) -> MultiplierOrder {
    let factored = m
        .summands
        .iter()
        .map(|s| alloc::format!("{}^{}", s.order, s.multiplicity))
        .collect::<Vec<_>>()
        .join(" \u{b7} ");

    // 10^4 decimal digits is under 33220 bits; skip anything whose bit
    // length is certainly above that.
    let lower_bits: BigUint = m
        .summands
        .iter()
        .map(|s| &s.multiplicity * (s.order.bits() - 1))
        .sum();
    let decimal = if lower_bits > BigUint::from(33_300u32) {
        None
    } else {
        let value: BigUint = m
            .summands
            .iter()
            .map(|s| {
                let e = s.multiplicity.to_u32().expect("bounded by the bit estimate");
                s.order.pow(e)
            })
            .product();
        (value.to_string().len() <= MultiplierOrder::MAX_DECIMAL_DIGITS).then_some(value)
    };
    MultiplierOrder { decimal, factored }
}

/// Outcome of running both routes on one group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verification {
    pub formula: MultiplierResult,
    pub oracle: MultiplierResult,
    pub equal: bool,
}

/// Runs the closed form on `canonicalize(d)` and the oracle on `d` as given.
pub fn verify(d: &CyclicDecomposition, class: u32, cap: u64) -> Result<Verification, Error> {
    let oracle = tensor_oracle(d, class, cap)?;
    let formula = nilpotent_multiplier(&canonicalize(d), class);
    let equal = formula == oracle;
    Ok(Verification { formula, oracle, equal })
}
