//! Finite abelian groups as multisets of cyclic orders, and their
//! canonical invariant-factor chains.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::factorize;
use crate::Error;

/// Largest accepted cyclic order. Trial division up to `10^6` factors anything
/// at or below it.
pub const MAX_ORDER: u64 = 1_000_000_000_000;

/// A direct sum `Z_{r_1} + ... + Z_{r_t}` as given, in any order and possibly
/// with trivial factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct CyclicDecomposition {
    orders: Vec<u64>,
}

impl CyclicDecomposition {
    pub fn new(orders: Vec<u64>) -> Result<Self, Error> {
        if let Some(&order) = orders.iter().find(|&&o| o == 0 || o > MAX_ORDER) {
            return Err(Error::OrderOutOfRange { order });
        }
        Ok(CyclicDecomposition { orders })
    }

    pub fn trivial() -> Self {
        CyclicDecomposition::default()
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    /// Number of cyclic factors `t`, counting trivial ones.
    pub fn len(&self) -> usize {
        self.orders.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orders.is_empty()
    }

    pub fn direct_sum(&self, other: &CyclicDecomposition) -> CyclicDecomposition {
        let mut orders = self.orders.clone();
        orders.extend_from_slice(&other.orders);
        CyclicDecomposition { orders }
    }

    pub fn is_isomorphic(&self, other: &CyclicDecomposition) -> bool {
        canonicalize(self) == canonicalize(other)
    }
}

/// Concatenation of two decompositions.
pub fn direct_sum(a: &CyclicDecomposition, b: &CyclicDecomposition) -> CyclicDecomposition {
    a.direct_sum(b)
}

pub fn groups_isomorphic(a: &CyclicDecomposition, b: &CyclicDecomposition) -> bool {
    a.is_isomorphic(b)
}

/// The invariant-factor chain `n_1, n_2, ..., n_k` with `n_{i+1} | n_i` and
/// every `n_i >= 2`. The trivial group is the empty chain.
///
/// Entries are arbitrary precision: `n_1` is the exponent of the group and
/// can exceed 64 bits even when every input order is bounded.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct InvariantFactors {
    chain: Vec<BigUint>,
}

impl InvariantFactors {
    /// Validates an explicit chain. Fails with [`Error::InvalidChain`] if an
    /// entry is below 2 or the divisibility condition breaks.
    pub fn new<I, N>(chain: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = N>,
        N: Into<BigUint>,
    {
        let chain: Vec<BigUint> = chain.into_iter().map(Into::into).collect();
        let two = BigUint::from(2u32);
        let entries_ok = chain.iter().all(|n| *n >= two);
        let divides = chain.windows(2).all(|w| (&w[0] % &w[1]).is_zero());
        if entries_ok && divides {
            Ok(InvariantFactors { chain })
        } else {
            Err(Error::InvalidChain)
        }
    }

    pub fn chain(&self) -> &[BigUint] {
        &self.chain
    }

    /// Rank `k`, the number of nontrivial invariant factors.
    pub fn rank(&self) -> usize {
        self.chain.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.chain.is_empty()
    }

    /// `n_1 * n_2 * ... * n_k`; 1 for the trivial group.
    pub fn group_order(&self) -> BigUint {
        self.chain.iter().product()
    }

    /// The chain read back as a decomposition, when every entry fits the
    /// input bound.
    pub fn to_decomposition(&self) -> Option<CyclicDecomposition> {
        let orders = self
            .chain
            .iter()
            .map(|n| u64::try_from(n).ok().filter(|&o| o <= MAX_ORDER))
            .collect::<Option<Vec<_>>>()?;
        Some(CyclicDecomposition { orders })
    }
}

pub fn group_order(f: &InvariantFactors) -> BigUint {
    f.group_order()
}

/// Canonical invariant factors by the pairwise gcd/lcm fixpoint.
///
/// Any pair `(a, b)` at positions `i < j` with `b` not dividing `a` is
/// replaced by `(lcm, gcd)`; this preserves the group up to isomorphism. The
/// loop stops once no pair violates divisibility. No factorization is needed.
pub fn canonicalize(d: &CyclicDecomposition) -> InvariantFactors {
    let mut chain: Vec<BigUint> = d
        .orders
        .iter()
        .filter(|&&o| o > 1)
        .map(|&o| BigUint::from(o))
        .collect();
    chain.sort_unstable_by(|a, b| b.cmp(a));

    loop {
        let mut changed = false;
        for i in 0..chain.len() {
            for j in i + 1..chain.len() {
                if !(&chain[i] % &chain[j]).is_zero() {
                    let g = chain[i].gcd(&chain[j]);
                    let l = chain[i].lcm(&chain[j]);
                    chain[i] = l;
                    chain[j] = g;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }

    chain.retain(|n| !n.is_one());
    InvariantFactors { chain }
}

/// Canonical invariant factors via primary decomposition.
///
/// Each order is factored; per prime the exponents are sorted in decreasing
/// order and the `j`-th invariant factor collects the `j`-th exponent of every
/// prime. Independent of [`canonicalize`], which it cross-checks.
pub fn canonicalize_primary(d: &CyclicDecomposition) -> InvariantFactors {
    let mut exponents: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
    for &o in &d.orders {
        for (p, e) in factorize(o) {
            exponents.entry(p).or_default().push(e);
        }
    }
    let rank = exponents.values().map(Vec::len).max().unwrap_or(0);
    let mut chain = alloc::vec![BigUint::one(); rank];
    for (p, mut es) in exponents {
        es.sort_unstable_by(|a, b| b.cmp(a));
        for (slot, e) in chain.iter_mut().zip(es) {
            *slot *= BigUint::from(p).pow(e);
        }
    }
    InvariantFactors { chain }
}

/// Canonicalizes a multiset given in run-length form `(order, multiplicity)`
/// without expanding the multiplicities.
///
/// Returns the invariant-factor chain in run-length form: orders strictly
/// decreasing, each dividing its predecessor, multiplicities positive. Orders
/// of 1 and zero multiplicities are ignored.
pub fn canonicalize_runs(runs: &[(u64, BigUint)]) -> Vec<(BigUint, BigUint)> {
    // prime -> exponent -> total multiplicity
    let mut by_prime: BTreeMap<u64, BTreeMap<u32, BigUint>> = BTreeMap::new();
    for (order, mult) in runs {
        if mult.is_zero() {
            continue;
        }
        for (p, e) in factorize(*order) {
            *by_prime.entry(p).or_default().entry(e).or_default() += mult;
        }
    }

    // Per prime: exponent runs in decreasing exponent order, as
    // (end position, exponent) with end positions cumulative.
    let mut profiles: Vec<(u64, Vec<(BigUint, u32)>)> = Vec::new();
    let mut breakpoints: Vec<BigUint> = Vec::new();
    for (p, runs) in by_prime {
        let mut end = BigUint::zero();
        let mut profile = Vec::new();
        for (e, count) in runs.into_iter().rev() {
            end += count;
            breakpoints.push(end.clone());
            profile.push((end.clone(), e));
        }
        profiles.push((p, profile));
    }
    breakpoints.sort();
    breakpoints.dedup();

    let mut out: Vec<(BigUint, BigUint)> = Vec::new();
    let mut start = BigUint::zero();
    for end in breakpoints {
        // exponent of each prime on the segment [start, end)
        let mut order = BigUint::one();
        for (p, profile) in &profiles {
            if let Some((_, e)) = profile.iter().find(|(stop, _)| *stop > start) {
                order *= BigUint::from(*p).pow(*e);
            }
        }
        let len = &end - &start;
        match out.last_mut() {
            Some((last, m)) if *last == order => *m += len,
            _ => out.push((order, len)),
        }
        start = end;
    }
    out
}

/// Every invariant-factor chain with entries in `2..=max_order` and length at
/// most `max_rank`, including the empty chain. Deterministic order.
pub fn invariant_chains(max_order: u64, max_rank: usize) -> Vec<InvariantFactors> {
    fn extend(prefix: &mut Vec<u64>, max_rank: usize, out: &mut Vec<InvariantFactors>) {
        out.push(InvariantFactors {
            chain: prefix.iter().map(|&n| BigUint::from(n)).collect(),
        });
        if prefix.len() == max_rank {
            return;
        }
        let last = *prefix.last().expect("prefix is non-empty");
        for next in (2..=last).rev().filter(|n| last.is_multiple_of(*n)) {
            prefix.push(next);
            extend(prefix, max_rank, out);
            prefix.pop();
        }
    }

    let mut out = alloc::vec![InvariantFactors::default()];
    if max_rank == 0 {
        return out;
    }
    let mut prefix = Vec::new();
    for first in (2..=max_order).rev() {
        prefix.push(first);
        extend(&mut prefix, max_rank, &mut out);
        prefix.pop();
    }
    out
}
