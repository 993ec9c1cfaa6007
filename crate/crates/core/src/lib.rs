//! Higher Schur multipliers `N_c M(G)` of finite abelian groups.
//!
//! Two independent routes are provided: a closed form over the invariant
//! factor chain driven by Witt counts ([`multiplier::nilpotent_multiplier`]),
//! and a tensor oracle that enumerates Hall basic commutators and evaluates
//! the tensor product attached to each one ([`multiplier::tensor_oracle`]).
//! [`multiplier::verify`] runs both and compares canonical forms.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod abelian;
pub mod arith;
mod error;
pub mod hall;
pub mod multiplier;
pub mod witt;

pub use abelian::{canonicalize, CyclicDecomposition, InvariantFactors, MAX_ORDER};
pub use error::Error;
pub use hall::{enumerate_basic, BasicCommutator, Bracket, DEFAULT_ENUM_CAP};
pub use multiplier::{
    multiplier_order, nilpotent_multiplier, tensor_oracle, verify, MultiplierOrder,
    MultiplierResult, Summand, Verification,
};
pub use witt::{b_sequence, moebius, witt_count, WittTable};

pub use num_bigint::BigUint;
