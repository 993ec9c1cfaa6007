use core::fmt;

use num_bigint::BigUint;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A cyclic order was 0 or above [`crate::MAX_ORDER`].
    OrderOutOfRange { order: u64 },
    /// Entries of an invariant-factor chain must be at least 2 and each must
    /// divide its predecessor.
    InvalidChain,
    /// The requested enumeration would produce more commutators than allowed.
    CapExceeded { required: BigUint, cap: u64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::OrderOutOfRange { order } => write!(
                f,
                "cyclic order {order} is out of range (expected 1..={})",
                crate::MAX_ORDER
            ),
            Error::InvalidChain => f.write_str("not an invariant-factor chain"),
            Error::CapExceeded { required, cap } => write!(
                f,
                "enumeration needs {required} basic commutators, above the cap of {cap}"
            ),
        }
    }
}

impl core::error::Error for Error {}
