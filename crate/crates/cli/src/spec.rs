//! Group specifications on the command line.
//!
//! Three spellings are accepted, whitespace anywhere is ignored:
//! a comma list `12,6,2`, a summand list `Z12+Z6+Z2`, and inside a summand
//! list the power shorthand `Z2^3` for three copies of `Z2`. Anything else,
//! including mixtures of commas and `Z` terms, is rejected.

use std::fmt;
use std::str::FromStr;

use nilmult_core::{CyclicDecomposition, MAX_ORDER};
use thiserror::Error;

/// Upper bound on the number of cyclic factors a spec may expand to.
pub const MAX_FACTORS: u64 = 1_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("empty group specification")]
    Empty,
    #[error("cannot mix comma lists and Z-summands in {0:?}")]
    Mixed(String),
    #[error("malformed term {0:?}")]
    BadTerm(String),
    #[error("cyclic order {0} is out of range 1..={max}", max = MAX_ORDER)]
    OrderOutOfRange(String),
    #[error("power exponent in {0:?} must be a positive integer")]
    BadPower(String),
    #[error("specification expands to more than {max} cyclic factors", max = MAX_FACTORS)]
    TooManyFactors,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    raw: String,
    parsed: CyclicDecomposition,
}

impl GroupSpec {
    pub fn raw(&self) -> &str {
        &self.raw
    }

    pub fn decomposition(&self) -> &CyclicDecomposition {
        &self.parsed
    }
}

/// Renders as a comma list, which parses back to the same decomposition.
impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let orders: Vec<String> = self.parsed.orders().iter().map(u64::to_string).collect();
        f.write_str(&orders.join(","))
    }
}

fn parse_number(digits: &str, term: &str) -> Result<u64, SpecError> {
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(SpecError::BadTerm(term.to_string()));
    }
    // more than 13 digits is certainly above MAX_ORDER (and may overflow u64)
    match digits.trim_start_matches('0').len() {
        n if n > 13 => Err(SpecError::OrderOutOfRange(digits.to_string())),
        _ => Ok(digits.parse().expect("at most 13 significant digits")),
    }
}

fn parse_order(digits: &str, term: &str) -> Result<u64, SpecError> {
    let n = parse_number(digits, term)?;
    if n == 0 || n > MAX_ORDER {
        return Err(SpecError::OrderOutOfRange(digits.to_string()));
    }
    Ok(n)
}

impl FromStr for GroupSpec {
    type Err = SpecError;

    fn from_str(raw: &str) -> Result<Self, Self::Err> {
        let text: String = raw.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(SpecError::Empty);
        }

        let mut orders: Vec<u64> = Vec::new();
        if text.contains('Z') {
            if text.contains(',') {
                return Err(SpecError::Mixed(raw.to_string()));
            }
            for term in text.split('+') {
                let body = term
                    .strip_prefix('Z')
                    .ok_or_else(|| SpecError::BadTerm(term.to_string()))?;
                let (order, copies) = match body.split_once('^') {
                    None => (parse_order(body, term)?, 1),
                    Some((base, power)) => {
                        let copies = parse_number(power, term)
                            .map_err(|_| SpecError::BadPower(term.to_string()))?;
                        if copies == 0 {
                            return Err(SpecError::BadPower(term.to_string()));
                        }
                        (parse_order(base, term)?, copies)
                    }
                };
                if orders.len() as u64 + copies > MAX_FACTORS {
                    return Err(SpecError::TooManyFactors);
                }
                orders.extend(std::iter::repeat_n(order, copies as usize));
            }
        } else {
            for term in text.split(',') {
                orders.push(parse_order(term, term)?);
                if orders.len() as u64 > MAX_FACTORS {
                    return Err(SpecError::TooManyFactors);
                }
            }
        }

        let parsed = CyclicDecomposition::new(orders).expect("orders validated above");
        Ok(GroupSpec { raw: raw.to_string(), parsed })
    }
}
