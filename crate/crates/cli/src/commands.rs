use std::io::Write;

use clap::{Args, Parser, Subcommand};
use nilmult_core::abelian::invariant_chains;
use nilmult_core::{
    canonicalize, enumerate_basic, nilpotent_multiplier, tensor_oracle, verify, witt_count,
    Error as CoreError, DEFAULT_ENUM_CAP,
};
use thiserror::Error;

use crate::output::{Format, Method, OutputRecord};
use crate::spec::{GroupSpec, SpecError};

pub const CAP_ENV: &str = "NILMULT_ENUM_CAP";

#[derive(Debug, Parser)]
#[command(name = "nilmult", version, about = "Higher nilpotent Schur multipliers of finite abelian groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute N_c M(G) for a finite abelian group G.
    Compute(ComputeArgs),
    /// Count basic commutators of a weight on a number of letters.
    Witt {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        weight: u32,
        #[arg(long)]
        letters: u64,
    },
    /// List the basic commutators of a weight on a number of letters.
    Basis {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        weight: u32,
        #[arg(long)]
        letters: u32,
    },
    /// Check formula against oracle on every small invariant-factor chain.
    Sweep {
        #[arg(long)]
        max_order: u64,
        #[arg(long)]
        max_rank: usize,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_class: u32,
    },
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    /// e.g. "12,6,2", "Z12+Z6+Z2" or "Z2^3"
    #[arg(long, value_parser = parse_spec)]
    pub group: GroupSpec,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub class: u32,
    #[arg(long, value_enum, default_value = "formula")]
    pub method: Method,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

fn parse_spec(s: &str) -> Result<GroupSpec, SpecError> {
    s.parse()
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error("{CAP_ENV} must be a positive integer, got {0:?}")]
    BadCap(String),
    #[error("{0}")]
    Core(CoreError),
    #[error("{0}; the closed form (compute --method formula) has no size limit")]
    Cap(CoreError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::CapExceeded { .. } => CliError::Cap(e),
            other => CliError::Core(other),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Cap(_) => 3,
            _ => 1,
        }
    }
}

/// Successful runs either agree (exit 0) or found a formula/oracle mismatch
/// (exit 2).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Mismatch,
}

impl Status {
    pub fn exit_code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::Mismatch => 2,
        }
    }
}

/// Enumeration cap from the environment value, if set.
pub fn enum_cap(value: Option<&str>) -> Result<u64, CliError> {
    match value {
        None => Ok(DEFAULT_ENUM_CAP),
        Some(v) => match v.trim().parse::<u64>() {
            Ok(n) if n > 0 => Ok(n),
            _ => Err(CliError::BadCap(v.to_string())),
        },
    }
}

pub fn run(cli: &Cli, cap: u64, out: &mut dyn Write, err: &mut dyn Write) -> Result<Status, CliError> {
    match &cli.command {
        Command::Compute(args) => compute(args, cap, out, err),
        Command::Witt { weight, letters } => {
            writeln!(out, "{}", witt_count(*weight, *letters))?;
            Ok(Status::Ok)
        }
        Command::Basis { weight, letters } => {
            for c in enumerate_basic(*weight, *letters, cap)? {
                writeln!(out, "{c}")?;
            }
            Ok(Status::Ok)
        }
        Command::Sweep { max_order, max_rank, max_class } => {
            sweep(*max_order, *max_rank, *max_class, cap, out, err)
        }
    }
}

fn compute(args: &ComputeArgs, cap: u64, out: &mut dyn Write, err: &mut dyn Write) -> Result<Status, CliError> {
    let d = args.group.decomposition();
    let (result, verified) = match args.method {
        Method::Formula => (nilpotent_multiplier(&canonicalize(d), args.class), None),
        Method::Oracle => (tensor_oracle(d, args.class, cap)?, None),
        Method::Both => {
            let v = verify(d, args.class, cap)?;
            if !v.equal {
                writeln!(err, "formula: {}", v.formula)?;
                writeln!(err, "oracle:  {}", v.oracle)?;
            }
            (v.formula, Some(v.equal))
        }
    };
    let record = OutputRecord::new(d.orders(), &result, args.method, verified);
    match args.format {
        Format::Json => writeln!(out, "{}", record.to_json())?,
        Format::Text => write!(out, "{}", record.to_text())?,
    }
    Ok(if verified == Some(false) { Status::Mismatch } else { Status::Ok })
}

fn sweep(
    max_order: u64,
    max_rank: usize,
    max_class: u32,
    cap: u64,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<Status, CliError> {
    let mut passed = 0u64;
    let mut failed = 0u64;
    for chain in invariant_chains(max_order, max_rank) {
        let d = chain.to_decomposition().expect("sweep chains are bounded by max-order");
        for class in 1..=max_class {
            let v = verify(&d, class, cap)?;
            if v.equal {
                passed += 1;
            } else {
                failed += 1;
                writeln!(
                    err,
                    "mismatch: chain {:?}, class {class}: formula {} vs oracle {}",
                    d.orders(),
                    v.formula,
                    v.oracle
                )?;
            }
        }
    }
    writeln!(
        out,
        "sweep max-order {max_order}, max-rank {max_rank}, max-class {max_class}: {} cases, {passed} passed, {failed} failed",
        passed + failed
    )?;
    Ok(if failed == 0 { Status::Ok } else { Status::Mismatch })
}
