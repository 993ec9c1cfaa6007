//! Output records for `compute`, in JSON and plain text.

use std::fmt::Write as _;

use nilmult_core::{multiplier_order, BigUint, MultiplierResult};
use serde::Serialize;
use serde_json::Number;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    Formula,
    Oracle,
    Both,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Formula => "formula",
            Method::Oracle => "oracle",
            Method::Both => "both",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SummandRecord {
    pub order: Number,
    /// Decimal string; multiplicities outgrow every fixed-width integer.
    pub multiplicity: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OutputRecord {
    pub schema_version: &'static str,
    pub input: Vec<u64>,
    pub canonical: Vec<Number>,
    pub class: u32,
    pub method: &'static str,
    pub summands: Vec<SummandRecord>,
    pub order_factored: String,
    pub order_decimal: Option<String>,
    pub verified: Option<bool>,
}

fn number(n: &BigUint) -> Number {
    n.to_string().parse().expect("decimal digits form a JSON number")
}

impl OutputRecord {
    pub fn new(input: &[u64], result: &MultiplierResult, method: Method, verified: Option<bool>) -> Self {
        let order = multiplier_order(result);
        OutputRecord {
            schema_version: SCHEMA_VERSION,
            input: input.to_vec(),
            canonical: result.source.chain().iter().map(number).collect(),
            class: result.class,
            method: method.as_str(),
            summands: result
                .summands
                .iter()
                .map(|s| SummandRecord { order: number(&s.order), multiplicity: s.multiplicity.to_string() })
                .collect(),
            order_factored: order.factored,
            order_decimal: order.decimal.map(|d| d.to_string()),
            verified,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }

    /// Multiplier in `Z6 (+) Z2^(2)` notation; `0` for the trivial group.
    pub fn multiplier_text(&self) -> String {
        if self.summands.is_empty() {
            return "0".to_string();
        }
        self.summands
            .iter()
            .map(|s| {
                if s.multiplicity == "1" {
                    format!("Z{}", s.order)
                } else {
                    format!("Z{}^({})", s.order, s.multiplicity)
                }
            })
            .collect::<Vec<_>>()
            .join(" (+) ")
    }

    pub fn to_text(&self) -> String {
        let group = |orders: Vec<String>| {
            if orders.is_empty() {
                "0".to_string()
            } else {
                orders.iter().map(|o| format!("Z{o}")).collect::<Vec<_>>().join(" (+) ")
            }
        };
        let mut out = String::new();
        let input = group(self.input.iter().map(u64::to_string).collect());
        let canonical = group(self.canonical.iter().map(Number::to_string).collect());
        writeln!(out, "group:      {input}").unwrap();
        writeln!(out, "canonical:  {canonical}").unwrap();
        writeln!(out, "class:      {}", self.class).unwrap();
        writeln!(out, "method:     {}", self.method).unwrap();
        let trivial = if self.summands.is_empty() { " (trivial)" } else { "" };
        writeln!(out, "multiplier: {}{trivial}", self.multiplier_text()).unwrap();
        match (&self.order_decimal, self.order_factored.is_empty()) {
            (Some(d), true) => writeln!(out, "order:      {d}"),
            (Some(d), false) => writeln!(out, "order:      {d} = {}", self.order_factored),
            (None, _) => writeln!(out, "order:      {}", self.order_factored),
        }
        .unwrap();
        if let Some(v) = self.verified {
            writeln!(out, "verified:   {}", if v { "equal" } else { "MISMATCH" }).unwrap();
        }
        out
    }
}
