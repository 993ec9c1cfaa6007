//! Hall basic commutators on an ordered alphabet `x_1 < x_2 < ... < x_t`.
//!
//! Weight-1 basic commutators are the letters. A bracket `[u, v]` of weight
//! `n` is basic when `u` and `v` are basic, `u > v`, and, if `u = [u1, u2]`,
//! also `v >= u2`. Lower weight precedes higher weight. Within one weight
//! commutators are ordered lexicographically by their rendered token stream,
//! where `,` < `[` < `]` < letters and letters compare by index. With at most
//! nine letters this is plain byte order on the rendered string.

use alloc::boxed::Box;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigUint;

use crate::witt::witt_count;
use crate::Error;

/// Default limit on the number of commutators a single enumeration may return.
pub const DEFAULT_ENUM_CAP: u64 = 1_000_000;

/// A bracket expression over letters `x_i`, `i >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Bracket {
    Letter(u32),
    Pair(Box<Bracket>, Box<Bracket>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Token {
    Comma,
    Open,
    Close,
    Letter(u32),
}

impl Bracket {
    pub fn pair(left: Bracket, right: Bracket) -> Bracket {
        Bracket::Pair(Box::new(left), Box::new(right))
    }

    pub fn weight(&self) -> usize {
        match self {
            Bracket::Letter(_) => 1,
            Bracket::Pair(u, v) => u.weight() + v.weight(),
        }
    }

    pub fn max_letter(&self) -> u32 {
        match self {
            Bracket::Letter(i) => *i,
            Bracket::Pair(u, v) => u.max_letter().max(v.max_letter()),
        }
    }

    /// Occurrence count of each letter.
    pub fn letter_counts(&self) -> BTreeMap<u32, usize> {
        fn walk(b: &Bracket, counts: &mut BTreeMap<u32, usize>) {
            match b {
                Bracket::Letter(i) => *counts.entry(*i).or_default() += 1,
                Bracket::Pair(u, v) => {
                    walk(u, counts);
                    walk(v, counts);
                }
            }
        }
        let mut counts = BTreeMap::new();
        walk(self, &mut counts);
        counts
    }

    pub fn distinct_letters(&self) -> BTreeSet<u32> {
        self.letter_counts().into_keys().collect()
    }

    fn tokens(&self, out: &mut Vec<Token>) {
        match self {
            Bracket::Letter(i) => out.push(Token::Letter(*i)),
            Bracket::Pair(u, v) => {
                out.push(Token::Open);
                u.tokens(out);
                out.push(Token::Comma);
                v.tokens(out);
                out.push(Token::Close);
            }
        }
    }

    /// Position in the basic-commutator order: weight first, then tokens.
    pub fn hall_cmp(&self, other: &Bracket) -> Ordering {
        self.weight().cmp(&other.weight()).then_with(|| {
            let (mut a, mut b) = (Vec::new(), Vec::new());
            self.tokens(&mut a);
            other.tokens(&mut b);
            a.cmp(&b)
        })
    }

    /// Checks the Hall condition recursively at every node, straight from the
    /// definition. Used to validate enumeration output and parsed input.
    pub fn is_basic(&self) -> bool {
        match self {
            Bracket::Letter(i) => *i >= 1,
            Bracket::Pair(u, v) => {
                if !u.is_basic() || !v.is_basic() || u.hall_cmp(v) != Ordering::Greater {
                    return false;
                }
                match &**u {
                    Bracket::Letter(_) => true,
                    Bracket::Pair(_, u2) => v.hall_cmp(u2) != Ordering::Less,
                }
            }
        }
    }
}

impl fmt::Display for Bracket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bracket::Letter(i) => write!(f, "x{i}"),
            Bracket::Pair(u, v) => write!(f, "[{u},{v}]"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseBracketError {
    pub position: usize,
}

impl fmt::Display for ParseBracketError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "malformed commutator at byte {}", self.position)
    }
}

impl core::error::Error for ParseBracketError {}

impl FromStr for Bracket {
    type Err = ParseBracketError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        struct Parser<'a> {
            bytes: &'a [u8],
            pos: usize,
        }

        impl Parser<'_> {
            fn err(&self) -> ParseBracketError {
                ParseBracketError { position: self.pos }
            }

            fn skip_ws(&mut self) {
                while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
                    self.pos += 1;
                }
            }

            fn expect(&mut self, b: u8) -> Result<(), ParseBracketError> {
                self.skip_ws();
                if self.bytes.get(self.pos) == Some(&b) {
                    self.pos += 1;
                    Ok(())
                } else {
                    Err(self.err())
                }
            }

            fn term(&mut self) -> Result<Bracket, ParseBracketError> {
                self.skip_ws();
                match self.bytes.get(self.pos) {
                    Some(b'x') => {
                        self.pos += 1;
                        let start = self.pos;
                        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                            self.pos += 1;
                        }
                        let digits = core::str::from_utf8(&self.bytes[start..self.pos])
                            .map_err(|_| self.err())?;
                        match digits.parse::<u32>() {
                            Ok(i) if i >= 1 && !digits.starts_with('0') => Ok(Bracket::Letter(i)),
                            _ => Err(ParseBracketError { position: start }),
                        }
                    }
                    Some(b'[') => {
                        self.pos += 1;
                        let u = self.term()?;
                        self.expect(b',')?;
                        let v = self.term()?;
                        self.expect(b']')?;
                        Ok(Bracket::pair(u, v))
                    }
                    _ => Err(self.err()),
                }
            }
        }

        let mut p = Parser { bytes: s.as_bytes(), pos: 0 };
        let b = p.term()?;
        p.skip_ws();
        if p.pos != s.len() {
            return Err(p.err());
        }
        Ok(b)
    }
}

/// A basic commutator together with its weight and letter multiset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasicCommutator {
    tree: Bracket,
    weight: usize,
    letters: BTreeMap<u32, usize>,
}

impl BasicCommutator {
    /// Wraps a bracket after checking the Hall condition.
    pub fn new(tree: Bracket) -> Option<Self> {
        tree.is_basic().then(|| Self::from_tree(tree))
    }

    fn from_tree(tree: Bracket) -> Self {
        let letters = tree.letter_counts();
        let weight = letters.values().sum();
        BasicCommutator { tree, weight, letters }
    }

    pub fn tree(&self) -> &Bracket {
        &self.tree
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    pub fn letter_counts(&self) -> &BTreeMap<u32, usize> {
        &self.letters
    }

    pub fn max_letter(&self) -> u32 {
        *self.letters.keys().next_back().expect("commutators have at least one letter")
    }

    pub fn distinct_letters(&self) -> BTreeSet<u32> {
        self.letters.keys().copied().collect()
    }

    pub fn render(&self) -> String {
        alloc::format!("{}", self.tree)
    }
}

impl fmt::Display for BasicCommutator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.tree.fmt(f)
    }
}

pub fn max_letter(b: &BasicCommutator) -> u32 {
    b.max_letter()
}

pub fn distinct_letters(b: &BasicCommutator) -> BTreeSet<u32> {
    b.distinct_letters()
}

pub fn render(b: &BasicCommutator) -> String {
    b.render()
}

#[derive(Clone, Copy)]
enum Shape {
    Letter(u32),
    Pair(usize, usize),
}

/// All basic commutators of weights `1..=max_weight`, appended weight by
/// weight so that an index comparison is the Hall order.
struct Arena {
    nodes: Vec<Shape>,
    // start index of each weight block; blocks[w - 1]..blocks[w]
    blocks: Vec<usize>,
}

impl Arena {
    fn block(&self, weight: usize) -> core::ops::Range<usize> {
        self.blocks[weight - 1]..self.blocks[weight]
    }

    fn tokens(&self, root: usize) -> TokenIter<'_> {
        TokenIter { arena: self, stack: alloc::vec![Pending::Node(root)] }
    }

    fn token_cmp(&self, a: usize, b: usize) -> Ordering {
        self.tokens(a).cmp(self.tokens(b))
    }

    fn build(letters: u32, max_weight: usize) -> Arena {
        let nodes: Vec<Shape> = (1..=letters).map(Shape::Letter).collect();
        let blocks = alloc::vec![0, nodes.len()];
        let mut arena = Arena { nodes, blocks };

        for n in 2..=max_weight {
            let mut fresh: Vec<Shape> = Vec::new();
            for left_weight in (1..n).rev() {
                let right_weight = n - left_weight;
                if left_weight < right_weight {
                    // u > v needs weight(u) >= weight(v)
                    break;
                }
                let right = arena.block(right_weight);
                for u in arena.block(left_weight) {
                    let lower = match arena.nodes[u] {
                        Shape::Letter(_) => right.start,
                        Shape::Pair(_, u2) => right.start.max(u2),
                    };
                    let upper = right.end.min(u);
                    for v in lower..upper {
                        fresh.push(Shape::Pair(u, v));
                    }
                }
            }
            fresh.sort_by(|a, b| {
                let (ta, tb) = (PairTokens::new(&arena, *a), PairTokens::new(&arena, *b));
                ta.cmp(tb)
            });
            arena.nodes.extend(fresh);
            arena.blocks.push(arena.nodes.len());
        }
        arena
    }

    fn to_bracket(&self, idx: usize) -> Bracket {
        match self.nodes[idx] {
            Shape::Letter(i) => Bracket::Letter(i),
            Shape::Pair(u, v) => Bracket::pair(self.to_bracket(u), self.to_bracket(v)),
        }
    }
}

enum Pending {
    Node(usize),
    Emit(Token),
}

struct TokenIter<'a> {
    arena: &'a Arena,
    stack: Vec<Pending>,
}

impl Iterator for TokenIter<'_> {
    type Item = Token;

    fn next(&mut self) -> Option<Token> {
        match self.stack.pop()? {
            Pending::Emit(t) => Some(t),
            Pending::Node(idx) => match self.arena.nodes[idx] {
                Shape::Letter(i) => Some(Token::Letter(i)),
                Shape::Pair(u, v) => {
                    self.stack.push(Pending::Emit(Token::Close));
                    self.stack.push(Pending::Node(v));
                    self.stack.push(Pending::Emit(Token::Comma));
                    self.stack.push(Pending::Node(u));
                    Some(Token::Open)
                }
            },
        }
    }
}

/// Token order of a not-yet-inserted pair `[u, v]`. Token streams of
/// complete brackets are prefix-free, so the order is that of `u`, then `v`.
struct PairTokens<'a> {
    arena: &'a Arena,
    u: usize,
    v: usize,
}

impl<'a> PairTokens<'a> {
    fn new(arena: &'a Arena, shape: Shape) -> Self {
        match shape {
            Shape::Pair(u, v) => PairTokens { arena, u, v },
            Shape::Letter(_) => unreachable!("fresh nodes are pairs"),
        }
    }

    fn cmp(self, other: PairTokens<'_>) -> Ordering {
        self.arena
            .token_cmp(self.u, other.u)
            .then_with(|| self.arena.token_cmp(self.v, other.v))
    }
}

/// Every basic commutator of exactly `weight` on `letters` letters, each once,
/// in the fixed order described in the module docs.
///
/// Fails with [`Error::CapExceeded`] when the Witt count exceeds `cap`.
pub fn enumerate_basic(weight: u32, letters: u32, cap: u64) -> Result<Vec<BasicCommutator>, Error> {
    assert!(weight >= 1, "weight must be at least 1");
    let required = witt_count(weight, u64::from(letters));
    if required > BigUint::from(cap) {
        return Err(Error::CapExceeded { required, cap });
    }
    if weight >= 2 && letters < 2 {
        return Ok(Vec::new());
    }
    let arena = Arena::build(letters, weight as usize);
    let out: Vec<BasicCommutator> = arena
        .block(weight as usize)
        .map(|idx| BasicCommutator::from_tree(arena.to_bracket(idx)))
        .collect();
    debug_assert_eq!(BigUint::from(out.len()), required);
    Ok(out)
}
