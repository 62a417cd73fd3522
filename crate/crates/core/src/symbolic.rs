//! Symbols, kneading words and itineraries of a unimodal map.
//!
//! A point left of the turning point `c` is coded `L` (+1), the turning
//! point itself `C` (0) and a point to the right `R` (-1). Itineraries are
//! compared with the signed order: at the first disagreement the spatial
//! order `L < C < R` is used, reversed whenever an odd number of `R`s has
//! been read, because the map reverses orientation right of `c`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symbol {
    /// Right of the turning point, value -1.
    R,
    /// The turning point, value 0.
    C,
    /// Left of the turning point, value +1.
    L,
}

impl Symbol {
    pub const fn value(self) -> i8 {
        match self {
            Symbol::R => -1,
            Symbol::C => 0,
            Symbol::L => 1,
        }
    }

    pub fn from_value(value: i8) -> Option<Symbol> {
        match value {
            -1 => Some(Symbol::R),
            0 => Some(Symbol::C),
            1 => Some(Symbol::L),
            _ => None,
        }
    }

    pub fn from_letter(letter: char) -> Option<Symbol> {
        match letter {
            'R' => Some(Symbol::R),
            'C' => Some(Symbol::C),
            'L' => Some(Symbol::L),
            _ => None,
        }
    }

    pub const fn letter(self) -> char {
        match self {
            Symbol::R => 'R',
            Symbol::C => 'C',
            Symbol::L => 'L',
        }
    }

    /// Numeric notation: `-1`, `0` or `+1`.
    pub const fn numeric(self) -> &'static str {
        match self {
            Symbol::R => "-1",
            Symbol::C => "0",
            Symbol::L => "+1",
        }
    }

    fn parse_numeric(token: &str) -> Option<Symbol> {
        match token {
            "-1" => Some(Symbol::R),
            "0" | "+0" | "-0" => Some(Symbol::C),
            "+1" | "1" => Some(Symbol::L),
            _ => None,
        }
    }

    /// Position on the interval: L < C < R.
    fn spatial_rank(self) -> u8 {
        match self {
            Symbol::L => 0,
            Symbol::C => 1,
            Symbol::R => 2,
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A finite word `w = ε₁…εₙ` whose last symbol, and only its last symbol,
/// is `C`. It stands for the periodic kneading sequence `(w)^∞` of a map
/// whose turning point is periodic with period `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KneadingWord {
    symbols: Vec<Symbol>,
}

impl KneadingWord {
    pub fn new(symbols: Vec<Symbol>) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::EmptyWord);
        }
        let last = symbols.len() - 1;
        if let Some(position) = symbols[..last].iter().position(|&s| s == Symbol::C) {
            return Err(Error::EarlyTurningPoint { position });
        }
        if symbols[last] != Symbol::C {
            return Err(Error::MissingTurningPoint);
        }
        Ok(KneadingWord { symbols })
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    /// The period `n`.
    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `ε_i` with 1-based `i`, the convention used for orbit points.
    pub fn epsilon(&self, i: usize) -> Symbol {
        self.symbols[i - 1]
    }

    /// The periodic sequence `(w)^∞`.
    pub fn sequence(&self) -> SymbolSeq {
        SymbolSeq::periodic(self.symbols.clone())
    }

    pub fn to_numeric(&self) -> String {
        let tokens: Vec<&str> = self.symbols.iter().map(|s| s.numeric()).collect();
        tokens.join(",")
    }
}

impl fmt::Display for KneadingWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.symbols {
            write!(f, "{}", s.letter())?;
        }
        Ok(())
    }
}

impl std::str::FromStr for KneadingWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_word(s)
    }
}

/// Reads a word in letter notation (`RLLRRC`) or in comma separated
/// numeric notation (`-1,+1,+1,-1,-1,0`).
pub fn parse_word(text: &str) -> Result<KneadingWord> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::EmptyWord);
    }
    let numeric = text.contains(|c: char| c == ',' || c == '+' || c == '-' || c.is_ascii_digit());
    let symbols = if numeric {
        text.split(',')
            .enumerate()
            .map(|(position, token)| {
                let token = token.trim();
                Symbol::parse_numeric(token).ok_or_else(|| Error::UnknownSymbol {
                    position,
                    found: token.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?
    } else {
        text.chars()
            .enumerate()
            .map(|(position, ch)| {
                Symbol::from_letter(ch).ok_or_else(|| Error::UnknownSymbol {
                    position,
                    found: ch.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?
    };
    KneadingWord::new(symbols)
}

/// An eventually periodic symbol sequence `preperiod · (period)^∞`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymbolSeq {
    preperiod: Vec<Symbol>,
    period: Vec<Symbol>,
}

impl SymbolSeq {
    /// Panics if `period` is empty.
    pub fn new(preperiod: Vec<Symbol>, period: Vec<Symbol>) -> Self {
        assert!(!period.is_empty(), "symbol sequence needs a nonempty period");
        SymbolSeq { preperiod, period }
    }

    pub fn periodic(period: Vec<Symbol>) -> Self {
        SymbolSeq::new(Vec::new(), period)
    }

    pub fn preperiod(&self) -> &[Symbol] {
        &self.preperiod
    }

    pub fn period(&self) -> &[Symbol] {
        &self.period
    }

    pub fn at(&self, k: usize) -> Symbol {
        if k < self.preperiod.len() {
            self.preperiod[k]
        } else {
            self.period[(k - self.preperiod.len()) % self.period.len()]
        }
    }

    /// The first `depth` symbols.
    pub fn prefix(&self, depth: usize) -> Vec<Symbol> {
        (0..depth).map(|k| self.at(k)).collect()
    }

    /// `σ^i`: drops the first `i` symbols.
    pub fn shift(&self, i: usize) -> SymbolSeq {
        let pre = self.preperiod.len();
        if i < pre {
            SymbolSeq::new(self.preperiod[i..].to_vec(), self.period.clone())
        } else {
            let mut period = self.period.clone();
            period.rotate_left((i - pre) % self.period.len());
            SymbolSeq::periodic(period)
        }
    }
}

impl fmt::Display for SymbolSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.preperiod {
            write!(f, "{s}")?;
        }
        write!(f, "(")?;
        for s in &self.period {
            write!(f, "{s}")?;
        }
        write!(f, ")^inf")
    }
}

pub fn shift(seq: &SymbolSeq, i: usize) -> SymbolSeq {
    seq.shift(i)
}

/// Cumulative products `θ_k = ε_0 ε_1 … ε_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaPrefix(Vec<i8>);

impl ThetaPrefix {
    pub fn entries(&self) -> &[i8] {
        &self.0
    }
}

pub fn invariant_coordinate(seq: &SymbolSeq, depth: usize) -> ThetaPrefix {
    let mut product = 1i8;
    let entries = (0..depth)
        .map(|k| {
            product *= seq.at(k).value();
            product
        })
        .collect();
    ThetaPrefix(entries)
}

/// Signed order on two symbol streams, looking at most `depth` symbols ahead.
///
/// If both streams pass through `C` at the same index before disagreeing,
/// they code the same point and compare equal.
pub fn signed_order<A, B>(a: A, b: B, depth: usize) -> Ordering
where
    A: IntoIterator<Item = Symbol>,
    B: IntoIterator<Item = Symbol>,
{
    let mut sign = 1i8;
    for (x, y) in a.into_iter().zip(b).take(depth) {
        if x != y {
            let spatial = x.spatial_rank().cmp(&y.spatial_rank());
            return if sign > 0 { spatial } else { spatial.reverse() };
        }
        sign *= x.value();
        if sign == 0 {
            return Ordering::Equal;
        }
    }
    Ordering::Equal
}

/// Milnor-Thurston comparison of two itineraries.
pub fn mt_compare(a: &SymbolSeq, b: &SymbolSeq, depth: usize) -> Ordering {
    signed_order((0..).map(|k| a.at(k)), (0..).map(|k| b.at(k)), depth)
}

/// Comparison of two finite itinerary prefixes, up to the shorter length.
pub fn mt_compare_prefix(a: &[Symbol], b: &[Symbol]) -> Ordering {
    signed_order(a.iter().copied(), b.iter().copied(), a.len().min(b.len()))
}

/// True iff `(w)^∞` dominates each of its proper shifts in the signed order.
///
/// A word of length 1 has no proper shift and is vacuously admissible.
pub fn is_admissible(w: &KneadingWord) -> bool {
    let n = w.len();
    let k = w.sequence();
    (1..n).all(|i| mt_compare(&k.shift(i), &k, 2 * n) != Ordering::Greater)
}

/// Every admissible word of length `n`, sorted by letter notation.
///
/// For `n >= 2` the first symbol is always `R`: `f(c)` is the maximum of
/// the map and lies right of `c`. A word starting with `L` is beaten by its
/// own shift that starts with `C`, since `C > L` under an empty prefix.
/// Only `R`-initial candidates are generated. Returns nothing for `n < 2`.
pub fn enumerate_admissible(n: usize) -> Vec<KneadingWord> {
    if n < 2 {
        return Vec::new();
    }
    let free = n - 2;
    let mut words: Vec<KneadingWord> = (0u64..1 << free)
        .map(|mask| {
            let mut symbols = Vec::with_capacity(n);
            symbols.push(Symbol::R);
            // bit set means R; highest bit first
            for bit in (0..free).rev() {
                symbols.push(if mask >> bit & 1 == 1 { Symbol::R } else { Symbol::L });
            }
            symbols.push(Symbol::C);
            KneadingWord { symbols }
        })
        .filter(is_admissible)
        .collect();
    words.sort_by_key(|w| w.to_string());
    words
}
