//! Patterns, words and alphabets.
//!
//! A [`Pattern`] is a finite sequence of [`Var`]s (positive integers); a
//! [`Word`] is a finite sequence of [`Letter`]s over an ordered [`Alphabet`].
//! Letters are numbered from zero and print as `a`, `b`, `c`, ... so that
//! the default alphabet of size `k` is the first `k` lowercase ASCII letters.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A variable of a pattern. Always `>= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct Var(u32);

impl Var {
    pub fn new(id: u32) -> Result<Self> {
        if id == 0 {
            return Err(Error::parse("0", "variables are positive integers"));
        }
        Ok(Var(id))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl TryFrom<u32> for Var {
    type Error = Error;

    fn try_from(id: u32) -> Result<Self> {
        Var::new(id)
    }
}

impl From<Var> for u32 {
    fn from(v: Var) -> u32 {
        v.0
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A word over the variable alphabet.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pattern(Vec<Var>);

impl Pattern {
    pub fn new(symbols: Vec<Var>) -> Self {
        Pattern(symbols)
    }

    pub fn empty() -> Self {
        Pattern(Vec::new())
    }

    /// Builds a pattern from raw ids, rejecting `0`.
    pub fn from_ids(ids: &[u32]) -> Result<Self> {
        ids.iter().map(|&id| Var::new(id)).collect::<Result<_>>().map(Pattern)
    }

    pub fn symbols(&self) -> &[Var] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `var(α)`.
    pub fn vars(&self) -> BTreeSet<Var> {
        self.0.iter().copied().collect()
    }

    pub fn var_count(&self) -> usize {
        self.vars().len()
    }

    /// Variables in order of first occurrence.
    pub fn vars_by_first_occurrence(&self) -> Vec<Var> {
        let mut seen = BTreeSet::new();
        self.0.iter().copied().filter(|v| seen.insert(*v)).collect()
    }

    /// `|α|_x`.
    pub fn occurrences(&self, x: Var) -> usize {
        self.0.iter().filter(|&&y| y == x).count()
    }

    pub fn multiplicities(&self) -> BTreeMap<Var, usize> {
        let mut out = BTreeMap::new();
        for &x in &self.0 {
            *out.entry(x).or_insert(0) += 1;
        }
        out
    }

    /// The common multiplicity of all variables, if there is one.
    pub fn uniform_multiplicity(&self) -> Option<usize> {
        let mults = self.multiplicities();
        let mut it = mults.values().copied();
        let first = it.next()?;
        it.all(|m| m == first).then_some(first)
    }

    pub fn concat(&self, other: &Pattern) -> Pattern {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Pattern(v)
    }

    /// Relabels variables by order of first occurrence as `1, 2, 3, ...`.
    pub fn canonical_form(&self) -> Pattern {
        let mut map: HashMap<Var, u32> = HashMap::new();
        let symbols = self
            .0
            .iter()
            .map(|x| {
                let next = map.len() as u32 + 1;
                Var(*map.entry(*x).or_insert(next))
            })
            .collect();
        Pattern(symbols)
    }

    pub fn is_canonical(&self) -> bool {
        let mut max = 0;
        for x in &self.0 {
            if x.0 > max + 1 {
                return false;
            }
            max = max.max(x.0);
        }
        true
    }

    /// Computes `L_x` and `R_x` for every variable.
    pub fn neighbourhoods(&self) -> Result<NeighbourhoodSets> {
        if self.is_empty() {
            return Err(Error::domain("neighbourhood sets are undefined for the empty pattern"));
        }
        let mut sets: BTreeMap<Var, (BTreeSet<Neighbour>, BTreeSet<Neighbour>)> = BTreeMap::new();
        let n = self.0.len();
        for (p, &x) in self.0.iter().enumerate() {
            let entry = sets.entry(x).or_default();
            entry.0.insert(if p == 0 {
                Neighbour::Boundary
            } else {
                Neighbour::Var(self.0[p - 1])
            });
            entry.1.insert(if p + 1 == n {
                Neighbour::Boundary
            } else {
                Neighbour::Var(self.0[p + 1])
            });
        }
        Ok(NeighbourhoodSets { sets })
    }

    /// Reads the pattern as a word whose letters are the ranks of the
    /// variables in `var(α)`, smallest variable first. Returns the word and
    /// the variables in rank order.
    pub fn to_rank_word(&self) -> (Word, Vec<Var>) {
        let order: Vec<Var> = self.vars().into_iter().collect();
        let word = self
            .0
            .iter()
            .map(|x| Letter(order.binary_search(x).expect("variable of the pattern") as u32))
            .collect();
        (Word(word), order)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_pattern(s)
    }
}

impl Serialize for Pattern {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Pattern {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        parse_pattern(&text).map_err(serde::de::Error::custom)
    }
}

/// Parses whitespace- or dot-separated positive integers.
pub fn parse_pattern(text: &str) -> Result<Pattern> {
    text.split(|c: char| c.is_whitespace() || c == '.')
        .filter(|tok| !tok.is_empty())
        .map(|tok| {
            if !tok.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::parse(tok, "expected a positive decimal integer"));
            }
            let id: u32 = tok.parse().map_err(|_| Error::parse(tok, "integer out of range"))?;
            Var::new(id).map_err(|_| Error::parse(tok, "variables are positive integers"))
        })
        .collect::<Result<_>>()
        .map(Pattern)
}

/// A member of a neighbourhood set: either a variable or the pattern boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Neighbour {
    Boundary,
    Var(Var),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeighbourhoodSets {
    sets: BTreeMap<Var, (BTreeSet<Neighbour>, BTreeSet<Neighbour>)>,
}

impl NeighbourhoodSets {
    /// `L_x`; empty if `x` does not occur.
    pub fn left(&self, x: Var) -> &BTreeSet<Neighbour> {
        self.sets.get(&x).map(|s| &s.0).unwrap_or(&EMPTY)
    }

    /// `R_x`; empty if `x` does not occur.
    pub fn right(&self, x: Var) -> &BTreeSet<Neighbour> {
        self.sets.get(&x).map(|s| &s.1).unwrap_or(&EMPTY)
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.sets.keys().copied()
    }
}

static EMPTY: BTreeSet<Neighbour> = BTreeSet::new();

/// A letter, identified by its zero-based position in the alphabet order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub u32);

impl Letter {
    pub fn index(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 < 26 {
            write!(f, "{}", (b'a' + self.0 as u8) as char)
        } else {
            write!(f, "<{}>", self.0)
        }
    }
}

/// The ordered alphabet `{a_1 < a_2 < ... < a_k}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Alphabet {
    size: u32,
}

impl Alphabet {
    pub fn new(size: u32) -> Result<Self> {
        if size == 0 {
            return Err(Error::domain("an alphabet needs at least one letter"));
        }
        Ok(Alphabet { size })
    }

    pub fn size(self) -> u32 {
        self.size
    }

    pub fn contains(self, l: Letter) -> bool {
        l.0 < self.size
    }

    pub fn letters(self) -> impl Iterator<Item = Letter> {
        (0..self.size).map(Letter)
    }

    /// Smallest alphabet containing every letter of `w` (at least one letter).
    pub fn covering(w: &Word) -> Self {
        let size = w.0.iter().map(|l| l.0 + 1).max().unwrap_or(1);
        Alphabet { size }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_indices(indices: &[u32]) -> Self {
        Word(indices.iter().map(|&i| Letter(i)).collect())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn push(&mut self, l: Letter) {
        self.0.push(l);
    }

    pub fn extend_from(&mut self, other: &Word) {
        self.0.extend_from_slice(&other.0);
    }

    /// Letters renamed by first occurrence as `a, b, c, ...`.
    pub fn canonical_form(&self) -> Word {
        let mut map: HashMap<Letter, u32> = HashMap::new();
        Word(
            self.0
                .iter()
                .map(|l| {
                    let next = map.len() as u32;
                    Letter(*map.entry(*l).or_insert(next))
                })
                .collect(),
        )
    }

    /// Reads the word as a pattern, letter `a_n` becoming variable `n + 1`.
    pub fn to_pattern(&self) -> Pattern {
        Pattern(self.0.iter().map(|l| Var(l.0 + 1)).collect())
    }

    pub fn is_square_free(&self) -> bool {
        is_square_free(&self.0)
    }

    /// Exact multiset of the length-`n` factors.
    pub fn factor_multiplicity(&self, n: usize) -> Result<BTreeMap<Word, usize>> {
        if n == 0 {
            return Err(Error::domain("factor length must be at least 1"));
        }
        let mut out = BTreeMap::new();
        for f in self.0.windows(n) {
            *out.entry(Word(f.to_vec())).or_insert(0) += 1;
        }
        Ok(out)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|l| write!(f, "{l}"))
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_word(s)
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Parses a contiguous string of lowercase ASCII letters.
pub fn parse_word(text: &str) -> Result<Word> {
    text.chars()
        .map(|c| {
            if c.is_ascii_lowercase() {
                Ok(Letter(c as u32 - 'a' as u32))
            } else {
                Err(Error::parse(
                    c.to_string(),
                    "words are strings of lowercase ASCII letters",
                ))
            }
        })
        .collect::<Result<_>>()
        .map(Word)
}

/// True iff `s` has no factor `v·v` with `v` non-empty.
pub fn is_square_free<T: Eq>(s: &[T]) -> bool {
    let n = s.len();
    for half in 1..=n / 2 {
        for start in 0..=n - 2 * half {
            if s[start..start + half] == s[start + half..start + 2 * half] {
                return false;
            }
        }
    }
    true
}
