//! Morphisms from patterns to words, and the generic constructions built from them.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::words::{parse_word, Alphabet, Letter, Pattern, Var, Word};

/// A map from a finite set of variables to words over one target alphabet.
///
/// The text format is a comma-separated list of `var=image` entries, an empty
/// image standing for the empty word: `1=,2=a,3=ab`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Morphism {
    images: BTreeMap<Var, Word>,
    alphabet: Alphabet,
}

/// Structural flags of a morphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MorphismClass {
    pub one_uniform: bool,
    pub nonerasing: bool,
    pub renaming: bool,
}

impl Morphism {
    pub fn new(images: BTreeMap<Var, Word>, alphabet: Alphabet) -> Result<Self> {
        for (x, w) in &images {
            if let Some(l) = w.letters().iter().find(|l| !alphabet.contains(**l)) {
                return Err(Error::domain(format!(
                    "image of {x} uses letter {l} outside an alphabet of size {}",
                    alphabet.size()
                )));
            }
        }
        Ok(Morphism { images, alphabet })
    }

    /// Builds a morphism whose target alphabet is the smallest one covering all images.
    pub fn from_images(images: impl IntoIterator<Item = (Var, Word)>) -> Self {
        let images: BTreeMap<Var, Word> = images.into_iter().collect();
        let size = images
            .values()
            .flat_map(|w| w.letters().iter().map(|l| l.index() + 1))
            .max()
            .unwrap_or(1);
        Morphism {
            images,
            alphabet: Alphabet::new(size).expect("size >= 1"),
        }
    }

    /// A 1-uniform morphism mapping each listed variable to one letter.
    pub fn one_uniform(assignment: impl IntoIterator<Item = (Var, Letter)>, alphabet: Alphabet) -> Result<Self> {
        let images = assignment.into_iter().map(|(x, l)| (x, Word::new(vec![l]))).collect();
        Morphism::new(images, alphabet)
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn domain(&self) -> impl Iterator<Item = Var> + '_ {
        self.images.keys().copied()
    }

    pub fn image(&self, x: Var) -> Option<&Word> {
        self.images.get(&x)
    }

    pub fn images(&self) -> &BTreeMap<Var, Word> {
        &self.images
    }

    /// `σ(α)`.
    pub fn apply(&self, alpha: &Pattern) -> Result<Word> {
        let mut out = Word::empty();
        for &x in alpha.symbols() {
            let img = self
                .images
                .get(&x)
                .ok_or_else(|| Error::domain(format!("variable {x} is outside the morphism's domain")))?;
            out.extend_from(img);
        }
        Ok(out)
    }

    pub fn classify(&self) -> MorphismClass {
        let one_uniform = self.images.values().all(|w| w.len() == 1);
        let nonerasing = self.images.values().all(|w| !w.is_empty());
        let distinct: BTreeSet<&Word> = self.images.values().collect();
        MorphismClass {
            one_uniform,
            nonerasing,
            renaming: one_uniform && distinct.len() == self.images.len(),
        }
    }

    /// Restriction to the given variables; errors if one is missing.
    pub fn restrict(&self, vars: &BTreeSet<Var>) -> Result<Morphism> {
        let images = vars
            .iter()
            .map(|x| {
                self.images
                    .get(x)
                    .map(|w| (*x, w.clone()))
                    .ok_or_else(|| Error::domain(format!("variable {x} is outside the morphism's domain")))
            })
            .collect::<Result<_>>()?;
        Ok(Morphism {
            images,
            alphabet: self.alphabet,
        })
    }
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (x, w)) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}={w}")?;
        }
        Ok(())
    }
}

impl Serialize for Morphism {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for Morphism {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_morphism(s)
    }
}

/// Parses `1=,2=a,3=ab`. The target alphabet is the smallest one covering every image.
pub fn parse_morphism(text: &str) -> Result<Morphism> {
    let mut images = BTreeMap::new();
    for entry in text.split(',').map(str::trim).filter(|e| !e.is_empty()) {
        let (lhs, rhs) = entry
            .split_once('=')
            .ok_or_else(|| Error::parse(entry, "expected `var=image`"))?;
        let lhs = lhs.trim();
        let x = match crate::words::parse_pattern(lhs)?.symbols() {
            [x] => *x,
            _ => return Err(Error::parse(lhs, "expected a single variable")),
        };
        let img = parse_word(rhs.trim())?;
        if images.insert(x, img).is_some() {
            return Err(Error::parse(lhs, "variable assigned twice"));
        }
    }
    Ok(Morphism::from_images(images))
}

/// `σ_{i,j}`: the canonical renaming of `vars` (n-th smallest variable to the
/// n-th letter) with `j` redirected onto the letter of `i`.
///
/// The alphabet must contain every letter the renaming touches, which is
/// `|vars| - 1` letters when `j` is the largest variable and `|vars|` otherwise.
pub fn sigma_ij(vars: &BTreeSet<Var>, i: Var, j: Var, alphabet: Alphabet) -> Result<Morphism> {
    if i == j {
        return Err(Error::domain(format!("sigma_ij needs i != j, got i = j = {i}")));
    }
    for v in [i, j] {
        if !vars.contains(&v) {
            return Err(Error::domain(format!("variable {v} is not among the given variables")));
        }
    }
    let letter_of = |x: &Var| Letter(vars.iter().position(|y| y == x).expect("member") as u32);
    let images: BTreeMap<Var, Word> = vars
        .iter()
        .map(|x| {
            let l = if *x == j { letter_of(&i) } else { letter_of(x) };
            (*x, Word::new(vec![l]))
        })
        .collect();
    let needed = images.values().map(|w| w.letters()[0].index() + 1).max().unwrap_or(1);
    if alphabet.size() < needed {
        return Err(Error::domain(format!(
            "sigma_ij over {} variables needs {needed} letters, alphabet has {}",
            vars.len(),
            alphabet.size()
        )));
    }
    Morphism::new(images, alphabet)
}

/// `δ_i(α)`: `α` with every occurrence of `i` deleted.
pub fn delta_i(alpha: &Pattern, i: Var) -> Pattern {
    Pattern::new(alpha.symbols().iter().copied().filter(|&x| x != i).collect())
}
