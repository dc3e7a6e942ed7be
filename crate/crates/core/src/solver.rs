//! Exhaustive search for morphisms `τ` with `τ(α) = w`.
//!
//! The search walks `α` left to right. Variables are assigned in order of
//! first occurrence; at a fresh variable every feasible image length is tried
//! in ascending order, and the image itself is then fixed by `w`. Later
//! occurrences of an assigned variable are checked against `w` directly.
//!
//! Two prunings keep the tree small:
//!
//! * length feasibility: the images already fixed, plus the minimal image
//!   length of every unassigned occurrence, must fit into what is left of
//!   `w`. When no other unassigned variable remains the length of the fresh
//!   variable is forced.
//! * immediate mismatch of an assigned variable against `w`.
//!
//! One node is one image-length trial for a fresh variable. The budget caps
//! the number of nodes, and running out is reported as its own outcome.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::morphism::Morphism;
use crate::words::{Letter, Pattern, Var, Word};

/// Which competitors `τ` are admitted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SearchMode {
    pub allow_erasing: bool,
}

impl SearchMode {
    /// Any morphism `τ`, including erasing ones.
    pub const ERASING: SearchMode = SearchMode { allow_erasing: true };
    /// Only nonerasing `τ` ("weak" unambiguity).
    pub const NONERASING: SearchMode = SearchMode { allow_erasing: false };

    fn min_len(self) -> usize {
        usize::from(!self.allow_erasing)
    }
}

impl Default for SearchMode {
    fn default() -> Self {
        SearchMode::ERASING
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Budget {
    max_nodes: u64,
}

impl Budget {
    pub const DEFAULT_NODES: u64 = 100_000_000;

    pub fn new(max_nodes: u64) -> Result<Self> {
        if max_nodes == 0 {
            return Err(Error::domain("budget must be positive"));
        }
        Ok(Budget { max_nodes })
    }

    pub fn max_nodes(self) -> u64 {
        self.max_nodes
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_nodes: Self::DEFAULT_NODES,
        }
    }
}

/// An alternative morphism with `τ(α) = w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub tau: Morphism,
    /// First variable (by first occurrence in `α`) on which `τ` differs from
    /// the excluded morphism; `None` when nothing was excluded.
    pub differing_variable: Option<Var>,
    pub nodes_explored: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Search {
    Witness(Witness),
    NoWitness,
    BudgetExhausted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Ambiguity {
    Ambiguous(Witness),
    Unambiguous,
    BudgetExhausted,
}

impl Ambiguity {
    pub fn is_ambiguous(&self) -> bool {
        matches!(self, Ambiguity::Ambiguous(_))
    }

    pub fn is_unambiguous(&self) -> bool {
        matches!(self, Ambiguity::Unambiguous)
    }
}

/// A nontrivial morphism `φ` on patterns with `φ(α) = α`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPointWitness {
    pub phi: BTreeMap<Var, Pattern>,
    pub differing_variable: Var,
    pub nodes_explored: u64,
}

impl FixedPointWitness {
    pub fn apply(&self, alpha: &Pattern) -> Option<Pattern> {
        let mut out = Vec::new();
        for x in alpha.symbols() {
            out.extend_from_slice(self.phi.get(x)?.symbols());
        }
        Some(Pattern::new(out))
    }

    /// Text form in the morphism syntax, with images written as dotted patterns.
    pub fn to_text(&self) -> String {
        self.phi
            .iter()
            .map(|(x, img)| {
                let ids: Vec<String> = img.symbols().iter().map(|v| v.to_string()).collect();
                format!("{x}={}", ids.join("."))
            })
            .collect::<Vec<_>>()
            .join(",")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FixedPoint {
    FixedPoint(FixedPointWitness),
    NotFixedPoint,
    BudgetExhausted,
}

impl FixedPoint {
    pub fn is_fixed_point(&self) -> bool {
        matches!(self, FixedPoint::FixedPoint(_))
    }
}

enum Flow {
    Continue,
    Stop,
    Exhausted,
}

/// `α` re-indexed densely by first occurrence, against a word of letter indices.
struct Problem<'a> {
    pattern: Vec<usize>,
    vars: Vec<Var>,
    word: &'a [u32],
    /// `suffix_counts[p][x]`: occurrences of `x` in `α[p..]`.
    suffix_counts: Vec<Vec<usize>>,
    min_len: usize,
}

struct State {
    start: Vec<usize>,
    len: Vec<usize>,
    assigned: usize,
    nodes: u64,
    max_nodes: u64,
}

impl<'a> Problem<'a> {
    fn new(alpha: &Pattern, word: &'a [u32], mode: SearchMode) -> Self {
        let vars = alpha.vars_by_first_occurrence();
        let dense: BTreeMap<Var, usize> = vars.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let pattern: Vec<usize> = alpha.symbols().iter().map(|x| dense[x]).collect();
        let mut suffix_counts = vec![vec![0; vars.len()]; pattern.len() + 1];
        for p in (0..pattern.len()).rev() {
            suffix_counts[p] = suffix_counts[p + 1].clone();
            suffix_counts[p][pattern[p]] += 1;
        }
        Problem {
            pattern,
            vars,
            word,
            suffix_counts,
            min_len: mode.min_len(),
        }
    }

    fn run<F>(&self, budget: Budget, on_leaf: &mut F) -> (Flow, u64)
    where
        F: FnMut(&State) -> bool,
    {
        let mut st = State {
            start: vec![0; self.vars.len()],
            len: vec![0; self.vars.len()],
            assigned: 0,
            nodes: 0,
            max_nodes: budget.max_nodes,
        };
        let flow = self.step(&mut st, 0, 0, on_leaf);
        (flow, st.nodes)
    }

    fn step<F>(&self, st: &mut State, mut p: usize, mut o: usize, on_leaf: &mut F) -> Flow
    where
        F: FnMut(&State) -> bool,
    {
        let n = self.word.len();
        while p < self.pattern.len() && self.pattern[p] < st.assigned {
            let x = self.pattern[p];
            let (s, l) = (st.start[x], st.len[x]);
            if o + l > n || self.word[o..o + l] != self.word[s..s + l] {
                return Flow::Continue;
            }
            p += 1;
            o += l;
        }
        if p == self.pattern.len() {
            if o == n && on_leaf(st) {
                return Flow::Stop;
            }
            return Flow::Continue;
        }

        // Fresh variable: x == st.assigned, every smaller index is assigned,
        // every larger index still unassigned.
        let x = self.pattern[p];
        let counts = &self.suffix_counts[p];
        let fixed: usize = (0..x).map(|y| st.len[y] * counts[y]).sum();
        let others: usize = counts[x + 1..].iter().sum();
        let rem = n - o;
        let reserved = fixed + others * self.min_len;
        if reserved > rem {
            return Flow::Continue;
        }
        let avail = rem - reserved;
        let cx = counts[x];
        let (lo, hi) = if others == 0 {
            if avail % cx != 0 {
                return Flow::Continue;
            }
            let l = avail / cx;
            if l < self.min_len {
                return Flow::Continue;
            }
            (l, l)
        } else {
            (self.min_len, avail / cx)
        };

        for l in lo..=hi {
            if st.nodes >= st.max_nodes {
                return Flow::Exhausted;
            }
            st.nodes += 1;
            st.start[x] = o;
            st.len[x] = l;
            st.assigned = x + 1;
            let flow = self.step(st, p + 1, o + l, on_leaf);
            st.assigned = x;
            match flow {
                Flow::Continue => {}
                other => return other,
            }
        }
        Flow::Continue
    }

    fn image(&self, st: &State, x: usize) -> &[u32] {
        &self.word[st.start[x]..st.start[x] + st.len[x]]
    }
}

fn letters_to_indices(w: &Word) -> Vec<u32> {
    w.letters().iter().map(|l| l.index()).collect()
}

fn indices_to_word(s: &[u32]) -> Word {
    Word::new(s.iter().map(|&i| Letter(i)).collect())
}

fn check_query(alpha: &Pattern, w: &Word, excluded: Option<&Morphism>) -> Result<()> {
    if alpha.is_empty() {
        return Err(Error::domain("the pattern must be non-empty"));
    }
    if let Some(sigma) = excluded {
        if let Some(l) = w.letters().iter().find(|l| !sigma.alphabet().contains(**l)) {
            return Err(Error::domain(format!(
                "letter {l} of the word is outside the excluded morphism's alphabet"
            )));
        }
        if &sigma.apply(alpha)? != w {
            return Err(Error::domain(
                "the excluded morphism does not map the pattern onto the word",
            ));
        }
    }
    Ok(())
}

/// Searches for `τ` with `τ(α) = w` that differs from `excluded` on some
/// variable of `α`. Returns the first witness in the search order.
pub fn find_alternative(
    alpha: &Pattern,
    w: &Word,
    excluded: Option<&Morphism>,
    mode: SearchMode,
    budget: Budget,
) -> Result<Search> {
    check_query(alpha, w, excluded)?;
    let word = letters_to_indices(w);
    let problem = Problem::new(alpha, &word, mode);
    let excluded_images: Option<Vec<Vec<u32>>> = excluded.map(|sigma| {
        problem
            .vars
            .iter()
            .map(|x| letters_to_indices(sigma.image(*x).expect("checked domain")))
            .collect()
    });

    // (start, length) per dense variable, and the first differing one.
    type Leaf = (Vec<(usize, usize)>, Option<usize>);
    let mut found: Option<Leaf> = None;
    let mut on_leaf = |st: &State| {
        let differing = match &excluded_images {
            None => None,
            Some(ex) => match (0..problem.vars.len()).find(|&x| problem.image(st, x) != ex[x].as_slice()) {
                Some(x) => Some(x),
                None => return false,
            },
        };
        found = Some((
            (0..problem.vars.len()).map(|x| (st.start[x], st.len[x])).collect(),
            differing,
        ));
        true
    };
    let (flow, nodes) = problem.run(budget, &mut on_leaf);
    Ok(match flow {
        Flow::Stop => {
            let (spans, differing) = found.expect("leaf recorded");
            let images = problem
                .vars
                .iter()
                .zip(&spans)
                .map(|(x, &(s, l))| (*x, indices_to_word(&word[s..s + l])));
            let alphabet = excluded.map(|m| m.alphabet());
            let tau = match alphabet {
                Some(a) => Morphism::new(images.collect(), a)?,
                None => Morphism::from_images(images),
            };
            Search::Witness(Witness {
                tau,
                differing_variable: differing.map(|x| problem.vars[x]),
                nodes_explored: nodes,
            })
        }
        Flow::Continue => Search::NoWitness,
        Flow::Exhausted => Search::BudgetExhausted,
    })
}

/// Decides whether `σ` is ambiguous with respect to `α`.
pub fn is_ambiguous(sigma: &Morphism, alpha: &Pattern, mode: SearchMode, budget: Budget) -> Result<Ambiguity> {
    let w = sigma.apply(alpha)?;
    Ok(match find_alternative(alpha, &w, Some(sigma), mode, budget)? {
        Search::Witness(wit) => Ambiguity::Ambiguous(wit),
        Search::NoWitness => Ambiguity::Unambiguous,
        Search::BudgetExhausted => Ambiguity::BudgetExhausted,
    })
}

/// The identity on `var(α)`, as a morphism onto the rank word of `α`.
pub fn identity_morphism(alpha: &Pattern) -> Morphism {
    let (_, order) = alpha.to_rank_word();
    Morphism::from_images(
        order
            .iter()
            .enumerate()
            .map(|(r, x)| (*x, Word::new(vec![Letter(r as u32)]))),
    )
}

/// Decides whether `α` is a fixed point of a nontrivial morphism.
///
/// This is literally the ambiguity query for the identity renaming on `var(α)`.
pub fn is_fixed_point(alpha: &Pattern, budget: Budget) -> Result<FixedPoint> {
    if alpha.is_empty() {
        return Err(Error::domain("the pattern must be non-empty"));
    }
    let (_, order) = alpha.to_rank_word();
    let id = identity_morphism(alpha);
    Ok(match is_ambiguous(&id, alpha, SearchMode::ERASING, budget)? {
        Ambiguity::Ambiguous(wit) => {
            let phi = wit
                .tau
                .images()
                .iter()
                .map(|(x, img)| {
                    let syms = img.letters().iter().map(|l| order[l.index() as usize]).collect();
                    (*x, Pattern::new(syms))
                })
                .collect();
            FixedPoint::FixedPoint(FixedPointWitness {
                phi,
                differing_variable: wit.differing_variable.expect("identity was excluded"),
                nodes_explored: wit.nodes_explored,
            })
        }
        Ambiguity::Unambiguous => FixedPoint::NotFixedPoint,
        Ambiguity::BudgetExhausted => FixedPoint::BudgetExhausted,
    })
}

/// All `τ` with `τ(α) = w` in search order, truncated at `limit`.
pub fn enumerate_preimages(alpha: &Pattern, w: &Word, limit: usize, mode: SearchMode) -> Result<Vec<Morphism>> {
    if limit == 0 {
        return Err(Error::domain("limit must be at least 1"));
    }
    check_query(alpha, w, None)?;
    let word = letters_to_indices(w);
    let problem = Problem::new(alpha, &word, mode);
    let mut out = Vec::new();
    let mut on_leaf = |st: &State| {
        let images = problem
            .vars
            .iter()
            .enumerate()
            .map(|(x, v)| (*v, indices_to_word(problem.image(st, x))));
        out.push(Morphism::from_images(images));
        out.len() >= limit
    };
    let unlimited = Budget { max_nodes: u64::MAX };
    problem.run(unlimited, &mut on_leaf);
    Ok(out)
}
