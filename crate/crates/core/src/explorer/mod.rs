//! Exhaustive searches for unambiguous 1-uniform morphisms and sweeps over
//! canonical patterns.

mod enumerate;
mod scan;

pub use enumerate::{
    enumerate_canonical_patterns, enumerate_canonical_patterns_unguarded, CanonicalPatterns, PatternConstraints,
    MAX_ENUM_LENGTH,
};
pub use scan::{
    conjecture_scan, conjecture_scan_with, ScanOptions, ScanRecord, ScanSummary, ScanTarget, MAX_SCAN_LENGTH,
};

use serde::Serialize;

use crate::conditions::{pair_condition, prop_image_fixed_point, sigma_ij_for};
use crate::error::{Error, Result};
use crate::morphism::Morphism;
use crate::solver::{is_ambiguous, is_fixed_point, Ambiguity, Budget, FixedPoint, SearchMode};
use crate::words::{Alphabet, Letter, Pattern, Var};

/// How a `σ_{i,j}` was found to be unambiguous.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Decision {
    /// Accepted on the structural pair condition alone.
    PairCondition,
    /// Decided by an exhaustive solver run.
    Solver,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaIjHit {
    pub i: Var,
    pub j: Var,
    pub morphism: Morphism,
    pub decided_by: Decision,
}

fn fixed_point_or_budget(alpha: &Pattern, budget: Budget) -> Result<bool> {
    match is_fixed_point(alpha, budget)? {
        FixedPoint::FixedPoint(_) => Ok(true),
        FixedPoint::NotFixedPoint => Ok(false),
        FixedPoint::BudgetExhausted => Err(Error::BudgetExhausted {
            max_nodes: budget.max_nodes(),
        }),
    }
}

/// First pair `i < j` (lexicographic) with `σ_{i,j}` unambiguous w.r.t. `α`.
///
/// Fixed points return `None` straight away, since no nonerasing morphism is
/// unambiguous for them. For each pair, the structural pair condition is
/// tried first (it is cheap and, for non-fixed-points, sufficient); pairs
/// whose image is itself a fixed point are skipped; everything else goes to
/// the solver. The budget applies per solver call. If no pair is found and
/// some call ran out of budget, the result is [`Error::BudgetExhausted`].
pub fn search_sigma_ij(alpha: &Pattern, budget: Budget) -> Result<Option<SigmaIjHit>> {
    let vars: Vec<Var> = alpha.vars().into_iter().collect();
    if vars.len() < 2 {
        return Err(Error::domain("sigma_ij search needs at least two variables"));
    }
    if fixed_point_or_budget(alpha, budget)? {
        return Ok(None);
    }
    let mut exhausted = false;
    for (a, &i) in vars.iter().enumerate() {
        for &j in &vars[a + 1..] {
            let morphism = sigma_ij_for(alpha, i, j)?;
            if pair_condition(alpha, i, j)?.passes {
                return Ok(Some(SigmaIjHit {
                    i,
                    j,
                    morphism,
                    decided_by: Decision::PairCondition,
                }));
            }
            match prop_image_fixed_point(alpha, i, j, budget) {
                Ok(true) => continue,
                Ok(false) => {}
                Err(Error::BudgetExhausted { .. }) => exhausted = true,
                Err(e) => return Err(e),
            }
            match is_ambiguous(&morphism, alpha, SearchMode::ERASING, budget)? {
                Ambiguity::Unambiguous => {
                    return Ok(Some(SigmaIjHit {
                        i,
                        j,
                        morphism,
                        decided_by: Decision::Solver,
                    }))
                }
                Ambiguity::Ambiguous(_) => {}
                Ambiguity::BudgetExhausted => exhausted = true,
            }
        }
    }
    if exhausted {
        return Err(Error::BudgetExhausted {
            max_nodes: budget.max_nodes(),
        });
    }
    Ok(None)
}

/// Letter assignments of `vars` variables into `k` letters in which each new
/// letter first appears in alphabet order (restricted growth strings), in
/// lexicographic order.
pub fn canonical_colorings(vars: usize, k: u32) -> Vec<Vec<u32>> {
    fn go(rgs: &mut Vec<u32>, vars: usize, k: u32, used: u32, out: &mut Vec<Vec<u32>>) {
        if rgs.len() == vars {
            out.push(rgs.clone());
            return;
        }
        for c in 0..=used.min(k - 1) {
            rgs.push(c);
            go(rgs, vars, k, used.max(c + 1), out);
            rgs.pop();
        }
    }
    let mut out = Vec::new();
    if k > 0 {
        go(&mut Vec::with_capacity(vars), vars, k, 0, &mut out);
    }
    out
}

/// First unambiguous 1-uniform morphism `var(α) -> k letters`, trying
/// colorings in [`canonical_colorings`] order over the variables of `α` in
/// order of first occurrence. Renaming the letters of a morphism does not
/// change its ambiguity, so the reduction loses nothing.
pub fn search_1uniform(alpha: &Pattern, k: u32, budget: Budget) -> Result<Option<Morphism>> {
    if k == 0 {
        return Err(Error::domain("alphabet size must be at least 1"));
    }
    if alpha.is_empty() {
        return Err(Error::domain("the pattern must be non-empty"));
    }
    if fixed_point_or_budget(alpha, budget)? {
        return Ok(None);
    }
    let vars = alpha.vars_by_first_occurrence();
    let alphabet = Alphabet::new(k)?;
    let mut exhausted = false;
    for coloring in canonical_colorings(vars.len(), k) {
        let sigma = Morphism::one_uniform(vars.iter().zip(&coloring).map(|(x, &c)| (*x, Letter(c))), alphabet)?;
        match is_ambiguous(&sigma, alpha, SearchMode::ERASING, budget)? {
            Ambiguity::Unambiguous => return Ok(Some(sigma)),
            Ambiguity::Ambiguous(_) => {}
            Ambiguity::BudgetExhausted => exhausted = true,
        }
    }
    if exhausted {
        return Err(Error::BudgetExhausted {
            max_nodes: budget.max_nodes(),
        });
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::alpha_squares;
    use crate::words::parse_pattern;

    fn p(s: &str) -> Pattern {
        parse_pattern(s).unwrap()
    }

    fn v(i: u32) -> Var {
        Var::new(i).unwrap()
    }

    #[test]
    fn colorings() {
        assert_eq!(
            canonical_colorings(3, 2),
            vec![vec![0, 0, 0], vec![0, 0, 1], vec![0, 1, 0], vec![0, 1, 1]]
        );
        assert_eq!(canonical_colorings(4, 4).len(), 15);
        assert_eq!(canonical_colorings(0, 3), vec![Vec::<u32>::new()]);
    }

    #[test]
    fn sigma_ij_alpha1() {
        let alpha1 = p("1 2 3 4 1 4 3 2");
        let hit = search_sigma_ij(&alpha1, Budget::default()).unwrap().expect("pair");
        assert!((hit.i, hit.j) <= (v(1), v(4)));
        let verdict = is_ambiguous(&hit.morphism, &alpha1, SearchMode::ERASING, Budget::default()).unwrap();
        assert!(verdict.is_unambiguous());
    }

    #[test]
    fn sigma_ij_absent_cases() {
        assert!(search_sigma_ij(&p("1 2 3 1 3 2"), Budget::default()).unwrap().is_none());
        assert!(search_sigma_ij(&p("1 2 1 2"), Budget::default()).unwrap().is_none());
        assert!(search_sigma_ij(&p("1 1"), Budget::default()).is_err());
    }

    #[test]
    fn uniform_alpha_m() {
        let a4 = alpha_squares(4).unwrap();
        assert!(search_1uniform(&a4, 2, Budget::default()).unwrap().is_none());
        let s = search_1uniform(&a4, 3, Budget::default()).unwrap().expect("ternary");
        assert!(is_ambiguous(&s, &a4, SearchMode::ERASING, Budget::default())
            .unwrap()
            .is_unambiguous());
    }

    #[test]
    fn uniform_alpha0() {
        let a0 = p("1 2 3 1 3 2");
        assert!(search_1uniform(&a0, 2, Budget::default()).unwrap().is_none());
        let s = search_1uniform(&a0, 3, Budget::default()).unwrap().expect("renaming");
        assert!(s.classify().renaming);
    }
}
