//! Structural conditions on patterns that decide, or bound, ambiguity and
//! fixed-point status without a full search.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::morphism::{delta_i, sigma_ij};
use crate::solver::{is_fixed_point, Budget, FixedPoint};
use crate::words::{Alphabet, Neighbour, Pattern, Var, Word};

/// Which of the two symmetric neighbourhood conditions fired.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LemmaCase {
    /// `ε ∉ L_i` and `R_k = {i}` for every `k ∈ L_i`.
    Left = 1,
    /// `ε ∉ R_i` and `L_k = {i}` for every `k ∈ R_i`.
    Right = 2,
}

/// Sufficient condition for `α` being a fixed point, read off the
/// neighbourhood sets.
///
/// Condition (1) is tried for every variable in ascending order before
/// condition (2); the first hit is returned.
pub fn lemma_neighbourhood_fixed_point(alpha: &Pattern) -> Result<Option<(Var, LemmaCase)>> {
    let nb = alpha.neighbourhoods()?;
    let vars: Vec<Var> = nb.vars().collect();
    let only = |set: &BTreeSet<Neighbour>, i: Var| set.len() == 1 && set.contains(&Neighbour::Var(i));
    let holds = |i: Var, case: LemmaCase| {
        let near = match case {
            LemmaCase::Left => nb.left(i),
            LemmaCase::Right => nb.right(i),
        };
        !near.contains(&Neighbour::Boundary)
            && near.iter().all(|k| match *k {
                Neighbour::Var(k) => match case {
                    LemmaCase::Left => only(nb.right(k), i),
                    LemmaCase::Right => only(nb.left(k), i),
                },
                Neighbour::Boundary => false,
            })
    };
    for case in [LemmaCase::Left, LemmaCase::Right] {
        if let Some(&i) = vars.iter().find(|&&i| holds(i, case)) {
            return Ok(Some((i, case)));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairConditionReport {
    pub uniform_multiplicity: Option<usize>,
    pub covered_by_l: Option<Var>,
    pub covered_by_r: Option<Var>,
    pub has_ij_then_ji: bool,
    pub passes: bool,
}

/// Checks the hypotheses under which `σ_{i,j}` is known to be unambiguous
/// for a pattern that is not a fixed point:
///
/// * every variable occurs the same number `m >= 2` of times,
/// * no `k` has `{i,j} ⊆ L_k` or `{i,j} ⊆ R_k`,
/// * `α` has no factorisation `α_1·i·j·α_2·j·i·α_3`, i.e. no occurrence of
///   `i·j` followed later by a non-overlapping occurrence of `j·i`.
pub fn pair_condition(alpha: &Pattern, i: Var, j: Var) -> Result<PairConditionReport> {
    if i == j {
        return Err(Error::domain(format!("pair condition needs i != j, got {i} twice")));
    }
    let vars = alpha.vars();
    for v in [i, j] {
        if !vars.contains(&v) {
            return Err(Error::domain(format!("variable {v} does not occur in the pattern")));
        }
    }
    let nb = alpha.neighbourhoods()?;
    let pair = [Neighbour::Var(i), Neighbour::Var(j)];
    let covers = |set: &BTreeSet<Neighbour>| pair.iter().all(|n| set.contains(n));
    let covered_by_l = vars.iter().copied().find(|&k| covers(nb.left(k)));
    let covered_by_r = vars.iter().copied().find(|&k| covers(nb.right(k)));
    let has_ij_then_ji = has_factor_then_reverse(alpha.symbols(), i, j);
    let uniform_multiplicity = alpha.uniform_multiplicity();
    let passes = uniform_multiplicity.is_some_and(|m| m >= 2)
        && covered_by_l.is_none()
        && covered_by_r.is_none()
        && !has_ij_then_ji;
    Ok(PairConditionReport {
        uniform_multiplicity,
        covered_by_l,
        covered_by_r,
        has_ij_then_ji,
        passes,
    })
}

fn has_factor_then_reverse(s: &[Var], i: Var, j: Var) -> bool {
    let Some(first) = s.windows(2).position(|f| f == [i, j]) else {
        return false;
    };
    s.windows(2).skip(first + 2).any(|f| f == [j, i])
}

/// All pairs `i < j` passing [`pair_condition`], in lexicographic order.
pub fn candidate_pairs(alpha: &Pattern) -> Result<Vec<(Var, Var)>> {
    if alpha.is_empty() {
        return Err(Error::domain("the pattern must be non-empty"));
    }
    let vars: Vec<Var> = alpha.vars().into_iter().collect();
    let mut out = Vec::new();
    for (a, &i) in vars.iter().enumerate() {
        for &j in &vars[a + 1..] {
            if pair_condition(alpha, i, j)?.passes {
                out.push((i, j));
            }
        }
    }
    Ok(out)
}

/// `σ_{i,j}` over `var(α)` with an alphabet of `|var(α)|` letters.
pub fn sigma_ij_for(alpha: &Pattern, i: Var, j: Var) -> Result<crate::morphism::Morphism> {
    let vars = alpha.vars();
    let alphabet = Alphabet::new(vars.len().max(1) as u32)?;
    sigma_ij(&vars, i, j, alphabet)
}

/// True iff `σ_{i,j}(α)`, read as a pattern over its letters, is a fixed
/// point of a nontrivial morphism. A `true` answer means `σ_{i,j}` is
/// ambiguous with respect to `α`; `false` decides nothing.
pub fn prop_image_fixed_point(alpha: &Pattern, i: Var, j: Var, budget: Budget) -> Result<bool> {
    let image = sigma_ij_for(alpha, i, j)?.apply(alpha)?;
    match is_fixed_point(&image.to_pattern(), budget)? {
        FixedPoint::FixedPoint(_) => Ok(true),
        FixedPoint::NotFixedPoint => Ok(false),
        FixedPoint::BudgetExhausted => Err(Error::BudgetExhausted {
            max_nodes: budget.max_nodes(),
        }),
    }
}

/// True iff every length-2 factor of `w` occurs exactly once.
pub fn has_unique_2_factors(w: &Word) -> Result<bool> {
    if w.len() < 2 {
        return Err(Error::domain("a word needs at least two letters to have 2-factors"));
    }
    Ok(w.factor_multiplicity(2)?.values().all(|&c| c == 1))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BillaudReport {
    /// Per variable `i`: whether `δ_i(α)` is a fixed point.
    pub fixed_point_of_delta: BTreeMap<Var, bool>,
    pub hypothesis_holds: bool,
    pub alpha_is_fixed_point: bool,
    pub conjecture_instance_ok: bool,
}

/// Evaluates one instance of the deletion conjecture: if every `δ_i(α)` is a
/// fixed point then so is `α`. `conjecture_instance_ok == false` is a
/// counterexample.
pub fn billaud_instance(alpha: &Pattern, budget: Budget) -> Result<BillaudReport> {
    let vars = alpha.vars();
    if vars.len() < 3 {
        return Err(Error::domain(format!(
            "the deletion conjecture needs at least 3 variables, pattern has {}",
            vars.len()
        )));
    }
    let decide = |beta: &Pattern| match is_fixed_point(beta, budget)? {
        FixedPoint::FixedPoint(_) => Ok(true),
        FixedPoint::NotFixedPoint => Ok(false),
        FixedPoint::BudgetExhausted => Err(Error::BudgetExhausted {
            max_nodes: budget.max_nodes(),
        }),
    };
    let fixed_point_of_delta = vars
        .iter()
        .map(|&i| Ok((i, decide(&delta_i(alpha, i))?)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    let hypothesis_holds = fixed_point_of_delta.values().all(|&b| b);
    let alpha_is_fixed_point = decide(alpha)?;
    Ok(BillaudReport {
        fixed_point_of_delta,
        hypothesis_holds,
        alpha_is_fixed_point,
        conjecture_instance_ok: !hypothesis_holds || alpha_is_fixed_point,
    })
}
