//! Named consistency checks over generated families, runnable without a
//! test harness (the CLI `verify` subcommand).

use std::ops::RangeInclusive;

use serde::Serialize;

use crate::conditions::{candidate_pairs, has_unique_2_factors, sigma_ij_for};
use crate::error::{Error, Result};
use crate::explorer::{canonical_colorings, enumerate_canonical_patterns, search_1uniform, PatternConstraints};
use crate::generators::{alpha_squares, pi_db, shortest_succinct, thue_morphism_for_alpha};
use crate::morphism::Morphism;
use crate::solver::{is_ambiguous, is_fixed_point, Ambiguity, Budget, FixedPoint, SearchMode};
use crate::words::{Alphabet, Letter, Pattern};

/// Longest pattern length the sweeping checks accept.
pub const MAX_VERIFY_LENGTH: usize = 12;

/// Names accepted by [`run_check`].
pub const CHECKS: [&str; 6] = ["thue", "shortest", "pi-db", "pair-theorem", "un-factors", "prolix"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    /// Instances examined.
    pub checked: usize,
    pub violations: Vec<String>,
}

impl CheckReport {
    fn new(name: &str) -> Self {
        CheckReport {
            name: name.to_string(),
            passed: true,
            checked: 0,
            violations: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.passed = false;
            self.violations.push(what());
        }
    }
}

/// Parameters of a check. Only the field the named check reads is used.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckArgs {
    Range(RangeInclusive<u32>),
    MaxLen(usize),
}

fn exhausted(budget: Budget) -> Error {
    Error::BudgetExhausted {
        max_nodes: budget.max_nodes(),
    }
}

fn unambiguous(sigma: &Morphism, alpha: &Pattern, budget: Budget) -> Result<bool> {
    match is_ambiguous(sigma, alpha, SearchMode::ERASING, budget)? {
        Ambiguity::Unambiguous => Ok(true),
        Ambiguity::Ambiguous(_) => Ok(false),
        Ambiguity::BudgetExhausted => Err(exhausted(budget)),
    }
}

fn fixed(alpha: &Pattern, budget: Budget) -> Result<bool> {
    match is_fixed_point(alpha, budget)? {
        FixedPoint::FixedPoint(_) => Ok(true),
        FixedPoint::NotFixedPoint => Ok(false),
        FixedPoint::BudgetExhausted => Err(exhausted(budget)),
    }
}

fn sweep_length(max_len: usize) -> Result<usize> {
    if max_len > MAX_VERIFY_LENGTH {
        return Err(Error::Guard(format!(
            "verify length {max_len} exceeds {MAX_VERIFY_LENGTH}"
        )));
    }
    Ok(max_len)
}

/// Runs the named check.
pub fn run_check(name: &str, args: &CheckArgs, budget: Budget) -> Result<CheckReport> {
    match (name, args) {
        ("thue", CheckArgs::Range(ms)) => thue(ms.clone(), budget),
        ("shortest", CheckArgs::Range(ns)) => shortest(ns.clone(), budget),
        ("pi-db", CheckArgs::Range(ks)) => pi_db_check(ks.clone(), budget),
        ("pair-theorem", CheckArgs::MaxLen(n)) => pair_theorem(sweep_length(*n)?, budget),
        ("un-factors", CheckArgs::MaxLen(n)) => un_factors(sweep_length(*n)?, budget),
        ("prolix", CheckArgs::MaxLen(n)) => prolix(sweep_length(*n)?, budget),
        (n, _) if CHECKS.contains(&n) => Err(Error::domain(format!("wrong parameters for check {n}"))),
        (n, _) => Err(Error::parse(
            n,
            format!("unknown check; expected one of {}", CHECKS.join(", ")),
        )),
    }
}

/// No binary morphism is unambiguous for `α_m`; the Thue morphism is.
pub fn thue(ms: RangeInclusive<u32>, budget: Budget) -> Result<CheckReport> {
    let mut report = CheckReport::new("thue");
    for m in ms {
        let alpha = alpha_squares(m)?;
        let binary = search_1uniform(&alpha, 2, budget)?.map(|s| s.to_string());
        report.record(binary.is_none(), || {
            format!("m={m}: binary morphism {}", binary.unwrap_or_default())
        });
        let sigma = thue_morphism_for_alpha(m)?;
        let ok = unambiguous(&sigma, &alpha, budget)?;
        report.record(ok, || format!("m={m}: thue morphism ambiguous"));
    }
    Ok(report)
}

/// The bundled binary morphism is unambiguous for the shortest succinct
/// pattern, which is not a fixed point.
pub fn shortest(ns: RangeInclusive<u32>, budget: Budget) -> Result<CheckReport> {
    let mut report = CheckReport::new("shortest");
    for n in ns {
        let (alpha, sigma) = shortest_succinct(n)?;
        let not_fixed = !fixed(&alpha, budget)?;
        report.record(not_fixed, || format!("n={n}: {alpha} is a fixed point"));
        let ok = unambiguous(&sigma, &alpha, budget)?;
        report.record(ok, || format!("n={n}: {sigma} ambiguous for {alpha}"));
    }
    Ok(report)
}

/// Every natural morphism of `Π_DB(k)` is unambiguous.
pub fn pi_db_check(ks: RangeInclusive<u32>, budget: Budget) -> Result<CheckReport> {
    let mut report = CheckReport::new("pi-db");
    for k in ks {
        for item in pi_db(k)? {
            let ok = unambiguous(&item.natural_morphism, &item.pattern, budget)?;
            report.record(ok, || {
                format!("k={k}: {} ambiguous for {}", item.natural_morphism, item.pattern)
            });
        }
    }
    Ok(report)
}

/// Every pair passing the pair condition gives an unambiguous `σ_{i,j}`, over
/// non-fixed-point patterns with uniform multiplicity at least 2.
pub fn pair_theorem(max_len: usize, budget: Budget) -> Result<CheckReport> {
    let mut report = CheckReport::new("pair-theorem");
    for len in 2..=max_len {
        for m in (2..=len).filter(|m| len % m == 0) {
            for alpha in enumerate_canonical_patterns(len, PatternConstraints::uniform(m))? {
                if fixed(&alpha, budget)? {
                    continue;
                }
                for (i, j) in candidate_pairs(&alpha)? {
                    let ok = unambiguous(&sigma_ij_for(&alpha, i, j)?, &alpha, budget)?;
                    report.record(ok, || format!("{alpha}: pair ({i}, {j}) ambiguous"));
                }
            }
        }
    }
    Ok(report)
}

/// Images with every 2-factor occurring once come from unambiguous morphisms
/// and non-fixed-point patterns (1-uniform, at most 4 letters).
pub fn un_factors(max_len: usize, budget: Budget) -> Result<CheckReport> {
    let mut report = CheckReport::new("un-factors");
    for len in 2..=max_len {
        for alpha in enumerate_canonical_patterns(len, PatternConstraints::default().with_min_multiplicity(2))? {
            let vars = alpha.vars_by_first_occurrence();
            let mut pattern_checked = false;
            for coloring in canonical_colorings(vars.len(), 4) {
                let k = coloring.iter().max().map_or(1, |&c| c + 1);
                let sigma = Morphism::one_uniform(
                    vars.iter().zip(&coloring).map(|(x, &c)| (*x, Letter(c))),
                    Alphabet::new(k)?,
                )?;
                if !has_unique_2_factors(&sigma.apply(&alpha)?)? {
                    continue;
                }
                let ok = unambiguous(&sigma, &alpha, budget)?;
                report.record(ok, || format!("{alpha}: {sigma} ambiguous"));
                if !pattern_checked {
                    pattern_checked = true;
                    let not_fixed = !fixed(&alpha, budget)?;
                    report.record(not_fixed, || format!("{alpha} is a fixed point"));
                }
            }
        }
    }
    Ok(report)
}

/// Every binary 1-uniform morphism is ambiguous for a fixed point.
pub fn prolix(max_len: usize, budget: Budget) -> Result<CheckReport> {
    let mut report = CheckReport::new("prolix");
    for len in 1..=max_len {
        for alpha in enumerate_canonical_patterns(len, PatternConstraints::default())? {
            if !fixed(&alpha, budget)? {
                continue;
            }
            let vars = alpha.vars_by_first_occurrence();
            for coloring in canonical_colorings(vars.len(), 2) {
                let sigma = Morphism::one_uniform(
                    vars.iter().zip(&coloring).map(|(x, &c)| (*x, Letter(c))),
                    Alphabet::new(2)?,
                )?;
                let ok = !unambiguous(&sigma, &alpha, budget)?;
                report.record(ok, || format!("{alpha}: {sigma} unambiguous"));
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_checks_pass() {
        let b = Budget::default();
        for (name, args) in [
            ("thue", CheckArgs::Range(4..=4)),
            ("shortest", CheckArgs::Range(2..=5)),
            ("pair-theorem", CheckArgs::MaxLen(6)),
            ("un-factors", CheckArgs::MaxLen(6)),
            ("prolix", CheckArgs::MaxLen(5)),
        ] {
            let r = run_check(name, &args, b).unwrap();
            assert!(r.passed && r.checked > 0, "{r:?}");
        }
    }

    #[test]
    fn bad_names_and_arguments() {
        let b = Budget::default();
        assert!(matches!(
            run_check("nope", &CheckArgs::MaxLen(3), b),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            run_check("thue", &CheckArgs::MaxLen(3), b),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            run_check("prolix", &CheckArgs::MaxLen(13), b),
            Err(Error::Guard(_))
        ));
    }
}
