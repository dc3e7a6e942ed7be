use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::conditions::{billaud_instance, BillaudReport};
use crate::error::{Error, Result};
use crate::explorer::{enumerate_canonical_patterns, search_1uniform, search_sigma_ij, Decision, PatternConstraints};
use crate::solver::{is_ambiguous, is_fixed_point, Ambiguity, Budget, FixedPoint, SearchMode};
use crate::words::Pattern;

/// Longest pattern length a scan accepts.
pub const MAX_SCAN_LENGTH: usize = 14;

const CHUNK: usize = 2048;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScanTarget {
    /// Some 1-uniform morphism into fewer letters than variables is unambiguous
    /// iff the pattern is not a fixed point (`|var| >= 4`).
    Conjecture1,
    /// Some `σ_{i,j}` is unambiguous iff the pattern is not a fixed point (`|var| >= 4`).
    Conjecture2,
    /// If every `δ_i(α)` is a fixed point then so is `α` (`|var| >= 3`).
    Conjecture3,
    /// Patterns with every variable exactly twice and `|var| > 3` that are not
    /// fixed points have an unambiguous `σ_{i,j}`.
    Theorem7,
}

impl ScanTarget {
    pub const ALL: [ScanTarget; 4] = [
        ScanTarget::Conjecture1,
        ScanTarget::Conjecture2,
        ScanTarget::Conjecture3,
        ScanTarget::Theorem7,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ScanTarget::Conjecture1 => "conjecture1",
            ScanTarget::Conjecture2 => "conjecture2",
            ScanTarget::Conjecture3 => "conjecture3",
            ScanTarget::Theorem7 => "theorem7",
        }
    }

    /// Lengths and constraints of the patterns in scope.
    fn scope(self, max_len: usize) -> Vec<(usize, PatternConstraints)> {
        match self {
            ScanTarget::Conjecture1 | ScanTarget::Conjecture2 => (4..=max_len)
                .map(|n| (n, PatternConstraints::default().with_min_vars(4)))
                .collect(),
            ScanTarget::Conjecture3 => (3..=max_len)
                .map(|n| (n, PatternConstraints::default().with_min_vars(3)))
                .collect(),
            ScanTarget::Theorem7 => (8..=max_len)
                .filter(|n| n % 2 == 0)
                .map(|n| (n, PatternConstraints::uniform(2).with_min_vars(4)))
                .collect(),
        }
    }
}

impl fmt::Display for ScanTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ScanTarget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ScanTarget::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::parse(s, "expected conjecture1, conjecture2, conjecture3 or theorem7"))
    }
}

/// Verdicts for one pattern. Serialises as one JSON object per line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanRecord {
    pub pattern: Pattern,
    pub is_fixed_point: bool,
    pub var_count: usize,
    pub best_sigma_ij: Option<[u32; 2]>,
    pub best_uniform_k: Option<u32>,
    pub budget_hit: bool,
    /// The pattern contradicts the scanned conjecture.
    pub finding: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub billaud: Option<BillaudReport>,
}

impl ScanRecord {
    fn new(pattern: &Pattern) -> Self {
        ScanRecord {
            pattern: pattern.clone(),
            is_fixed_point: false,
            var_count: pattern.var_count(),
            best_sigma_ij: None,
            best_uniform_k: None,
            budget_hit: false,
            finding: false,
            billaud: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanOptions {
    /// Per solver call.
    pub budget: Budget,
    /// Worker threads; 0 lets the pool pick.
    pub workers: usize,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            budget: Budget::default(),
            workers: 1,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct ScanSummary {
    pub records: usize,
    pub findings: usize,
    pub budget_hits: usize,
}

fn violation(pattern: &Pattern, detail: impl Into<String>) -> Error {
    Error::TheoremViolation {
        pattern: pattern.to_string(),
        detail: detail.into(),
    }
}

fn evaluate(alpha: &Pattern, target: ScanTarget, budget: Budget) -> Result<ScanRecord> {
    let mut rec = ScanRecord::new(alpha);

    if target == ScanTarget::Conjecture3 {
        match billaud_instance(alpha, budget) {
            Ok(report) => {
                rec.is_fixed_point = report.alpha_is_fixed_point;
                rec.finding = !report.conjecture_instance_ok;
                rec.billaud = Some(report);
            }
            Err(Error::BudgetExhausted { .. }) => rec.budget_hit = true,
            Err(e) => return Err(e),
        }
        return Ok(rec);
    }

    match is_fixed_point(alpha, budget)? {
        FixedPoint::FixedPoint(_) => {
            rec.is_fixed_point = true;
            return Ok(rec);
        }
        FixedPoint::NotFixedPoint => {}
        FixedPoint::BudgetExhausted => {
            rec.budget_hit = true;
            return Ok(rec);
        }
    }

    match target {
        ScanTarget::Conjecture1 => {
            for k in 1..rec.var_count as u32 {
                match search_1uniform(alpha, k, budget) {
                    Ok(Some(_)) => {
                        rec.best_uniform_k = Some(k);
                        break;
                    }
                    Ok(None) => {}
                    Err(Error::BudgetExhausted { .. }) => rec.budget_hit = true,
                    Err(e) => return Err(e),
                }
            }
            rec.finding = rec.best_uniform_k.is_none() && !rec.budget_hit;
        }
        ScanTarget::Conjecture2 | ScanTarget::Theorem7 => {
            match search_sigma_ij(alpha, budget) {
                Ok(Some(hit)) => {
                    if hit.decided_by == Decision::PairCondition {
                        match is_ambiguous(&hit.morphism, alpha, SearchMode::ERASING, budget)? {
                            Ambiguity::Unambiguous => {}
                            Ambiguity::Ambiguous(w) => {
                                return Err(violation(
                                    alpha,
                                    format!(
                                        "pair ({}, {}) passes the pair condition but sigma_ij is ambiguous via {}",
                                        hit.i, hit.j, w.tau
                                    ),
                                ))
                            }
                            Ambiguity::BudgetExhausted => rec.budget_hit = true,
                        }
                    }
                    rec.best_sigma_ij = Some([hit.i.get(), hit.j.get()]);
                }
                Ok(None) => {}
                Err(Error::BudgetExhausted { .. }) => rec.budget_hit = true,
                Err(e) => return Err(e),
            }
            let missing = rec.best_sigma_ij.is_none() && !rec.budget_hit;
            if target == ScanTarget::Theorem7 && missing {
                return Err(violation(
                    alpha,
                    "no unambiguous sigma_ij for a succinct non-fixed-point pattern",
                ));
            }
            rec.finding = missing;
        }
        ScanTarget::Conjecture3 => unreachable!("handled above"),
    }
    Ok(rec)
}

/// Runs a scan, handing every record to `sink` in enumeration order
/// (by length, then lexicographically) regardless of the worker count.
///
/// Contradicting a proven statement aborts with [`Error::TheoremViolation`];
/// contradicting a conjecture only sets `finding` on the record.
pub fn conjecture_scan_with<F>(
    max_len: usize,
    target: ScanTarget,
    opts: ScanOptions,
    mut sink: F,
) -> Result<ScanSummary>
where
    F: FnMut(&ScanRecord) -> Result<()>,
{
    if max_len > MAX_SCAN_LENGTH {
        return Err(Error::Guard(format!("scan length {max_len} exceeds {MAX_SCAN_LENGTH}")));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.workers)
        .build()
        .map_err(|e| Error::domain(format!("cannot start worker pool: {e}")))?;
    let mut summary = ScanSummary::default();
    for (len, constraints) in target.scope(max_len) {
        let mut patterns = enumerate_canonical_patterns(len, constraints)?;
        loop {
            let chunk: Vec<Pattern> = patterns.by_ref().take(CHUNK).collect();
            if chunk.is_empty() {
                break;
            }
            let records: Vec<Result<ScanRecord>> =
                pool.install(|| chunk.par_iter().map(|a| evaluate(a, target, opts.budget)).collect());
            for rec in records {
                let rec = rec?;
                summary.records += 1;
                summary.findings += usize::from(rec.finding);
                summary.budget_hits += usize::from(rec.budget_hit);
                sink(&rec)?;
            }
        }
    }
    Ok(summary)
}

/// [`conjecture_scan_with`] collecting every record.
pub fn conjecture_scan(max_len: usize, target: ScanTarget, opts: ScanOptions) -> Result<Vec<ScanRecord>> {
    let mut out = Vec::new();
    conjecture_scan_with(max_len, target, opts, |r| {
        out.push(r.clone());
        Ok(())
    })?;
    Ok(out)
}
