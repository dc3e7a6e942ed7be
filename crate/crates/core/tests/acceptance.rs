//! Acceptance criteria. Runs every criterion in order, prints one line per
//! criterion and fails the target if any criterion fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use unambig_core::conditions::{
    candidate_pairs, has_unique_2_factors, pair_condition, prop_image_fixed_point, sigma_ij_for,
};
use unambig_core::explorer::{
    canonical_colorings, conjecture_scan_with, enumerate_canonical_patterns, search_1uniform, PatternConstraints,
    ScanOptions, ScanTarget,
};
use unambig_core::generators::{alpha_squares, debruijn, pi_db, shortest_succinct, thue_morphism_for_alpha, thue_word};
use unambig_core::{
    enumerate_preimages, find_alternative, is_ambiguous, is_fixed_point, parse_morphism, parse_pattern, parse_word,
    Alphabet, Ambiguity, Budget, FixedPoint, Letter, Morphism, Pattern, Search, SearchMode, Var, Word,
};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn p(s: &str) -> Pattern {
    parse_pattern(s).unwrap()
}

fn budget() -> Budget {
    Budget::default()
}

fn ambiguity(sigma: &Morphism, alpha: &Pattern) -> Ambiguity {
    is_ambiguous(sigma, alpha, SearchMode::ERASING, budget()).unwrap()
}

fn fixed(alpha: &Pattern) -> Result<bool, String> {
    match is_fixed_point(alpha, budget()).unwrap() {
        FixedPoint::FixedPoint(_) => Ok(true),
        FixedPoint::NotFixedPoint => Ok(false),
        FixedPoint::BudgetExhausted => Err(format!("budget exhausted deciding fixed point of {alpha}")),
    }
}

fn unambiguous(sigma: &Morphism, alpha: &Pattern) -> Result<bool, String> {
    match ambiguity(sigma, alpha) {
        Ambiguity::Unambiguous => Ok(true),
        Ambiguity::Ambiguous(w) => {
            let img = w.tau.apply(alpha).unwrap();
            ensure(img == sigma.apply(alpha).unwrap(), || {
                format!("witness {} does not validate", w.tau)
            })?;
            Ok(false)
        }
        Ambiguity::BudgetExhausted => Err(format!("budget exhausted on {sigma} / {alpha}")),
    }
}

fn canonical(len: usize, c: PatternConstraints) -> impl Iterator<Item = Pattern> {
    enumerate_canonical_patterns(len, c).unwrap()
}

// 1. Running example.
fn running_example() -> Outcome {
    let alpha0 = p("1 2 3 1 3 2");
    let sigma0 = parse_morphism("1=a,2=a,3=b").unwrap();
    let sigma1 = parse_morphism("1=a,2=ab,3=b").unwrap();
    let image = parse_word("aababa").unwrap();

    match ambiguity(&sigma0, &alpha0) {
        Ambiguity::Ambiguous(w) => ensure(w.tau.apply(&alpha0).unwrap() == image, || {
            "witness does not validate".into()
        })?,
        other => return Err(format!("sigma0 should be ambiguous, got {other:?}")),
    }
    let tau0 = parse_morphism("1=,2=a,3=ab").unwrap();
    let all = enumerate_preimages(&alpha0, &image, usize::MAX, SearchMode::ERASING).unwrap();
    ensure(all.iter().any(|m| m.images() == tau0.images()), || {
        "tau0 missing from preimages".into()
    })?;
    ensure(unambiguous(&sigma1, &alpha0)?, || "sigma1 should be unambiguous".into())?;
    let weak = find_alternative(&alpha0, &image, Some(&sigma0), SearchMode::NONERASING, budget()).unwrap();
    ensure(weak == Search::NoWitness, || format!("weak check: {weak:?}"))?;
    Ok(format!("{} preimages of aababa", all.len()))
}

// 2. Ternary alphabets are needed and suffice for alpha_m.
fn thue() -> Outcome {
    ensure(thue_word(21).to_string() == "abcacbabcbacabcacbaca", || {
        "thue prefix mismatch".into()
    })?;
    for m in 4..=6 {
        let alpha = alpha_squares(m).unwrap();
        let binary = search_1uniform(&alpha, 2, budget()).map_err(|e| e.to_string())?;
        ensure(binary.is_none(), || {
            format!("m={m}: binary morphism {} found", binary.clone().unwrap())
        })?;
        let sigma = thue_morphism_for_alpha(m).unwrap();
        ensure(unambiguous(&sigma, &alpha)?, || {
            format!("m={m}: thue morphism ambiguous")
        })?;
    }
    Ok("m = 4..6".into())
}

// 3. Shortest succinct patterns with binary morphisms.
fn shortest() -> Outcome {
    for n in 2..=8u32 {
        let (alpha, sigma) = shortest_succinct(n).unwrap();
        ensure(!fixed(&alpha)?, || format!("n={n}: {alpha} is a fixed point"))?;
        ensure(
            alpha.var_count() == n as usize && alpha.uniform_multiplicity() == Some(2),
            || format!("n={n}: wrong shape {alpha}"),
        )?;
        ensure(unambiguous(&sigma, &alpha)?, || {
            format!("n={n}: {sigma} ambiguous for {alpha}")
        })?;
    }
    let mut shorter = 0;
    for len in 4..8 {
        for alpha in canonical(len, PatternConstraints::default().with_min_vars(4).with_max_vars(4)) {
            shorter += 1;
            ensure(fixed(&alpha)?, || {
                format!("{alpha} is shorter than 8 and not a fixed point")
            })?;
        }
    }
    Ok(format!(
        "n = 2..8; {shorter} shorter 4-variable patterns all fixed points"
    ))
}

// 4. Worked examples on alpha_1 and alpha_2.
fn worked_examples() -> Outcome {
    let alpha1 = p("1 2 3 4 1 4 3 2");
    let alpha2 = p("1 2 3 3 4 4 1 2 3 3 4 4 2");
    let v = |i| Var::new(i).unwrap();

    let s24 = sigma_ij_for(&alpha1, v(2), v(4)).unwrap();
    let img = s24.apply(&alpha1).unwrap().to_string();
    ensure(img == "abcbabcb", || format!("sigma_24(alpha1) = {img}"))?;
    ensure(prop_image_fixed_point(&alpha1, v(2), v(4), budget()).unwrap(), || {
        "abcbabcb not a fixed point".into()
    })?;

    let s23 = sigma_ij_for(&alpha1, v(2), v(3)).unwrap();
    let img = s23.apply(&alpha1).unwrap();
    ensure(img.canonical_form().to_string() == "abbcacbb", || {
        format!("sigma_23(alpha1) = {img}")
    })?;
    ensure(!prop_image_fixed_point(&alpha1, v(2), v(3), budget()).unwrap(), || {
        "abbcacbb is a fixed point".into()
    })?;
    ensure(!unambiguous(&s23, &alpha1)?, || "sigma_23 should be ambiguous".into())?;

    let s14 = sigma_ij_for(&alpha1, v(1), v(4)).unwrap();
    ensure(unambiguous(&s14, &alpha1)?, || "sigma_14 should be unambiguous".into())?;
    ensure(pair_condition(&alpha1, v(1), v(4)).unwrap().passes, || {
        "pair (1,4) should pass".into()
    })?;

    let s24 = sigma_ij_for(&alpha2, v(2), v(4)).unwrap();
    ensure(!unambiguous(&s24, &alpha2)?, || {
        "sigma_24 should be ambiguous for alpha2".into()
    })?;
    let tau = parse_morphism("1=abccb,2=b,3=,4=").unwrap();
    ensure(tau.apply(&alpha2).unwrap() == s24.apply(&alpha2).unwrap(), || {
        "the known tau does not validate".into()
    })?;
    Ok("alpha1, alpha2".into())
}

// 5. Pair condition soundness.
fn pair_theorem() -> Outcome {
    let (mut patterns, mut pairs) = (0, 0);
    for len in 2..=10 {
        for m in (2..=len).filter(|m| len % m == 0) {
            for alpha in canonical(len, PatternConstraints::uniform(m)) {
                if fixed(&alpha)? {
                    continue;
                }
                patterns += 1;
                for (i, j) in candidate_pairs(&alpha).unwrap() {
                    pairs += 1;
                    let sigma = sigma_ij_for(&alpha, i, j).unwrap();
                    ensure(unambiguous(&sigma, &alpha)?, || {
                        format!("{alpha}: pair ({i},{j}) ambiguous")
                    })?;
                }
            }
        }
    }
    Ok(format!("{patterns} patterns, {pairs} passing pairs, 0 violations"))
}

// 6. Seven variables, each twice.
fn greater_6() -> Outcome {
    let mut count = 0;
    for alpha in canonical(14, PatternConstraints::uniform(2).with_min_vars(7)) {
        count += 1;
        ensure(!candidate_pairs(&alpha).unwrap().is_empty(), || {
            format!("{alpha} has no candidate pair")
        })?;
    }
    ensure(count == 135_135, || format!("enumerated {count} patterns"))?;
    Ok(format!("{count} patterns"))
}

// 7. Succinct non-fixed-point patterns with 4..=6 variables.
fn shortest_succinct_sweep() -> Outcome {
    let mut checked = 0;
    for len in [8, 10, 12] {
        for alpha in canonical(len, PatternConstraints::uniform(2)) {
            if fixed(&alpha)? {
                continue;
            }
            checked += 1;
            let vars: Vec<Var> = alpha.vars().into_iter().collect();
            let mut found = false;
            'pairs: for (a, &i) in vars.iter().enumerate() {
                for &j in &vars[a + 1..] {
                    if unambiguous(&sigma_ij_for(&alpha, i, j).unwrap(), &alpha)? {
                        found = true;
                        break 'pairs;
                    }
                }
            }
            ensure(found, || format!("{alpha}: every sigma_ij ambiguous"))?;
        }
    }
    Ok(format!("{checked} non-fixed-point patterns, 0 violations"))
}

// 8. Unique 2-factors force unambiguity and non-fixed-points.
fn unique_factors() -> Outcome {
    let (mut instances, mut patterns) = (0, 0);
    for len in 2..=10 {
        for alpha in canonical(len, PatternConstraints::default().with_min_multiplicity(2)) {
            let vars = alpha.vars_by_first_occurrence();
            let mut seen_pattern = false;
            for k in 1..=4u32 {
                for coloring in canonical_colorings(vars.len(), k) {
                    if coloring.iter().max().map_or(0, |&c| c + 1) != k {
                        continue;
                    }
                    let sigma = Morphism::one_uniform(
                        vars.iter().zip(&coloring).map(|(x, &c)| (*x, Letter(c))),
                        Alphabet::new(k).unwrap(),
                    )
                    .unwrap();
                    if !has_unique_2_factors(&sigma.apply(&alpha).unwrap()).unwrap() {
                        continue;
                    }
                    instances += 1;
                    ensure(unambiguous(&sigma, &alpha)?, || format!("{alpha}: {sigma} ambiguous"))?;
                    if !seen_pattern {
                        seen_pattern = true;
                        patterns += 1;
                        ensure(!fixed(&alpha)?, || format!("{alpha} is a fixed point"))?;
                    }
                }
            }
        }
    }
    ensure(instances > 0, || "no instance exercised".into())?;
    Ok(format!("{instances} morphisms over {patterns} patterns, 0 violations"))
}

// 9. Pi_DB(3).
fn pi_db_3() -> Outcome {
    ensure(debruijn(3, 2).unwrap().to_string() == "aabacbbcca", || {
        "debruijn(3,2) mismatch".into()
    })?;
    let target = p("1 1 2 3 4 2 2 4 4 3");
    let mut distinct = BTreeSet::new();
    let mut items = 0;
    let mut saw_target = false;
    let k = 3usize;
    let expected_vars = (k - 1) * (k / 2) + k.div_ceil(2);
    for item in pi_db(3).unwrap() {
        items += 1;
        ensure(item.pattern.var_count() == expected_vars, || {
            format!("{} has wrong var count", item.pattern)
        })?;
        ensure(unambiguous(&item.natural_morphism, &item.pattern)?, || {
            format!("{}: natural morphism ambiguous", item.pattern)
        })?;
        saw_target |= item.pattern == target && item.source_word.to_string() == "aabacbbcca";
        distinct.insert(item.pattern);
    }
    ensure(saw_target, || "1 1 2 3 4 2 2 4 4 3 not emitted".into())?;
    ensure(distinct.len() >= 36, || {
        format!("only {} distinct patterns", distinct.len())
    })?;
    Ok(format!("{items} items, {} distinct patterns (>= 36)", distinct.len()))
}

/// Every split of `w` into `alpha.len()` blocks consistent with `alpha`.
fn naive_preimages(alpha: &Pattern, w: &Word, nonerasing: bool) -> BTreeSet<String> {
    fn go(
        alpha: &Pattern,
        w: &[Letter],
        p: usize,
        o: usize,
        min: usize,
        cuts: &mut Vec<(usize, usize)>,
        out: &mut BTreeSet<String>,
    ) {
        if p == alpha.len() {
            if o != w.len() {
                return;
            }
            let mut images: std::collections::BTreeMap<Var, &[Letter]> = Default::default();
            for (q, &(s, e)) in cuts.iter().enumerate() {
                let x = alpha.symbols()[q];
                if let Some(prev) = images.insert(x, &w[s..e]) {
                    if prev != &w[s..e] {
                        return;
                    }
                }
            }
            let text = images
                .iter()
                .map(|(x, img)| format!("{x}={}", Word::new(img.to_vec())))
                .collect::<Vec<_>>()
                .join(",");
            out.insert(text);
            return;
        }
        for e in o + min..=w.len() {
            cuts.push((o, e));
            go(alpha, w, p + 1, e, min, cuts, out);
            cuts.pop();
        }
    }
    let mut out = BTreeSet::new();
    go(
        alpha,
        w.letters(),
        0,
        0,
        usize::from(nonerasing),
        &mut Vec::new(),
        &mut out,
    );
    out
}

// 10. Solver against the naive oracle.
fn oracle_equivalence() -> Outcome {
    let mut words = Vec::new();
    for n in 0..=5u32 {
        for bits in 0..(1u32 << n) {
            words.push(Word::new((0..n).map(|b| Letter((bits >> b) & 1)).collect()));
        }
    }
    let mut instances = 0;
    for len in 1..=5 {
        for alpha in canonical(len, PatternConstraints::default().with_max_vars(3)) {
            for w in &words {
                for mode in [SearchMode::ERASING, SearchMode::NONERASING] {
                    instances += 1;
                    let got: BTreeSet<String> = enumerate_preimages(&alpha, w, usize::MAX, mode)
                        .unwrap()
                        .iter()
                        .map(|m| m.to_string())
                        .collect();
                    let want = naive_preimages(&alpha, w, !mode.allow_erasing);
                    ensure(got == want, || format!("{alpha} / {w} / {mode:?}: {got:?} vs {want:?}"))?;
                }
            }
        }
    }
    Ok(format!("{instances} instances agree"))
}

// 11. Conjecture scans.
fn conjecture_scans() -> Outcome {
    let mut parts = Vec::new();
    for target in [ScanTarget::Conjecture2, ScanTarget::Conjecture3] {
        let mut findings = Vec::new();
        let summary = conjecture_scan_with(
            10,
            target,
            ScanOptions {
                workers: 0,
                ..Default::default()
            },
            |r| {
                if r.finding {
                    findings.push(r.pattern.to_string());
                }
                Ok(())
            },
        )
        .map_err(|e| e.to_string())?;
        if !findings.is_empty() {
            eprintln!("FINDING ({target}): {findings:?}");
        }
        ensure(summary.findings == 0, || {
            format!("{target}: {} findings {findings:?}", summary.findings)
        })?;
        ensure(summary.budget_hits == 0, || {
            format!("{target}: {} budget hits", summary.budget_hits)
        })?;
        parts.push(format!("{target}: {} records", summary.records));
    }
    Ok(parts.join(", "))
}

// 12. Fixed points have no unambiguous 1-uniform binary morphism.
fn prolix() -> Outcome {
    let (mut patterns, mut morphisms) = (0, 0);
    for len in 1..=8 {
        for alpha in canonical(len, PatternConstraints::default()) {
            if !fixed(&alpha)? {
                continue;
            }
            patterns += 1;
            let vars: Vec<Var> = alpha.vars().into_iter().collect();
            for bits in 0..(1u32 << vars.len()) {
                morphisms += 1;
                let sigma = Morphism::one_uniform(
                    vars.iter().enumerate().map(|(q, x)| (*x, Letter((bits >> q) & 1))),
                    Alphabet::new(2).unwrap(),
                )
                .unwrap();
                ensure(!unambiguous(&sigma, &alpha)?, || {
                    format!("{alpha}: {sigma} unambiguous")
                })?;
            }
        }
    }
    Ok(format!("{patterns} fixed points x {morphisms} morphisms, 0 violations"))
}

fn main() {
    type Check = (u32, &'static str, fn() -> Outcome, Duration);
    let criteria: [Check; 12] = [
        (1, "running example", running_example, Duration::from_secs(1)),
        (2, "alpha_m needs three letters", thue, Duration::from_secs(30)),
        (3, "shortest succinct binary", shortest, Duration::from_secs(120)),
        (4, "worked sigma_ij examples", worked_examples, Duration::from_secs(5)),
        (5, "pair condition soundness", pair_theorem, Duration::from_secs(600)),
        (6, "seven variables each twice", greater_6, Duration::from_secs(300)),
        (
            7,
            "succinct patterns have sigma_ij",
            shortest_succinct_sweep,
            Duration::from_secs(900),
        ),
        (8, "unique 2-factors", unique_factors, Duration::from_secs(600)),
        (9, "Pi_DB(3)", pi_db_3, Duration::from_secs(120)),
        (
            10,
            "solver vs naive oracle",
            oracle_equivalence,
            Duration::from_secs(120),
        ),
        (11, "conjecture scans", conjecture_scans, Duration::from_secs(1800)),
        (12, "fixed points are ambiguous", prolix, Duration::from_secs(300)),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (n, name, run, limit) in criteria {
        if !filter.is_empty() && !filter.iter().any(|f| f == &n.to_string()) {
            continue;
        }
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|detail| {
            if elapsed <= limit {
                Ok(detail)
            } else {
                Err(format!("{detail}; took {elapsed:.1?}, limit {limit:?}"))
            }
        });
        match outcome {
            Ok(detail) => println!("PASS criterion {n:>2} ({name}): {detail} [{elapsed:.2?}]"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {n:>2} ({name}): {why} [{elapsed:.2?}]");
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
