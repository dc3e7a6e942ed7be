//! Constructions of patterns and words with known ambiguity behaviour.

mod debruijn;
mod pi_db;

pub use debruijn::{debruijn, enumerate_debruijn, DeBruijnIter};
pub use pi_db::{pi_db, PiDbItem};

use crate::error::{Error, Result};
use crate::morphism::Morphism;
use crate::solver::{is_fixed_point, Budget, FixedPoint};
use crate::words::{is_square_free, Alphabet, Letter, Pattern, Var, Word};

/// Prefix of length `len` of the square-free fixed point of
/// `a -> abc, b -> ac, c -> b`.
pub fn thue_word(len: usize) -> Word {
    let mut w: Vec<u32> = vec![0];
    while w.len() < len {
        w = w
            .iter()
            .flat_map(|&l| match l {
                0 => &[0u32, 1, 2][..],
                1 => &[0, 2][..],
                _ => &[1][..],
            })
            .copied()
            .collect();
    }
    w.truncate(len);
    Word::from_indices(&w)
}

/// Every letter repeated twice in place.
pub fn double_letters(w: &Word) -> Word {
    Word::new(w.letters().iter().flat_map(|&l| [l, l]).collect())
}

/// `1·1·2·2·…·m·m`.
pub fn alpha_squares(m: u32) -> Result<Pattern> {
    if m == 0 {
        return Err(Error::domain("alpha_m needs m >= 1"));
    }
    Ok(Pattern::new((1..=m).flat_map(|x| [Var::new(x).unwrap(); 2]).collect()))
}

/// The 1-uniform morphism over `{a, b, c}` sending `q` to the `q`-th letter
/// of the square-free word, so that `α_m` maps onto a prefix of the doubled word.
pub fn thue_morphism_for_alpha(m: u32) -> Result<Morphism> {
    if m == 0 {
        return Err(Error::domain("alpha_m needs m >= 1"));
    }
    let w = thue_word(m as usize);
    Morphism::one_uniform(
        w.letters()
            .iter()
            .enumerate()
            .map(|(q, &l)| (Var::new(q as u32 + 1).unwrap(), l)),
        Alphabet::new(3)?,
    )
}

/// `1^{r_1}·2^{r_1}·3^{r_2}·4^{r_2}·…` for a square-free exponent sequence.
pub fn exponent_pattern(beta: &[u32]) -> Result<Pattern> {
    if beta.is_empty() {
        return Err(Error::domain("the exponent sequence must be non-empty"));
    }
    if let Some(r) = beta.iter().find(|&&r| r < 2) {
        return Err(Error::domain(format!("every exponent must be at least 2, got {r}")));
    }
    if !is_square_free(beta) {
        return Err(Error::domain("the exponent sequence must be square-free"));
    }
    let mut out = Vec::new();
    for (i, &r) in beta.iter().enumerate() {
        for x in [2 * i as u32 + 1, 2 * i as u32 + 2] {
            out.extend(std::iter::repeat(Var::new(x).unwrap()).take(r as usize));
        }
    }
    Ok(Pattern::new(out))
}

/// The shortest non-fixed-point pattern with `n` variables, each occurring
/// twice, together with a binary 1-uniform morphism for it.
///
/// Even `n`: `1·2·…·n·(n/2+1)·1·(n/2+2)·2·…·n·(n/2)`, first half of the
/// variables to `a`. Odd `n` with `c = ⌈n/2⌉`:
/// `1·1·2·3·…·n·(c+1)·2·(c+2)·3·…·n·c`, variables `1..=c` to `a`.
pub fn shortest_succinct(n: u32) -> Result<(Pattern, Morphism)> {
    if n < 2 {
        return Err(Error::domain("shortest_succinct needs n >= 2"));
    }
    let mut ids: Vec<u32> = Vec::with_capacity(2 * n as usize);
    let split = n.div_ceil(2);
    if n % 2 == 0 {
        ids.extend(1..=n);
        for t in 1..=n / 2 {
            ids.extend([n / 2 + t, t]);
        }
    } else {
        ids.push(1);
        ids.extend(1..=n);
        for t in 2..=split {
            ids.extend([split + t - 1, t]);
        }
    }
    let pattern = Pattern::from_ids(&ids)?;
    let sigma = Morphism::one_uniform(
        (1..=n).map(|x| (Var::new(x).unwrap(), Letter(u32::from(x > split)))),
        Alphabet::new(2)?,
    )?;
    Ok((pattern, sigma))
}

/// `α_1·β·α_2`, after checking that `γ = α_1·α_2` and `β` satisfy the
/// hypotheses under which the result has an unambiguous `σ_{i,j}`.
pub fn splice(alpha1: &Pattern, alpha2: &Pattern, beta: &Pattern, budget: Budget) -> Result<Pattern> {
    let gamma = alpha1.concat(alpha2);
    if gamma.is_empty() || beta.is_empty() {
        return Err(Error::domain("splice needs non-empty γ = α1·α2 and β"));
    }
    if !gamma.vars().is_disjoint(&beta.vars()) {
        return Err(Error::domain("var(γ) and var(β) must be disjoint"));
    }
    for (name, p) in [("γ", &gamma), ("β", beta)] {
        match is_fixed_point(p, budget)? {
            FixedPoint::NotFixedPoint => {}
            FixedPoint::FixedPoint(_) => {
                return Err(Error::domain(format!(
                    "{name} = {p} is a fixed point of a nontrivial morphism"
                )))
            }
            FixedPoint::BudgetExhausted => {
                return Err(Error::BudgetExhausted {
                    max_nodes: budget.max_nodes(),
                })
            }
        }
    }
    let succinct = |p: &Pattern| p.var_count() > 3 && p.multiplicities().values().all(|&m| m == 2);
    if !succinct(&gamma) && !succinct(beta) {
        return Err(Error::domain(
            "neither γ nor β has more than 3 variables each occurring exactly twice",
        ));
    }
    Ok(alpha1.concat(beta).concat(alpha2))
}
