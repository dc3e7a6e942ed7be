use crate::error::{Error, Result};
use crate::generators::enumerate_debruijn;
use crate::morphism::Morphism;
use crate::words::{Alphabet, Pattern, Var, Word};

/// One pattern of `Π_DB(k)` with the word it was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiDbItem {
    /// Canonical pattern.
    pub pattern: Pattern,
    /// 1-uniform; sends every variable of the class `N_j` to `a_j`.
    pub natural_morphism: Morphism,
    /// The member of `B'(k, 2)` the pattern maps onto.
    pub source_word: Word,
}

/// All patterns of `Π_DB(k)`, grouped by source word in lexicographic order.
///
/// For each `w ∈ B'(k, 2)`, the `n_j` occurrences of each letter `a_j` are
/// split into exactly `⌊n_j/2⌋` classes of size at least 2, every class
/// becoming one variable. The pattern is then put into canonical form.
/// Distinct splittings of the same word give distinct canonical patterns, so
/// each item is emitted once per source word.
pub fn pi_db(k: u32) -> Result<impl Iterator<Item = PiDbItem>> {
    if !(3..=4).contains(&k) {
        return Err(Error::Guard(format!("pi_db enumerates only 3 <= k <= 4, got k = {k}")));
    }
    let alphabet = Alphabet::new(k)?;
    Ok(enumerate_debruijn(k, 2)?.flat_map(move |w| items_for_word(&w, alphabet)))
}

fn items_for_word(w: &Word, alphabet: Alphabet) -> Vec<PiDbItem> {
    let positions: Vec<Vec<usize>> = alphabet
        .letters()
        .map(|a| {
            w.letters()
                .iter()
                .enumerate()
                .filter(|(_, l)| **l == a)
                .map(|(p, _)| p)
                .collect()
        })
        .collect();
    let per_letter: Vec<Vec<Vec<usize>>> = positions
        .iter()
        .map(|occ| partitions_min2(occ.len(), occ.len() / 2))
        .collect();
    if per_letter.iter().any(|ps| ps.is_empty()) {
        return Vec::new();
    }

    let mut out = Vec::new();
    let mut choice = vec![0usize; per_letter.len()];
    loop {
        // Block label per position, unique across letters.
        let mut labels = vec![0u32; w.len()];
        let mut offset = 0u32;
        for (j, occ) in positions.iter().enumerate() {
            let blocks = &per_letter[j][choice[j]];
            for (q, &pos) in occ.iter().enumerate() {
                labels[pos] = offset + blocks[q] as u32 + 1;
            }
            offset += (occ.len() / 2) as u32;
        }
        let pattern = Pattern::from_ids(&labels).expect("labels start at 1").canonical_form();
        let natural = pattern
            .symbols()
            .iter()
            .zip(w.letters())
            .map(|(x, l)| (*x, *l))
            .collect::<std::collections::BTreeMap<Var, _>>();
        out.push(PiDbItem {
            natural_morphism: Morphism::one_uniform(natural, alphabet).expect("letters within alphabet"),
            pattern,
            source_word: w.clone(),
        });

        // Odometer over the per-letter choices.
        let mut j = per_letter.len();
        loop {
            if j == 0 {
                return out;
            }
            j -= 1;
            choice[j] += 1;
            if choice[j] < per_letter[j].len() {
                break;
            }
            choice[j] = 0;
        }
    }
}

/// Set partitions of `0..n` into exactly `blocks` blocks of size at least 2,
/// as restricted growth strings.
fn partitions_min2(n: usize, blocks: usize) -> Vec<Vec<usize>> {
    fn go(p: usize, n: usize, blocks: usize, rgs: &mut Vec<usize>, sizes: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let deficit: usize =
            sizes.iter().map(|&s| 2usize.saturating_sub(s)).sum::<usize>() + 2 * (blocks - sizes.len());
        if deficit > n - p {
            return;
        }
        if p == n {
            out.push(rgs.clone());
            return;
        }
        for b in 0..=sizes.len().min(blocks - 1) {
            if b == sizes.len() {
                sizes.push(0);
            }
            sizes[b] += 1;
            rgs.push(b);
            go(p + 1, n, blocks, rgs, sizes, out);
            rgs.pop();
            sizes[b] -= 1;
            if sizes[b] == 0 {
                sizes.pop();
            }
        }
    }
    let mut out = Vec::new();
    if blocks == 0 {
        return out;
    }
    go(0, n, blocks, &mut Vec::new(), &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_pattern;

    #[test]
    fn partitions_counts() {
        assert_eq!(
            partitions_min2(4, 2),
            vec![vec![0, 0, 1, 1], vec![0, 1, 0, 1], vec![0, 1, 1, 0]]
        );
        assert_eq!(partitions_min2(3, 1).len(), 1);
        // 5 into {2,3}: C(5,2) = 10.
        assert_eq!(partitions_min2(5, 2).len(), 10);
        assert!(partitions_min2(1, 0).is_empty());
        assert!(partitions_min2(3, 2).is_empty());
    }

    #[test]
    fn pattern_from_w0() {
        let items: Vec<_> = pi_db(3).unwrap().collect();
        let target = parse_pattern("1 1 2 3 4 2 2 4 4 3").unwrap();
        let hit = items.iter().find(|it| it.pattern == target).expect("pattern emitted");
        assert_eq!(hit.source_word.to_string(), "aabacbbcca");
        assert_eq!(hit.natural_morphism.to_string(), "1=a,2=b,3=a,4=c");
    }

    #[test]
    fn items_are_consistent() {
        for it in pi_db(3).unwrap() {
            assert_eq!(it.natural_morphism.apply(&it.pattern).unwrap(), it.source_word);
            assert!(it.pattern.is_canonical());
            assert!(it.pattern.multiplicities().values().all(|&m| m >= 2));
            assert_eq!(it.pattern.var_count(), 4);
        }
    }

    #[test]
    fn guard() {
        assert!(matches!(pi_db(2), Err(Error::Guard(_))));
        assert!(matches!(pi_db(5), Err(Error::Guard(_))));
    }
}
