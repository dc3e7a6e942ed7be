use crate::error::{Error, Result};
use crate::words::Word;

/// Largest `k^n` accepted by [`enumerate_debruijn`]; the used-window set is a `u64`.
const MAX_WINDOWS: u64 = 64;

fn check_params(k: u32, n: u32) -> Result<()> {
    if k == 0 || n == 0 {
        return Err(Error::domain("de Bruijn sequences need k >= 1 and n >= 1"));
    }
    Ok(())
}

/// The lexicographically least non-cyclic de Bruijn sequence of order `n`
/// over `k` letters: the concatenation of the Lyndon words whose length
/// divides `n` (FKM order), followed by its first `n - 1` letters.
pub fn debruijn(k: u32, n: u32) -> Result<Word> {
    check_params(k, n)?;
    let n = n as usize;
    let mut a = vec![0u32; n + 1];
    let mut seq = Vec::new();
    fkm(1, 1, n, k, &mut a, &mut seq);
    let head: Vec<u32> = seq.iter().copied().cycle().take(n - 1).collect();
    seq.extend(head);
    Ok(Word::from_indices(&seq))
}

fn fkm(t: usize, p: usize, n: usize, k: u32, a: &mut [u32], seq: &mut Vec<u32>) {
    if t > n {
        if n % p == 0 {
            seq.extend_from_slice(&a[1..=p]);
        }
        return;
    }
    a[t] = a[t - p];
    fkm(t + 1, p, n, k, a, seq);
    for c in a[t - p] + 1..k {
        a[t] = c;
        fkm(t + 1, t, n, k, a, seq);
    }
}

/// Every member of `B'(k, n)` in lexicographic order.
///
/// Depth-first over the de Bruijn graph: letters are appended in ascending
/// order, and a letter is admitted only if the length-`n` window it closes
/// has not been used yet.
pub fn enumerate_debruijn(k: u32, n: u32) -> Result<DeBruijnIter> {
    check_params(k, n)?;
    let windows = (k as u64).checked_pow(n).filter(|&w| w <= MAX_WINDOWS);
    let Some(windows) = windows else {
        return Err(Error::Guard(format!(
            "k^n must be at most {MAX_WINDOWS} (k = {k}, n = {n})"
        )));
    };
    let target = windows as usize + n as usize - 1;
    Ok(DeBruijnIter {
        k,
        n: n as usize,
        target,
        word: Vec::with_capacity(target),
        next: vec![0; target + 1],
        used: 0,
        done: false,
    })
}

pub struct DeBruijnIter {
    k: u32,
    n: usize,
    target: usize,
    word: Vec<u32>,
    /// Next letter to try at each depth.
    next: Vec<u32>,
    used: u64,
    done: bool,
}

impl DeBruijnIter {
    /// Index of the window ending at the current end of `word` extended by `c`.
    fn window(&self, c: u32) -> u64 {
        let start = self.word.len() + 1 - self.n;
        self.word[start..]
            .iter()
            .chain(std::iter::once(&c))
            .fold(0u64, |acc, &l| acc * self.k as u64 + l as u64)
    }

    fn pop(&mut self) {
        let c = self.word.pop().expect("non-empty");
        if self.word.len() + 1 >= self.n {
            let w = self.window(c);
            self.used &= !(1 << w);
        }
    }
}

impl Iterator for DeBruijnIter {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.done {
            return None;
        }
        loop {
            let depth = self.word.len();
            if depth == self.target {
                let out = Word::from_indices(&self.word);
                self.pop();
                return Some(out);
            }
            let c = self.next[depth];
            if c >= self.k {
                if depth == 0 {
                    self.done = true;
                    return None;
                }
                self.pop();
                continue;
            }
            self.next[depth] = c + 1;
            if depth + 1 >= self.n {
                let w = self.window(c);
                if self.used & (1 << w) != 0 {
                    continue;
                }
                self.used |= 1 << w;
            }
            self.word.push(c);
            self.next[depth + 1] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strings(k: u32, n: u32) -> Vec<String> {
        enumerate_debruijn(k, n).unwrap().map(|w| w.to_string()).collect()
    }

    #[test]
    fn canonical_sequences() {
        assert_eq!(debruijn(3, 2).unwrap().to_string(), "aabacbbcca");
        assert_eq!(debruijn(2, 1).unwrap().to_string(), "ab");
        assert_eq!(debruijn(2, 2).unwrap().to_string(), "aabba");
        assert_eq!(debruijn(1, 2).unwrap().to_string(), "aa");
        assert!(debruijn(0, 2).is_err());
        assert!(debruijn(2, 0).is_err());
    }

    #[test]
    fn canonical_sequence_is_lex_least() {
        for k in 1..=4 {
            for n in 1..=3 {
                if k == 4 && n == 3 {
                    continue;
                }
                let first = enumerate_debruijn(k, n).unwrap().next().unwrap();
                assert_eq!(debruijn(k, n).unwrap(), first, "k={k} n={n}");
            }
        }
    }

    #[test]
    fn enumeration_small_cases() {
        let all = strings(2, 2);
        assert_eq!(all, vec!["aabba", "abbaa", "baabb", "bbaab"]);
        assert_eq!(strings(1, 2), vec!["aa"]);
        assert_eq!(strings(3, 1).len(), 6);
        let k3 = strings(3, 2);
        assert!(k3.iter().all(|w| w.len() == 10));
        assert!(k3.contains(&"aabacbbcca".to_string()));
        // 24 cyclic sequences, each linearised at 9 rotations.
        assert_eq!(k3.len(), 216);
        let mut sorted = k3.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted, k3);
    }

    #[test]
    fn guard() {
        assert!(matches!(enumerate_debruijn(5, 3), Err(Error::Guard(_))));
        assert!(enumerate_debruijn(4, 3).is_ok());
        assert!(enumerate_debruijn(2, 6).is_ok());
    }
}
