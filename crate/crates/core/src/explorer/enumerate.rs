use crate::error::{Error, Result};
use crate::words::{Pattern, Var};

/// Longest pattern length accepted by [`enumerate_canonical_patterns`].
pub const MAX_ENUM_LENGTH: usize = 16;

/// Filters applied while enumerating canonical patterns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PatternConstraints {
    pub min_vars: usize,
    pub max_vars: Option<usize>,
    /// Every variable occurs exactly this often.
    pub uniform_multiplicity: Option<usize>,
    /// Every variable occurs at least this often.
    pub min_multiplicity: usize,
}

impl Default for PatternConstraints {
    fn default() -> Self {
        PatternConstraints {
            min_vars: 0,
            max_vars: None,
            uniform_multiplicity: None,
            min_multiplicity: 1,
        }
    }
}

impl PatternConstraints {
    pub fn uniform(m: usize) -> Self {
        PatternConstraints {
            uniform_multiplicity: Some(m),
            ..Default::default()
        }
    }

    pub fn with_min_vars(self, min_vars: usize) -> Self {
        PatternConstraints { min_vars, ..self }
    }

    pub fn with_max_vars(self, max_vars: usize) -> Self {
        PatternConstraints {
            max_vars: Some(max_vars),
            ..self
        }
    }

    pub fn with_min_multiplicity(self, min_multiplicity: usize) -> Self {
        PatternConstraints {
            min_multiplicity,
            ..self
        }
    }

    fn need(&self) -> usize {
        self.uniform_multiplicity.unwrap_or(self.min_multiplicity).max(1)
    }
}

/// All canonical patterns of the given length meeting `constraints`, in
/// lexicographic order. Canonical patterns are exactly the restricted growth
/// strings, so each renaming class is produced once.
pub fn enumerate_canonical_patterns(length: usize, constraints: PatternConstraints) -> Result<CanonicalPatterns> {
    enumerate_canonical_patterns_unguarded(length, constraints, MAX_ENUM_LENGTH)
}

/// As [`enumerate_canonical_patterns`] with an explicit length guard.
pub fn enumerate_canonical_patterns_unguarded(
    length: usize,
    constraints: PatternConstraints,
    guard: usize,
) -> Result<CanonicalPatterns> {
    if length > guard {
        return Err(Error::Guard(format!("pattern length {length} exceeds {guard}")));
    }
    Ok(CanonicalPatterns {
        length,
        constraints,
        seq: Vec::with_capacity(length),
        counts: Vec::new(),
        next: vec![1; length + 1],
        done: false,
    })
}

pub struct CanonicalPatterns {
    length: usize,
    constraints: PatternConstraints,
    seq: Vec<u32>,
    /// Occurrences so far of variable `v` at index `v - 1`.
    counts: Vec<usize>,
    next: Vec<u32>,
    done: bool,
}

impl CanonicalPatterns {
    fn feasible(&self) -> bool {
        let c = &self.constraints;
        let need = c.need();
        if let Some(m) = c.uniform_multiplicity {
            if self.counts.iter().any(|&n| n > m) {
                return false;
            }
        }
        if c.max_vars.is_some_and(|max| self.counts.len() > max) {
            return false;
        }
        let deficit: usize = self.counts.iter().map(|&n| need.saturating_sub(n)).sum();
        let missing_vars = c.min_vars.saturating_sub(self.counts.len());
        deficit + missing_vars * need <= self.length - self.seq.len()
    }

    fn push(&mut self, v: u32) {
        self.seq.push(v);
        if v as usize > self.counts.len() {
            self.counts.push(0);
        }
        self.counts[v as usize - 1] += 1;
    }

    fn pop(&mut self) {
        let v = self.seq.pop().expect("non-empty") as usize;
        self.counts[v - 1] -= 1;
        if self.counts[v - 1] == 0 {
            self.counts.pop();
        }
    }

    fn emit(&self) -> Pattern {
        Pattern::new(self.seq.iter().map(|&v| Var::new(v).expect("positive")).collect())
    }
}

impl Iterator for CanonicalPatterns {
    type Item = Pattern;

    fn next(&mut self) -> Option<Pattern> {
        if self.done {
            return None;
        }
        if self.length == 0 {
            self.done = true;
            return self.feasible().then(Pattern::empty);
        }
        loop {
            let depth = self.seq.len();
            if depth == self.length {
                let out = self.emit();
                self.pop();
                return Some(out);
            }
            let c = self.next[depth];
            if c as usize > self.counts.len() + 1 {
                if depth == 0 {
                    self.done = true;
                    return None;
                }
                self.pop();
                continue;
            }
            self.next[depth] = c + 1;
            self.push(c);
            if !self.feasible() {
                self.pop();
                continue;
            }
            self.next[depth + 1] = 1;
        }
    }
}
