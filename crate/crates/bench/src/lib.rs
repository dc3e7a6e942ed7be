//! Fixtures shared by the benchmarks.

use unambig_core::generators::{alpha_squares, shortest_succinct, thue_morphism_for_alpha};
use unambig_core::{parse_morphism, parse_pattern, Morphism, Pattern};

/// `α_m` with its unambiguous ternary morphism.
pub fn alpha_m(m: u32) -> (Pattern, Morphism) {
    (alpha_squares(m).unwrap(), thue_morphism_for_alpha(m).unwrap())
}

/// Shortest succinct pattern on `n` variables with its binary morphism.
pub fn succinct(n: u32) -> (Pattern, Morphism) {
    shortest_succinct(n).unwrap()
}

/// The running example with an ambiguous and an unambiguous morphism.
pub fn running_example() -> (Pattern, Morphism, Morphism) {
    (
        parse_pattern("1 2 3 1 3 2").unwrap(),
        parse_morphism("1=a,2=a,3=b").unwrap(),
        parse_morphism("1=a,2=ab,3=b").unwrap(),
    )
}

/// Patterns of growing length that are not fixed points.
pub fn non_fixed_points() -> Vec<Pattern> {
    ["1 2 3 4 1 4 3 2", "1 2 3 3 4 4 1 2 3 3 4 4 2", "1 1 2 3 4 2 2 4 4 3"]
        .iter()
        .map(|s| parse_pattern(s).unwrap())
        .collect()
}
