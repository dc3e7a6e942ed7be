//! Ambiguity of 1-uniform morphisms with respect to patterns.
//!
//! A morphism `σ` is *ambiguous* with respect to a pattern `α` if another
//! morphism `τ` maps `α` to the same word. This crate decides ambiguity and
//! fixed-point status exactly by budgeted exhaustive search, checks the
//! structural conditions that settle it cheaply, constructs the known
//! families of patterns with unambiguous 1-uniform morphisms, and sweeps
//! canonical patterns to collect evidence for the open cases.
//!
//! ```
//! use unambig_core::{is_ambiguous, parse_morphism, parse_pattern, Budget, SearchMode};
//!
//! let alpha = parse_pattern("1 2 3 1 3 2").unwrap();
//! let sigma = parse_morphism("1=a,2=a,3=b").unwrap();
//! let verdict = is_ambiguous(&sigma, &alpha, SearchMode::ERASING, Budget::default()).unwrap();
//! assert!(verdict.is_ambiguous());
//! ```

pub mod conditions;
mod error;
pub mod explorer;
pub mod generators;
pub mod morphism;
pub mod solver;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
pub use morphism::{delta_i, parse_morphism, sigma_ij, Morphism, MorphismClass};
pub use solver::{
    enumerate_preimages, find_alternative, is_ambiguous, is_fixed_point, Ambiguity, Budget, FixedPoint,
    FixedPointWitness, Search, SearchMode, Witness,
};
pub use words::{
    is_square_free, parse_pattern, parse_word, Alphabet, Letter, Neighbour, NeighbourhoodSets, Pattern, Var, Word,
};
