//! Robinson–Schensted insertion, Viennot's geometric construction, its
//! up-down extension for perfect matchings, and the Sundaram–Stanley
//! bijection between matchings and up-down tableaux — with witness-extracting
//! algorithms for longest decreasing subsequences and longest patterns, all
//! cross-checked against independent brute-force oracles.
//!
//! Everything is a plain immutable value and every operation is a pure
//! deterministic function, so values can be shared freely across threads.
//! Positions, values, and grid coordinates are 1-based throughout; 0 is
//! reserved.
//!
//! The main entry points:
//!
//! - [`rs`] / [`rs_inverse`]: the correspondence by row bumping.
//! - [`build_viennot`]: the colored-grid timeline of the bumping run, from
//!   which [`ViennotDiagram::read_p`], [`ViennotDiagram::lds_extract`], and
//!   friends read tableaux and subsequence witnesses geometrically.
//! - [`build_updown`] / [`sundaram_stanley`] / [`ss_inverse`]: the matching
//!   analogue and the bijection with up-down tableaux.
//! - [`longest_pattern`]: a maximal set of pairwise-crossing strands.
//! - [`oracle`]: exhaustive enumerators and brute-force reimplementations
//!   used to validate all of the above, and [`verify`] packages the full
//!   cross-check suite.

pub mod diagram;
pub mod error;
pub mod matching;
pub mod oracle;
pub mod partition;
pub mod render;
pub mod schensted;
pub mod tableau;
pub mod updown;
pub mod verify;

pub use diagram::{build_viennot, Color, Corner, CornerKind, ViennotDiagram};
pub use error::{Error, Result};
pub use matching::{
    matching_to_word, permutation_to_matching_word, strands_cross, word_to_matching, Matching,
    MatchingWord, Permutation, Token,
};
pub use partition::{BoxStep, Partition, UpDownTableau};
pub use schensted::{
    lds_length_brute, lis_length_brute, reverse_insert, row_insert, rs, rs_inverse,
    InsertionResult,
};
pub use tableau::StandardTableau;
pub use updown::{
    build_updown, is_coexistent, longest_pattern, ss_inverse, sundaram_stanley, PatternWitness,
    UpDownDiagram,
};
