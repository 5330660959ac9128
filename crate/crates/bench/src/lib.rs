//! Deterministic input generators shared by the benchmarks.

use viennot::verify::{random_permutation, SplitMix64};
use viennot::{Matching, MatchingWord, Permutation};

pub fn permutation(k: usize, seed: u64) -> Permutation {
    random_permutation(k, &mut SplitMix64::new(seed))
}

/// Uniform random matching of {1..2k}: shuffle the points and pair them off.
pub fn matching(k: usize, seed: u64) -> Matching {
    let mut rng = SplitMix64::new(seed);
    let mut points: Vec<usize> = (1..=2 * k).collect();
    for i in (1..points.len()).rev() {
        points.swap(i, rng.below(i + 1));
    }
    let pairs = points.chunks(2).map(|c| (c[0], c[1])).collect();
    Matching::new(pairs).expect("paired-off shuffle is a matching")
}

pub fn matching_word(k: usize, seed: u64) -> MatchingWord {
    viennot::matching_to_word(&matching(k, seed))
}
