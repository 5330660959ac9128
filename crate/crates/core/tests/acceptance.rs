//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! and enforcing its runtime budget. Exhaustive scopes reuse the named checks
//! from `viennot::verify`, which is also what `viennot verify` runs.

use std::time::{Duration, Instant};

use viennot::oracle::census;
use viennot::verify::{self, VerifyConfig};
use viennot::{
    rs, ss_inverse, sundaram_stanley, MatchingWord, Partition, Permutation, StandardTableau,
};

fn perm(word: &[usize]) -> Permutation {
    Permutation::new(word.to_vec()).unwrap()
}

fn json(t: &StandardTableau) -> String {
    serde_json::to_string(t).unwrap()
}

fn config(max_k: usize) -> VerifyConfig {
    VerifyConfig {
        max_k,
        seed: 0x5eed,
        random_samples: 1000,
    }
}

/// A named verify check to run at a given max_k.
type ScopedCheck = (
    &'static str,
    fn(&VerifyConfig) -> Result<(), String>,
    usize,
);

fn run_checks(criterion: usize, label: &str, budget: Duration, checks: &[ScopedCheck]) {
    let start = Instant::now();
    let mut failure = None;
    for &(name, check, max_k) in checks {
        if let Err(detail) = check(&config(max_k)) {
            failure = Some(format!("{name}: {detail}"));
            break;
        }
    }
    let elapsed = start.elapsed();
    report(criterion, label, failure, elapsed, budget);
}

fn report(
    criterion: usize,
    label: &str,
    failure: Option<String>,
    elapsed: Duration,
    budget: Duration,
) {
    let ok = failure.is_none() && elapsed < budget;
    println!(
        "criterion {criterion:2} ({label}): {} [{elapsed:.2?}]",
        if ok { "pass" } else { "FAIL" }
    );
    if let Some(detail) = failure {
        panic!("criterion {criterion} failed: {detail}");
    }
    assert!(
        elapsed < budget,
        "criterion {criterion} exceeded its {budget:?} budget: {elapsed:?}"
    );
}

fn check_named(name: &str) -> fn(&VerifyConfig) -> Result<(), String> {
    verify::CHECKS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|&(_, f)| f)
        .unwrap_or_else(|| panic!("no check named {name}"))
}

#[test]
fn criterion_01_rs_fixtures() {
    let w1 = perm(&[2, 9, 1, 15, 4, 7, 13, 18, 11, 19, 5, 14, 3, 10, 6, 17, 8, 16, 12]);
    let w2 = perm(&[19, 10, 1, 8, 18, 12, 13, 11, 16, 14, 3, 9, 7, 4, 6, 2, 15, 17, 5]);

    let start = Instant::now();
    let (p1, q1, _) = rs(&w1);
    let (p2, q2, _) = rs(&w2);
    let elapsed = start.elapsed();

    let mut failure = None;
    let expected = [
        (&p1, "[[1,3,5,6,8,12],[2,4,10,14,16],[7,11,17,19],[9,13,18],[15]]"),
        (&q1, "[[1,2,4,7,8,10],[3,5,6,12,16],[9,14,17,18],[11,15,19],[13]]"),
        (
            &p2,
            "[[1,2,4,5,14,15,17],[3,6,13],[7,9,16],[8,11],[10],[12],[18],[19]]",
        ),
        (
            &q2,
            "[[1,4,5,7,9,17,18],[2,6,10],[3,12,15],[8,19],[11],[13],[14],[16]]",
        ),
    ];
    for (tab, want) in expected {
        if json(tab) != want {
            failure = Some(format!("got {}, want {want}", json(tab)));
            break;
        }
    }
    report(1, "rs fixtures", failure, elapsed, Duration::from_millis(1));
}

#[test]
fn criterion_02_sundaram_stanley_fixture() {
    let word =
        MatchingWord::from_signed(&[7, 8, 6, 5, -8, 3, -7, 4, 1, -6, 2, -5, -4, -3, -2, -1])
            .unwrap();
    let movie: Vec<Partition> = [
        &[][..],
        &[1],
        &[2],
        &[2, 1],
        &[2, 1, 1],
        &[1, 1, 1],
        &[1, 1, 1, 1],
        &[1, 1, 1],
        &[2, 1, 1],
        &[2, 1, 1, 1],
        &[2, 1, 1],
        &[2, 2, 1],
        &[2, 2],
        &[2, 1],
        &[2],
        &[1],
        &[],
    ]
    .iter()
    .map(|p| Partition::new(p.to_vec()).unwrap())
    .collect();

    let start = Instant::now();
    let ud = sundaram_stanley(&word).unwrap();
    let back = ss_inverse(&ud).unwrap();
    let elapsed = start.elapsed();

    let mut failure = None;
    if ud.shapes() != movie.as_slice() {
        failure = Some(format!("movie mismatch: {:?}", ud.shapes()));
    } else if back != word {
        failure = Some(format!("inverse returned {back}"));
    }
    report(
        2,
        "17-frame movie and inverse",
        failure,
        elapsed,
        Duration::from_millis(1),
    );
}

#[test]
fn criterion_03_subsequence_theorem() {
    run_checks(
        3,
        "rows/columns = brute LDS/LIS, k <= 7",
        Duration::from_secs(10),
        &[("schensted-theorem", check_named("schensted-theorem"), 7)],
    );
}

#[test]
fn criterion_04_viennot_equivalence() {
    run_checks(
        4,
        "read_P/read_Q = rs, k <= 6 plus 1000 random k = 12",
        Duration::from_secs(10),
        &[("viennot-reading", check_named("viennot-reading"), 6)],
    );
}

#[test]
fn criterion_05_witness_soundness() {
    run_checks(
        5,
        "extracted witnesses sound, k <= 6 and 2k <= 10",
        Duration::from_secs(30),
        &[
            ("witness-soundness", check_named("witness-soundness"), 6),
            ("longest-pattern", check_named("longest-pattern"), 5),
        ],
    );
}

#[test]
fn criterion_06_bijection_theorem() {
    run_checks(
        6,
        "sundaram_stanley and ss_inverse mutually inverse, counts agree, k <= 5",
        Duration::from_secs(30),
        &[("ss-bijection", check_named("ss-bijection"), 5)],
    );
}

#[test]
fn criterion_07_pattern_theorem() {
    run_checks(
        7,
        "longest pattern = movie rows = brute, 2k <= 10",
        Duration::from_secs(60),
        &[("longest-pattern", check_named("longest-pattern"), 5)],
    );
}

/// Extended run at 2k = 12 (10 395 matchings); slower, so opt-in.
#[test]
#[ignore]
fn criterion_07_extended_2k12() {
    run_checks(
        7,
        "longest pattern = movie rows = brute, 2k <= 12",
        Duration::from_secs(600),
        &[("longest-pattern", check_named("longest-pattern"), 6)],
    );
}

#[test]
fn criterion_08_census_agreement() {
    let start = Instant::now();
    let mut failure = check_named("census-agreement")(&config(5)).err();
    if failure.is_none() {
        let catalan = [1u64, 2, 5, 14, 42];
        for k in 1..=5usize {
            let row = census(k, 1).unwrap();
            if row.count_avoiding != catalan[k - 1] || row.count_ud_bounded != catalan[k - 1] {
                failure = Some(format!("(k={k}, n=1) gave {}", row.csv_line()));
                break;
            }
        }
    }
    let elapsed = start.elapsed();
    report(
        8,
        "pattern-avoiding counts = row-bounded movie counts, k <= 5, n <= 5",
        failure,
        elapsed,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_09_symmetry() {
    run_checks(
        9,
        "diagram transpose = diagram of inverse, rs(w^-1) = (Q,P), k <= 6",
        Duration::from_secs(10),
        &[
            ("viennot-transpose", check_named("viennot-transpose"), 6),
            ("rs-inverse-symmetry", check_named("rs-inverse-symmetry"), 6),
        ],
    );
}

#[test]
fn criterion_10_slice_consistency() {
    run_checks(
        10,
        "slice movies = bumping movies, 2k <= 10 and k <= 6",
        Duration::from_secs(30),
        &[
            ("slice-movies", check_named("slice-movies"), 5),
            ("time-slices", check_named("time-slices"), 6),
        ],
    );
}
