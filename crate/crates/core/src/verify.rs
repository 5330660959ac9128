//! The runnable invariant suite: every cross-check the library promises,
//! packaged as named checks that report a minimal counterexample on failure.
//! Exhaustive scopes are bounded by a configurable maximum size so the whole
//! suite stays at desk scale.

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::diagram::{build_viennot, Color, CornerKind};
use crate::matching::{
    matching_to_word, permutation_to_matching_word, strands_cross, word_to_matching, Matching,
    Permutation,
};
use crate::oracle::{
    census, coexistent_decreasing_max, enumerate_matchings, enumerate_permutations,
    enumerate_updown, longest_pattern_brute, pairwise_crossing_max,
};
use crate::partition::Partition;
use crate::schensted::{
    lds_length_brute, lis_length_brute, row_insert, rs, rs_inverse, shape_movie,
};
use crate::tableau::StandardTableau;
use crate::updown::{build_updown, is_coexistent, longest_pattern, ss_inverse, sundaram_stanley};

/// Deterministic 64-bit generator (splitmix64), used wherever the suite
/// samples rather than enumerates, so runs are reproducible across platforms.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform value in 0..n (n > 0).
    pub fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }
}

/// Uniform random permutation of {1..k} by Fisher–Yates.
pub fn random_permutation(k: usize, rng: &mut SplitMix64) -> Permutation {
    let mut word: Vec<usize> = (1..=k).collect();
    for i in (1..k).rev() {
        word.swap(i, rng.below(i + 1));
    }
    Permutation::new(word).expect("shuffled identity is a permutation")
}

/// Scales of the verification run.
#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    /// Exhaustive bound on permutation size; matchings, movies, and the
    /// census are capped at strand count min(max_k, 5)..6 as noted per check.
    pub max_k: usize,
    /// Seed for the sampled large-size checks.
    pub seed: u64,
    /// Number of sampled k = 12 permutations in the reading check.
    pub random_samples: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_k: 6,
            seed: 0x5eed,
            random_samples: 1000,
        }
    }
}

impl VerifyConfig {
    fn perm_k(&self) -> usize {
        self.max_k
    }

    fn matching_k(&self) -> usize {
        self.max_k.min(6)
    }

    fn census_k(&self) -> usize {
        self.max_k.min(5)
    }

    fn diagram_k(&self) -> usize {
        self.max_k.min(6)
    }
}

#[derive(Clone, Debug)]
pub struct CheckReport {
    pub name: &'static str,
    pub passed: bool,
    /// Empty on success; a minimal counterexample otherwise.
    pub detail: String,
}

type Check = fn(&VerifyConfig) -> Result<(), String>;

/// Every named check, in a stable order.
pub const CHECKS: &[(&str, Check)] = &[
    ("word-roundtrip", check_word_roundtrip),
    ("bent-permutations", check_bent_permutations),
    ("crossing-symmetry", check_crossing_symmetry),
    ("schensted-theorem", check_schensted_theorem),
    ("rs-roundtrip", check_rs_roundtrip),
    ("rs-inverse-symmetry", check_rs_inverse_symmetry),
    ("insertion-movie", check_insertion_movie),
    ("viennot-reading", check_viennot_reading),
    ("viennot-transpose", check_viennot_transpose),
    ("corner-coincidence", check_corner_coincidence),
    ("path-structure", check_path_structure),
    ("witness-soundness", check_witness_soundness),
    ("time-slices", check_time_slices),
    ("updown-word-roundtrip", check_updown_word_roundtrip),
    ("ss-bijection", check_ss_bijection),
    ("slice-movies", check_slice_movies),
    ("updown-movie-halves", check_updown_movie_halves),
    ("longest-pattern", check_longest_pattern),
    ("coexistence-rectangle", check_coexistence_rectangle),
    ("pattern-route-agreement", check_pattern_route_agreement),
    ("census-agreement", check_census_agreement),
];

/// Run every check serially.
pub fn run_all(cfg: &VerifyConfig) -> Vec<CheckReport> {
    CHECKS
        .iter()
        .map(|&(name, check)| report(name, check(cfg)))
        .collect()
}

/// Run the checks on a small worker pool; the report order stays stable.
pub fn run_all_parallel(cfg: &VerifyConfig, jobs: usize) -> Vec<CheckReport> {
    if jobs <= 1 {
        return run_all(cfg);
    }
    let mut slots: Vec<Option<CheckReport>> = vec![None; CHECKS.len()];
    let next = AtomicUsize::new(0);
    let results: Vec<(usize, CheckReport)> = std::thread::scope(|scope| {
        let workers: Vec<_> = (0..jobs.min(CHECKS.len()))
            .map(|_| {
                scope.spawn(|| {
                    let mut local = Vec::new();
                    loop {
                        let i = next.fetch_add(1, Ordering::Relaxed);
                        let Some(&(name, check)) = CHECKS.get(i) else { break };
                        local.push((i, report(name, check(cfg))));
                    }
                    local
                })
            })
            .collect();
        workers
            .into_iter()
            .flat_map(|h| h.join().expect("check worker panicked"))
            .collect()
    });
    for (i, r) in results {
        slots[i] = Some(r);
    }
    slots.into_iter().map(|s| s.expect("every slot filled")).collect()
}

fn report(name: &'static str, outcome: Result<(), String>) -> CheckReport {
    match outcome {
        Ok(()) => CheckReport {
            name,
            passed: true,
            detail: String::new(),
        },
        Err(detail) => CheckReport {
            name,
            passed: false,
            detail,
        },
    }
}

fn all_permutations(k_max: usize) -> impl Iterator<Item = Permutation> {
    (0..=k_max).flat_map(|k| enumerate_permutations(k).expect("bounds hold at desk scale"))
}

fn all_matchings(k_max: usize) -> impl Iterator<Item = Matching> {
    (0..=k_max).flat_map(|k| enumerate_matchings(k).expect("bounds hold at desk scale"))
}

fn check_word_roundtrip(cfg: &VerifyConfig) -> Result<(), String> {
    for m in all_matchings(cfg.max_k.min(6)) {
        let w = matching_to_word(&m);
        if word_to_matching(&w) != m {
            return Err(format!("word {w} does not return to matching {m}"));
        }
    }
    Ok(())
}

fn check_bent_permutations(cfg: &VerifyConfig) -> Result<(), String> {
    for w in all_permutations(cfg.perm_k().min(5)) {
        let k = w.len();
        let bent = Matching::new(
            (1..=k).map(|t| (t, 2 * k + 1 - w.value_at(t))).collect(),
        )
        .expect("bending pairs up all 2k points");
        if permutation_to_matching_word(&w) != matching_to_word(&bent) {
            return Err(format!("bent word of {w} differs from its matching word"));
        }
    }
    Ok(())
}

fn check_crossing_symmetry(cfg: &VerifyConfig) -> Result<(), String> {
    for m in all_matchings(cfg.matching_k().min(4)) {
        let k = m.strand_count();
        for i in 1..=k {
            for j in 1..=k {
                if i == j {
                    continue;
                }
                if strands_cross(&m, i, j) != strands_cross(&m, j, i) {
                    return Err(format!("crossing of {i},{j} asymmetric in {m}"));
                }
            }
        }
    }
    Ok(())
}

fn check_schensted_theorem(cfg: &VerifyConfig) -> Result<(), String> {
    for w in all_permutations(cfg.perm_k()) {
        let (_, _, shape) = rs(&w);
        let lds = lds_length_brute(&w);
        let lis = lis_length_brute(&w);
        if shape.rows() != lds {
            return Err(format!("{w}: rows {} vs brute LDS {lds}", shape.rows()));
        }
        if shape.columns() != lis {
            return Err(format!("{w}: columns {} vs brute LIS {lis}", shape.columns()));
        }
    }
    Ok(())
}

fn check_rs_roundtrip(cfg: &VerifyConfig) -> Result<(), String> {
    for w in all_permutations(cfg.perm_k()) {
        let (p, q, _) = rs(&w);
        match rs_inverse(&p, &q) {
            Ok(back) if back == w => {}
            Ok(back) => return Err(format!("rs_inverse(rs({w})) = {back}")),
            Err(e) => return Err(format!("rs_inverse failed on {w}: {e}")),
        }
    }
    Ok(())
}

fn check_rs_inverse_symmetry(cfg: &VerifyConfig) -> Result<(), String> {
    for w in all_permutations(cfg.diagram_k()) {
        let (p, q, shape) = rs(&w);
        let (pi, qi, shape_i) = rs(&w.inverse());
        if pi != q || qi != p || shape_i != shape {
            return Err(format!("rs({w}⁻¹) is not (Q, P, λ)"));
        }
    }
    Ok(())
}

fn check_insertion_movie(cfg: &VerifyConfig) -> Result<(), String> {
    for w in all_permutations(cfg.diagram_k()) {
        let (_, q, _) = rs(&w);
        let movie = shape_movie(&q).map_err(|e| e.to_string())?;
        let mut p = StandardTableau::empty();
        for (t, &v) in w.word().iter().enumerate() {
            p = row_insert(&p, v).expect("distinct values").tableau;
            if p.shape() != movie[t + 1] {
                return Err(format!(
                    "{w}: P_{} has shape {} but Q records {}",
                    t + 1,
                    p.shape(),
                    movie[t + 1]
                ));
            }
        }
    }
    Ok(())
}

fn check_viennot_reading(cfg: &VerifyConfig) -> Result<(), String> {
    let compare = |w: &Permutation| -> Result<(), String> {
        let d = build_viennot(w);
        let (p, q, _) = rs(w);
        if d.read_p() != p {
            return Err(format!("{w}: read_P differs from bumping P"));
        }
        if d.read_q() != q {
            return Err(format!("{w}: read_Q differs from bumping Q"));
        }
        Ok(())
    };
    for w in all_permutations(cfg.diagram_k()) {
        compare(&w)?;
    }
    let mut rng = SplitMix64::new(cfg.seed);
    for _ in 0..cfg.random_samples {
        compare(&random_permutation(12, &mut rng))?;
    }
    Ok(())
}

fn check_viennot_transpose(cfg: &VerifyConfig) -> Result<(), String> {
    for w in all_permutations(cfg.diagram_k()) {
        if build_viennot(&w).transpose() != build_viennot(&w.inverse()) {
            return Err(format!("transpose of diagram({w}) is not diagram(w⁻¹)"));
        }
    }
    Ok(())
}

fn check_corner_coincidence(cfg: &VerifyConfig) -> Result<(), String> {
    for w in all_permutations(cfg.diagram_k()) {
        let d = build_viennot(&w);
        let Some(top) = d.max_color() else { continue };
        let dots: std::collections::BTreeSet<_> = d.dots().iter().copied().collect();
        let c1_outer: std::collections::BTreeSet<_> = d
            .corners(Color::FIRST)
            .into_iter()
            .filter(|c| c.kind == CornerKind::Outer)
            .map(|c| c.at)
            .collect();
        if c1_outer != dots {
            return Err(format!("{w}: c1 outer corners differ from the dot set"));
        }
        for ci in 1..top.index() {
            let inner: std::collections::BTreeSet<_> = d
                .corners(Color::new(ci).expect("positive"))
                .into_iter()
                .filter(|c| c.kind == CornerKind::Inner)
                .map(|c| c.at)
                .collect();
            let outer_up: std::collections::BTreeSet<_> = d
                .corners(Color::new(ci + 1).expect("positive"))
                .into_iter()
                .filter(|c| c.kind == CornerKind::Outer)
                .map(|c| c.at)
                .collect();
            if inner != outer_up {
                return Err(format!(
                    "{w}: c{} inner corners differ from c{} outer corners",
                    ci,
                    ci + 1
                ));
            }
        }
    }
    Ok(())
}

fn check_path_structure(cfg: &VerifyConfig) -> Result<(), String> {
    for w in all_permutations(cfg.diagram_k().min(5)) {
        let d = build_viennot(&w);
        let Some(top) = d.max_color() else { continue };
        for ci in 1..=top.index() {
            let c = Color::new(ci).expect("positive");
            let is = |m: &crate::diagram::SegmentMap, key: (usize, usize)| m.get(&key) == Some(&c);
            let mut points = std::collections::BTreeSet::new();
            for (&(t, b), &col) in d.hsegs() {
                if col == c {
                    points.insert((t, b));
                    points.insert((t + 1, b));
                }
            }
            for (&(t, b), &col) in d.vsegs() {
                if col == c {
                    points.insert((t, b));
                    points.insert((t, b + 1));
                }
            }
            let mut starts = 0usize;
            for &(t, b) in &points {
                let incoming = usize::from(is(d.vsegs(), (t, b)))
                    + usize::from(t > 1 && is(d.hsegs(), (t - 1, b)));
                let outgoing = usize::from(b > 1 && is(d.vsegs(), (t, b - 1)))
                    + usize::from(is(d.hsegs(), (t, b)));
                if incoming > 1 || outgoing > 1 {
                    return Err(format!(
                        "{w}: color {c} paths meet at ({t},{b})"
                    ));
                }
                if outgoing == 1 && incoming == 0 {
                    starts += 1;
                }
            }
            if starts != d.path_count(c) {
                return Err(format!(
                    "{w}: {starts} path starts vs {} top entries of {c}",
                    d.path_count(c)
                ));
            }
        }
    }
    Ok(())
}

fn check_witness_soundness(cfg: &VerifyConfig) -> Result<(), String> {
    for w in all_permutations(cfg.diagram_k()) {
        if w.is_empty() {
            continue;
        }
        let d = build_viennot(&w);
        let (_, _, shape) = rs(&w);

        let top = d.max_color().expect("nonempty diagram").index();
        if top != shape.rows() {
            return Err(format!("{w}: max color {top} vs {} rows", shape.rows()));
        }
        if d.path_count(Color::FIRST) != shape.columns() {
            return Err(format!(
                "{w}: {} c1 paths vs {} columns",
                d.path_count(Color::FIRST),
                shape.columns()
            ));
        }

        let times = d.lds_extract().map_err(|e| e.to_string())?;
        let values: Vec<usize> = times.iter().map(|&t| w.value_at(t)).collect();
        if times.len() != shape.rows()
            || !times.windows(2).all(|x| x[0] < x[1])
            || !values.windows(2).all(|x| x[0] > x[1])
        {
            return Err(format!("{w}: lds witness {times:?} unsound"));
        }

        let times = d.lis_extract().map_err(|e| e.to_string())?;
        let values: Vec<usize> = times.iter().map(|&t| w.value_at(t)).collect();
        if times.len() != shape.columns()
            || !times.windows(2).all(|x| x[0] < x[1])
            || !values.windows(2).all(|x| x[0] < x[1])
        {
            return Err(format!("{w}: lis witness {times:?} unsound"));
        }
    }
    Ok(())
}

fn check_time_slices(cfg: &VerifyConfig) -> Result<(), String> {
    for w in all_permutations(cfg.diagram_k()) {
        let d = build_viennot(&w);
        let mut p = StandardTableau::empty();
        for s in 0..=w.len() {
            if s > 0 {
                p = row_insert(&p, w.value_at(s)).expect("distinct values").tableau;
            }
            let (ps, shape) = d.time_slice(s).map_err(|e| e.to_string())?;
            if ps != p || shape != p.shape() {
                return Err(format!("{w}: slice at {s} differs from {s}-step bumping"));
            }
        }
    }
    Ok(())
}

fn check_updown_word_roundtrip(cfg: &VerifyConfig) -> Result<(), String> {
    for m in all_matchings(cfg.matching_k()) {
        let w = matching_to_word(&m);
        let d = build_updown(&w);
        if d.word() != w {
            return Err(format!("diagram of {w} reads back a different word"));
        }
    }
    Ok(())
}

fn check_ss_bijection(cfg: &VerifyConfig) -> Result<(), String> {
    for k in 0..=cfg.matching_k() {
        let mut matching_count = 0u64;
        for m in enumerate_matchings(k).expect("desk scale") {
            matching_count += 1;
            let w = matching_to_word(&m);
            let ud = sundaram_stanley(&w).map_err(|e| e.to_string())?;
            let back = ss_inverse(&ud).map_err(|e| e.to_string())?;
            if back != w {
                return Err(format!("ss_inverse(ss({w})) = {back}"));
            }
        }
        let mut movie_count = 0u64;
        for ud in enumerate_updown(k, None).expect("desk scale") {
            movie_count += 1;
            let w = ss_inverse(&ud).map_err(|e| e.to_string())?;
            let forward = sundaram_stanley(&w).map_err(|e| e.to_string())?;
            if forward != ud {
                return Err(format!("ss(ss_inverse) moved a {k}-strand movie"));
            }
        }
        if matching_count != movie_count {
            return Err(format!(
                "k = {k}: {matching_count} matchings vs {movie_count} movies"
            ));
        }
    }
    Ok(())
}

fn check_slice_movies(cfg: &VerifyConfig) -> Result<(), String> {
    for m in all_matchings(cfg.matching_k()) {
        let w = matching_to_word(&m);
        let d = build_updown(&w);
        let by_slices = d.slice_movie();
        let by_bumping = sundaram_stanley(&d.word()).map_err(|e| e.to_string())?;
        if by_slices != by_bumping {
            return Err(format!("{w}: slice movie differs from bumping movie"));
        }
    }
    Ok(())
}

fn check_updown_movie_halves(cfg: &VerifyConfig) -> Result<(), String> {
    for w in all_permutations(cfg.perm_k().min(5)) {
        let k = w.len();
        let ud = sundaram_stanley(&permutation_to_matching_word(&w)).map_err(|e| e.to_string())?;
        let (p, q, _) = rs(&w);
        let q_movie = shape_movie(&q).map_err(|e| e.to_string())?;
        let p_movie = shape_movie(&p).map_err(|e| e.to_string())?;
        if ud.shapes()[..=k] != q_movie[..] {
            return Err(format!("{w}: rising half of the movie is not Q's movie"));
        }
        let mut tail: Vec<Partition> = ud.shapes()[k..].to_vec();
        tail.reverse();
        if tail != p_movie {
            return Err(format!("{w}: falling half of the movie is not P's movie"));
        }
    }
    Ok(())
}

fn check_longest_pattern(cfg: &VerifyConfig) -> Result<(), String> {
    for m in all_matchings(cfg.matching_k()) {
        if m.is_empty() {
            continue;
        }
        let w = matching_to_word(&m);
        let witness = longest_pattern(&m).map_err(|e| e.to_string())?;
        let brute = longest_pattern_brute(&m).map_err(|e| e.to_string())?;
        let movie_rows = sundaram_stanley(&w).map_err(|e| e.to_string())?.max_rows();
        if witness.len() != brute || witness.len() != movie_rows {
            return Err(format!(
                "{m}: witness {} vs brute {brute} vs movie rows {movie_rows}",
                witness.len()
            ));
        }
        if is_coexistent(&w, &witness.times) != Ok(true) {
            return Err(format!("{m}: witness times {:?} not coexistent", witness.times));
        }
        for (i, &a) in witness.strands.iter().enumerate() {
            for &b in &witness.strands[i + 1..] {
                if strands_cross(&m, a, b) != Ok(true) {
                    return Err(format!("{m}: witness strands {a},{b} do not cross"));
                }
            }
        }
    }
    Ok(())
}

fn check_coexistence_rectangle(cfg: &VerifyConfig) -> Result<(), String> {
    for m in all_matchings(cfg.matching_k()) {
        let d = build_updown(&matching_to_word(&m));
        let Some(top) = d.max_color() else { continue };
        for ci in 1..=top.index() {
            for corner in d.corners(Color::new(ci).expect("positive")) {
                let (t, b) = corner.at;
                if let Some(&(ct, cb)) =
                    d.crosses().iter().find(|&&(ct, cb)| ct <= t && cb <= b)
                {
                    return Err(format!(
                        "{m}: × at ({ct},{cb}) inside the rectangle of corner ({t},{b})"
                    ));
                }
            }
        }
    }
    Ok(())
}

fn check_pattern_route_agreement(cfg: &VerifyConfig) -> Result<(), String> {
    for m in all_matchings(cfg.matching_k()) {
        let a = pairwise_crossing_max(&m);
        let b = coexistent_decreasing_max(&matching_to_word(&m));
        if a != b {
            return Err(format!("{m}: crossing max {a} vs coexistent max {b}"));
        }
    }
    Ok(())
}

fn check_census_agreement(cfg: &VerifyConfig) -> Result<(), String> {
    let catalan = [1u64, 1, 2, 5, 14, 42];
    #[allow(clippy::needless_range_loop)]
    for k in 0..=cfg.census_k() {
        for n in 1..=5 {
            let row = census(k, n).map_err(|e| e.to_string())?;
            if !row.agree() {
                return Err(format!("census disagrees: {}", row.csv_line()));
            }
            if n == 1 && row.count_avoiding != catalan[k] {
                return Err(format!(
                    "census(k={k}, n=1) = {} but {} matchings avoid 2-patterns",
                    row.count_avoiding, catalan[k]
                ));
            }
        }
    }
    Ok(())
}
