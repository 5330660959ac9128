//! Brute-force reference implementations and exhaustive enumerators, kept
//! deliberately independent of the insertion and diagram machinery so they
//! can vouch for it. Counting is always by enumeration, never by closed
//! formula.

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::error::{Error, Result};
use crate::matching::{matching_to_word, strands_cross, Matching, MatchingWord, Permutation};
use crate::partition::{Partition, UpDownTableau};

/// Configured bounds for the enumerators. The defaults keep every stream at
/// desk scale; raise them explicitly for longer runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest k accepted by [`enumerate_permutations`] (default 9).
    pub max_permutation_size: usize,
    /// Largest 2k accepted by the matching enumerator and the brute-force
    /// pattern search (default 14).
    pub max_matching_points: usize,
    /// Largest 2k accepted by [`enumerate_updown`] (default 14).
    pub max_movie_steps: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_permutation_size: 9,
            max_matching_points: 14,
            max_movie_steps: 14,
        }
    }
}

/// All k! permutations in lexicographic order.
pub fn enumerate_permutations(k: usize) -> Result<Permutations> {
    enumerate_permutations_limited(k, Limits::default())
}

pub fn enumerate_permutations_limited(k: usize, limits: Limits) -> Result<Permutations> {
    if k > limits.max_permutation_size {
        return Err(Error::SizeLimit {
            what: "permutation size k",
            got: k,
            limit: limits.max_permutation_size,
        });
    }
    Ok(Permutations {
        current: Some((1..=k).collect()),
    })
}

pub struct Permutations {
    current: Option<Vec<usize>>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let mut word = self.current.take()?;
        let item = Permutation::new(word.clone()).expect("enumerator emits valid permutations");
        if next_permutation(&mut word) {
            self.current = Some(word);
        }
        Some(item)
    }
}

fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let Some(i) = (0..a.len() - 1).rfind(|&i| a[i] < a[i + 1]) else {
        return false;
    };
    let j = a.iter().rposition(|&x| x > a[i]).expect("suffix has a larger entry");
    a.swap(i, j);
    a[i + 1..].reverse();
    true
}

/// All (2k−1)!! perfect matchings of {1..2k} in canonical order: the smallest
/// free point is paired with each larger point in turn, recursively.
pub fn enumerate_matchings(k: usize) -> Result<Matchings> {
    enumerate_matchings_limited(k, Limits::default())
}

pub fn enumerate_matchings_limited(k: usize, limits: Limits) -> Result<Matchings> {
    if 2 * k > limits.max_matching_points {
        return Err(Error::SizeLimit {
            what: "matching points 2k",
            got: 2 * k,
            limit: limits.max_matching_points,
        });
    }
    Ok(Matchings {
        inner: Pairings::new((1..=2 * k).collect()),
    })
}

pub struct Matchings {
    inner: Pairings,
}

impl Iterator for Matchings {
    type Item = Matching;

    fn next(&mut self) -> Option<Matching> {
        self.inner
            .next()
            .map(|pairs| Matching::new(pairs).expect("enumerator emits valid matchings"))
    }
}

/// Lazy odometer over the pairings of an arbitrary ground set: level d pairs
/// the smallest free point with the choice[d]-th larger free point.
pub(crate) struct Pairings {
    points: Vec<usize>,
    choice: Vec<usize>,
    started: bool,
    done: bool,
}

impl Pairings {
    pub fn new(points: Vec<usize>) -> Self {
        debug_assert!(points.len().is_multiple_of(2));
        debug_assert!(points.windows(2).all(|w| w[0] < w[1]));
        let k = points.len() / 2;
        Pairings {
            points,
            choice: vec![0; k],
            started: false,
            done: false,
        }
    }

    fn build(&self) -> Vec<(usize, usize)> {
        let mut free = self.points.clone();
        let mut pairs = Vec::with_capacity(self.choice.len());
        for &c in &self.choice {
            let a = free.remove(0);
            let b = free.remove(c);
            pairs.push((a, b));
        }
        pairs
    }
}

impl Iterator for Pairings {
    type Item = Vec<(usize, usize)>;

    fn next(&mut self) -> Option<Vec<(usize, usize)>> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.build());
        }
        let n = self.points.len();
        for d in (0..self.choice.len()).rev() {
            // After pairing off d earlier levels, 2(k−d) points remain and the
            // smallest has 2(k−d)−1 possible partners.
            let options = n - 2 * d - 1;
            if self.choice[d] + 1 < options {
                self.choice[d] += 1;
                self.choice[d + 1..].fill(0);
                return Some(self.build());
            }
        }
        self.done = true;
        None
    }
}

/// All up-down movies of 2k steps from ∅ back to ∅, optionally with every
/// shape bounded to `max_rows` rows, in a fixed depth-first order.
pub fn enumerate_updown(k: usize, max_rows: Option<usize>) -> Result<UpDownMovies> {
    enumerate_updown_limited(k, max_rows, Limits::default())
}

pub fn enumerate_updown_limited(
    k: usize,
    max_rows: Option<usize>,
    limits: Limits,
) -> Result<UpDownMovies> {
    if 2 * k > limits.max_movie_steps {
        return Err(Error::SizeLimit {
            what: "movie steps 2k",
            got: 2 * k,
            limit: limits.max_movie_steps,
        });
    }
    Ok(UpDownMovies {
        steps: 2 * k,
        max_rows,
        path: Vec::new(),
        pending: Vec::new(),
        done: false,
    })
}

pub struct UpDownMovies {
    steps: usize,
    max_rows: Option<usize>,
    path: Vec<Partition>,
    pending: Vec<Vec<Partition>>,
    done: bool,
}

impl UpDownMovies {
    /// Shapes reachable from `shape` at step s that can still shrink back to
    /// ∅ within the remaining steps.
    fn successors(&self, s: usize, shape: &Partition) -> Vec<Partition> {
        let remaining = self.steps - (s + 1);
        let mut out = Vec::new();
        for row in shape.removable_rows() {
            out.push(shape.with_box_removed(row).expect("removable row"));
        }
        if shape.size() < remaining {
            for row in shape.addable_rows() {
                if self.max_rows.is_some_and(|m| row > m) {
                    continue;
                }
                out.push(shape.with_box_added(row).expect("addable row"));
            }
        }
        // Popped from the back, so reverse for a stable small-to-large order.
        out.reverse();
        out
    }
}

impl Iterator for UpDownMovies {
    type Item = UpDownTableau;

    fn next(&mut self) -> Option<UpDownTableau> {
        if self.done {
            return None;
        }
        if self.path.is_empty() {
            self.path.push(Partition::empty());
            if self.steps == 0 {
                self.done = true;
                return Some(
                    UpDownTableau::new(self.path.clone()).expect("trivial movie is valid"),
                );
            }
            let first = self.successors(0, &Partition::empty());
            self.pending.push(first);
        }
        loop {
            let d = self.path.len() - 1;
            if let Some(shape) = self.pending[d].pop() {
                self.path.push(shape);
                if self.path.len() == self.steps + 1 {
                    let movie = UpDownTableau::new(self.path.clone())
                        .expect("enumerator emits valid movies");
                    self.path.pop();
                    return Some(movie);
                }
                let s = self.path.len() - 1;
                let succ = self.successors(s, &self.path[s]);
                self.pending.push(succ);
            } else {
                self.path.pop();
                self.pending.pop();
                if self.path.is_empty() {
                    self.done = true;
                    return None;
                }
            }
        }
    }
}

/// Largest set of pairwise-crossing strands, by exhaustive subset search
/// over the crossing graph.
pub fn pairwise_crossing_max(m: &Matching) -> usize {
    let k = m.strand_count();
    if k == 0 {
        return 0;
    }
    let mut crosses = vec![vec![false; k + 1]; k + 1];
    #[allow(clippy::needless_range_loop)]
    for i in 1..=k {
        for j in i + 1..=k {
            let c = strands_cross(m, i, j).expect("labels are in range");
            crosses[i][j] = c;
            crosses[j][i] = c;
        }
    }
    let mut best = 0;
    'mask: for mask in 1u32..(1 << k) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let chosen: Vec<usize> = (1..=k).filter(|&i| mask & (1 << (i - 1)) != 0).collect();
        for a in 0..chosen.len() {
            for b in a + 1..chosen.len() {
                if !crosses[chosen[a]][chosen[b]] {
                    continue 'mask;
                }
            }
        }
        best = size;
    }
    best
}

/// Longest coexistent decreasing subsequence of unbarred symbols, by
/// exhaustive subset search over strand values.
pub fn coexistent_decreasing_max(w: &MatchingWord) -> usize {
    let k = w.strand_count();
    if k == 0 {
        return 0;
    }
    let unbar: Vec<usize> = (1..=k)
        .map(|v| w.unbarred_position(v).expect("word holds every value"))
        .collect();
    let mut best = 0;
    'mask: for mask in 1u32..(1 << k) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        // Values descending must sit at increasing unbarred positions.
        let mut times = Vec::with_capacity(size);
        for v in (1..=k).rev() {
            if mask & (1 << (v - 1)) != 0 {
                let t = unbar[v - 1];
                if times.last().is_some_and(|&prev| prev >= t) {
                    continue 'mask;
                }
                times.push(t);
            }
        }
        if crate::updown::is_coexistent(w, &times) == Ok(true) {
            best = size;
        }
    }
    best
}

/// Longest pattern of a matching by brute force. Both equivalent definitions
/// are evaluated — pairwise-crossing strand sets and coexistent decreasing
/// subsequences — and must agree.
pub fn longest_pattern_brute(m: &Matching) -> Result<usize> {
    longest_pattern_brute_limited(m, Limits::default())
}

pub fn longest_pattern_brute_limited(m: &Matching, limits: Limits) -> Result<usize> {
    let points = 2 * m.strand_count();
    if points > limits.max_matching_points {
        return Err(Error::SizeLimit {
            what: "matching points 2k",
            got: points,
            limit: limits.max_matching_points,
        });
    }
    let by_crossing = pairwise_crossing_max(m);
    let by_word = coexistent_decreasing_max(&matching_to_word(m));
    if by_crossing != by_word {
        return Err(Error::InternalInvariant(format!(
            "pattern maxima disagree on {m}: {by_crossing} pairwise-crossing vs {by_word} coexistent"
        )));
    }
    Ok(by_crossing)
}

/// One row of the pattern-avoidance census: the number of matchings of 2k
/// points with no (n+1)-pattern next to the number of 2k-step up-down movies
/// whose shapes all have at most n rows. Their equality is the claim under
/// test, established here by two independent enumerations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CensusRow {
    pub k: usize,
    pub n: usize,
    pub count_avoiding: u64,
    pub count_ud_bounded: u64,
}

impl CensusRow {
    pub fn agree(&self) -> bool {
        self.count_avoiding == self.count_ud_bounded
    }

    /// CSV data line matching the header `k,n,count_avoiding,count_ud_bounded,agree`.
    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{}",
            self.k,
            self.n,
            self.count_avoiding,
            self.count_ud_bounded,
            if self.agree() { "agree" } else { "DISAGREE" }
        )
    }

    pub const CSV_HEADER: &'static str = "k,n,count_avoiding,count_ud_bounded,agree";
}

/// Fill a census row by exhaustive enumeration through the two independent
/// code paths.
pub fn census(k: usize, n: usize) -> Result<CensusRow> {
    let mut count_avoiding = 0u64;
    for m in enumerate_matchings(k)? {
        if longest_pattern_brute(&m)? <= n {
            count_avoiding += 1;
        }
    }
    let count_ud_bounded = enumerate_updown(k, Some(n))?.count() as u64;
    Ok(CensusRow {
        k,
        n,
        count_avoiding,
        count_ud_bounded,
    })
}

/// Census with the matching stream partitioned by the partner of point 1 and
/// the shards counted by a small worker pool; the reduction is plain
/// addition, so worker order does not matter.
pub fn census_parallel(k: usize, n: usize, jobs: usize) -> Result<CensusRow> {
    if jobs <= 1 || k == 0 {
        return census(k, n);
    }
    // Fail the same way the serial path would before spawning anything.
    let limits = Limits::default();
    if 2 * k > limits.max_matching_points {
        return Err(Error::SizeLimit {
            what: "matching points 2k",
            got: 2 * k,
            limit: limits.max_matching_points,
        });
    }
    if 2 * k > limits.max_movie_steps {
        return Err(Error::SizeLimit {
            what: "movie steps 2k",
            got: 2 * k,
            limit: limits.max_movie_steps,
        });
    }

    let partners: Vec<usize> = (2..=2 * k).collect();
    let next = AtomicUsize::new(0);
    let count_avoiding = std::thread::scope(|scope| {
        let workers: Vec<_> = (0..jobs.min(partners.len()))
            .map(|_| {
                scope.spawn(|| {
                    let mut local = 0u64;
                    loop {
                        let i = next.fetch_add(1, Ordering::Relaxed);
                        let Some(&j) = partners.get(i) else { break };
                        let rest: Vec<usize> = (2..=2 * k).filter(|&p| p != j).collect();
                        for mut pairs in Pairings::new(rest) {
                            pairs.push((1, j));
                            let m = Matching::new(pairs).expect("shard pairs cover 1..=2k");
                            let l = longest_pattern_brute(&m)
                                .expect("shard size was checked above");
                            if l <= n {
                                local += 1;
                            }
                        }
                    }
                    local
                })
            })
            .collect();
        workers.into_iter().map(|h| h.join().expect("worker panicked")).sum()
    });

    let count_ud_bounded = enumerate_updown(k, Some(n))?.count() as u64;
    Ok(CensusRow {
        k,
        n,
        count_avoiding,
        count_ud_bounded,
    })
}
