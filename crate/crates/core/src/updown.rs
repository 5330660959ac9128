//! The up-down extension of Viennot's construction for matchings, the
//! bijection between matchings and up-down tableaux in both directions, and
//! longest-pattern extraction.
//!
//! An ℓ-pattern of a matching is a choice of ℓ strands that pairwise cross;
//! in the matching word it is a decreasing run of unbarred symbols that
//! concludes before any of their barred partners appears (a coexistent
//! decreasing subsequence).

use std::collections::BTreeMap;

use crate::diagram::{
    cascade, corners_in, outer_corners, slice_exits, Color, Corner, GridBuilder, SegmentMap,
};
use crate::error::{Error, Result};
use crate::matching::{matching_to_word, Matching, MatchingWord, Token};
use crate::partition::{one_box_step, BoxStep, Partition, UpDownTableau};
use crate::schensted::{reverse_insert, row_insert};
use crate::tableau::StandardTableau;

/// The up-down Viennot diagram of a matching of 2k points: the board is
/// `[1,2k]×[1,k]`, each strand contributes a • at its unbarred step and a ×
/// at its barred step, and the horizontal ray of each height runs from its •
/// to its ×.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UpDownDiagram {
    k: usize,
    dots: Vec<(usize, usize)>,
    crosses: Vec<(usize, usize)>,
    hsegs: SegmentMap,
    vsegs: SegmentMap,
    top_exit: BTreeMap<usize, Color>,
}

/// Run the construction on a matching word: unbarred steps exactly as in the
/// ordinary construction, barred steps placing a × that ends the ray at that
/// height while every other live ray continues with its color unchanged.
pub fn build_updown(w: &MatchingWord) -> UpDownDiagram {
    let k = w.strand_count();
    let mut g = GridBuilder::new(k);
    for (i, tok) in w.tokens().iter().enumerate() {
        let t = i + 1;
        if tok.barred {
            g.barred_step(t, tok.value);
        } else {
            g.unbarred_step(t, tok.value);
        }
    }
    UpDownDiagram {
        k,
        dots: g.dots,
        crosses: g.crosses,
        hsegs: g.hsegs,
        vsegs: g.vsegs,
        top_exit: g.top_exit,
    }
}

impl UpDownDiagram {
    /// Number of strands k.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of time steps 2k.
    pub fn steps(&self) -> usize {
        2 * self.k
    }

    pub fn dots(&self) -> &[(usize, usize)] {
        &self.dots
    }

    pub fn crosses(&self) -> &[(usize, usize)] {
        &self.crosses
    }

    pub fn hsegs(&self) -> &SegmentMap {
        &self.hsegs
    }

    pub fn vsegs(&self) -> &SegmentMap {
        &self.vsegs
    }

    pub fn top_exit(&self) -> &BTreeMap<usize, Color> {
        &self.top_exit
    }

    pub fn max_color(&self) -> Option<Color> {
        self.hsegs.values().copied().max()
    }

    pub fn corners(&self, c: Color) -> Vec<Corner> {
        corners_in(&self.hsegs, &self.vsegs, c)
    }

    /// Recover the matching word from the markings alone: column t holds
    /// either a • (unbarred token) or a × (barred token) at the token's
    /// height.
    pub fn word(&self) -> MatchingWord {
        let mut tokens = vec![Token::unbarred(0); self.steps()];
        for &(t, b) in &self.dots {
            tokens[t - 1] = Token::unbarred(b);
        }
        for &(t, b) in &self.crosses {
            tokens[t - 1] = Token::barred(b);
        }
        MatchingWord::new(tokens).expect("diagram markings spell a valid word")
    }

    /// The up-down tableau read from time slices: the shape after step s has
    /// row j of size equal to the number of c_j-colored horizontal segments
    /// crossing the line t = s + ½.
    pub fn slice_movie(&self) -> UpDownTableau {
        let mut shapes = Vec::with_capacity(self.steps() + 1);
        for s in 0..=self.steps() {
            let slice = slice_exits(&self.hsegs, s);
            let mut row_sizes: Vec<usize> = Vec::new();
            for &c in slice.values() {
                let j = c.index();
                if row_sizes.len() < j {
                    row_sizes.resize(j, 0);
                }
                row_sizes[j - 1] += 1;
            }
            shapes.push(
                Partition::new(row_sizes).expect("slice colors stack into a partition"),
            );
        }
        UpDownTableau::new(shapes).expect("slices change by one box per step")
    }
}

/// The bijection toward up-down tableaux: bump in each unbarred value with
/// Schensted insertion, and on each barred value ī delete the box holding i
/// (always a removable corner, since bars arrive in decreasing order). The
/// entries of the scratch tableau are not part of the result.
pub fn sundaram_stanley(w: &MatchingWord) -> Result<UpDownTableau> {
    let mut tab = StandardTableau::empty();
    let mut shapes = Vec::with_capacity(w.len() + 1);
    shapes.push(Partition::empty());
    for (i, tok) in w.tokens().iter().enumerate() {
        if tok.barred {
            let (row, col) = tab.find(tok.value).ok_or_else(|| {
                Error::InternalInvariant(format!(
                    "value {} missing from the insertion tableau at step {}",
                    tok.value,
                    i + 1
                ))
            })?;
            if !tab.is_removable_corner(row, col) {
                return Err(Error::InternalInvariant(format!(
                    "value {} at ({row}, {col}) is not a removable corner at step {}",
                    tok.value,
                    i + 1
                )));
            }
            let rows = tab.rows_mut();
            rows[row - 1].pop();
            if rows[row - 1].is_empty() {
                rows.pop();
            }
        } else {
            tab = row_insert(&tab, tok.value)
                .expect("word tokens are distinct")
                .tableau;
        }
        shapes.push(tab.shape());
    }
    UpDownTableau::new(shapes)
}

/// The inverse bijection. Walking the movie backwards from the empty final
/// shape: removal steps carry the entries k, k−1, … in forward order, hence
/// 1, 2, … in reverse order, so a backward pass can refill each removed box
/// with the next counter value and emit its barred token, while each added
/// box is undone by reverse bumping, emitting the ejected value unbarred.
pub fn ss_inverse(ud: &UpDownTableau) -> Result<MatchingWord> {
    let steps = ud.steps();
    let mut tab = StandardTableau::empty();
    let mut tokens = vec![Token::unbarred(0); steps];
    let mut next_removed = 1usize;
    for t in (1..=steps).rev() {
        let step = one_box_step(ud.shape(t - 1), ud.shape(t))
            .expect("validated movies change by one box");
        match step {
            BoxStep::Removed { row, col } => {
                let value = next_removed;
                next_removed += 1;
                let rows = tab.rows_mut();
                if row > rows.len() {
                    rows.push(Vec::new());
                }
                debug_assert_eq!(rows[row - 1].len(), col - 1);
                rows[row - 1].push(value);
                tokens[t - 1] = Token::barred(value);
            }
            BoxStep::Added { row, col } => {
                let (shrunk, ejected) = reverse_insert(&tab, (row, col)).map_err(|_| {
                    Error::MalformedMovie {
                        step: t,
                        reason: format!("({row}, {col}) is not a removable corner"),
                    }
                })?;
                tab = shrunk;
                tokens[t - 1] = Token::unbarred(ejected);
            }
        }
    }
    debug_assert!(tab.is_empty());
    MatchingWord::new(tokens)
}

/// A longest pattern of a matching: `strands` are the labels of pairwise
/// crossing strands with strictly decreasing values, found at the unbarred
/// `times` t_1 < ⋯ < t_ℓ of the matching word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternWitness {
    pub strands: Vec<usize>,
    pub times: Vec<usize>,
}

impl PatternWitness {
    pub fn len(&self) -> usize {
        self.strands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.strands.is_empty()
    }
}

/// Extract a longest pattern: ℓ is the maximal color index of the up-down
/// diagram, and the corner cascade run from a maximal-color outer corner
/// stays inside the ×-free rectangle below-left of it, so it lands on ℓ dots
/// forming a coexistent decreasing subsequence. Same tie-breaks as
/// [`crate::ViennotDiagram::lds_extract`].
pub fn longest_pattern(m: &Matching) -> Result<PatternWitness> {
    if m.is_empty() {
        return Err(Error::EmptyMatching);
    }
    let w = matching_to_word(m);
    let d = build_updown(&w);
    let top = d.max_color().expect("nonempty diagram has segments");
    let start = outer_corners(&d.hsegs, &d.vsegs, top)
        .into_iter()
        .min()
        .expect("maximal color has an outer corner");
    let seq = cascade(&d.hsegs, &d.vsegs, top, start);
    let times: Vec<usize> = seq.iter().map(|&(t, _)| t).collect();
    let strands: Vec<usize> = seq.iter().map(|&(_, b)| b).collect();
    debug_assert_eq!(is_coexistent(&w, &times), Ok(true));
    Ok(PatternWitness { strands, times })
}

/// Whether the unbarred tokens at the given strictly increasing `times`,
/// whose values must strictly decrease, all conclude before any of their
/// barred partners appears. Since bars descend, it suffices that the bar of
/// the largest selected value comes after the last selected time.
pub fn is_coexistent(w: &MatchingWord, times: &[usize]) -> Result<bool> {
    let mut last_value = usize::MAX;
    let mut last_time = 0usize;
    for &t in times {
        if t == 0 || t > w.len() {
            return Err(Error::NotDecreasing(format!("position {t} out of range")));
        }
        let tok = w.token_at(t);
        if tok.barred {
            return Err(Error::NotDecreasing(format!(
                "position {t} holds the barred token {tok}"
            )));
        }
        if t <= last_time || tok.value >= last_value {
            return Err(Error::NotDecreasing(format!(
                "selection is not strictly decreasing at position {t}"
            )));
        }
        last_time = t;
        last_value = tok.value;
    }
    let Some(&t_last) = times.last() else {
        return Ok(true);
    };
    for &t in times {
        let bar = w.barred_position(w.token_at(t).value)?;
        if bar <= t_last {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching::{permutation_to_matching_word, strands_cross, Permutation};
    use crate::schensted::rs;

    fn word(signed: &[i64]) -> MatchingWord {
        MatchingWord::from_signed(signed).unwrap()
    }

    fn big_word() -> MatchingWord {
        word(&[7, 8, 6, 5, -8, 3, -7, 4, 1, -6, 2, -5, -4, -3, -2, -1])
    }

    fn shapes(parts: &[&[usize]]) -> Vec<Partition> {
        parts
            .iter()
            .map(|p| Partition::new(p.to_vec()).unwrap())
            .collect()
    }

    #[test]
    fn build_small_updown() {
        let d = build_updown(&word(&[4, 2, 3, -4, -3, 1, -2, -1]));
        assert_eq!(d.dots(), &[(1, 4), (2, 2), (3, 3), (6, 1)]);
        assert_eq!(d.crosses(), &[(4, 4), (5, 3), (7, 2), (8, 1)]);
    }

    #[test]
    fn build_tiny_updown() {
        let d = build_updown(&word(&[1, -1]));
        assert_eq!(d.dots(), &[(1, 1)]);
        assert_eq!(d.crosses(), &[(2, 1)]);
        assert_eq!(d.hsegs().len(), 1);
        assert_eq!(d.hsegs().get(&(1, 1)), Some(&Color::FIRST));
    }

    #[test]
    fn big_word_has_four_colors() {
        let d = build_updown(&big_word());
        assert_eq!(d.max_color(), Some(Color::new(4).unwrap()));
    }

    #[test]
    fn word_recovery() {
        for w in [word(&[4, 2, 3, -4, -3, 1, -2, -1]), word(&[1, -1]), big_word()] {
            assert_eq!(build_updown(&w).word(), w);
        }
        assert_eq!(build_updown(&MatchingWord::empty()).word(), MatchingWord::empty());
    }

    #[test]
    fn seventeen_frame_movie() {
        let ud = sundaram_stanley(&big_word()).unwrap();
        assert_eq!(
            ud.shapes(),
            shapes(&[
                &[],
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
            ])
            .as_slice()
        );
    }

    #[test]
    fn tiny_movie() {
        let ud = sundaram_stanley(&word(&[1, -1])).unwrap();
        assert_eq!(ud.shapes(), shapes(&[&[], &[1], &[]]).as_slice());
    }

    #[test]
    fn bent_permutation_movie_halves() {
        let w = Permutation::new(vec![2, 4, 3, 1]).unwrap();
        let ud = sundaram_stanley(&permutation_to_matching_word(&w)).unwrap();
        let (p, q, _) = rs(&w);
        let q_movie = crate::schensted::shape_movie(&q).unwrap();
        let p_movie = crate::schensted::shape_movie(&p).unwrap();
        let k = w.len();
        assert_eq!(&ud.shapes()[..=k], q_movie.as_slice());
        let mut tail: Vec<Partition> = ud.shapes()[k..].to_vec();
        tail.reverse();
        assert_eq!(tail, p_movie);
    }

    #[test]
    fn ss_inverse_examples() {
        let ud = sundaram_stanley(&big_word()).unwrap();
        assert_eq!(ss_inverse(&ud).unwrap(), big_word());

        let tiny = UpDownTableau::new(shapes(&[&[], &[1], &[]])).unwrap();
        assert_eq!(ss_inverse(&tiny).unwrap().to_signed(), vec![1, -1]);
    }

    #[test]
    fn slice_movie_examples() {
        let d = build_updown(&word(&[4, 2, 3, -4, -3, 1, -2, -1]));
        assert_eq!(
            d.slice_movie().shapes(),
            shapes(&[&[], &[1], &[1, 1], &[2, 1], &[2], &[1], &[1, 1], &[1], &[]]).as_slice()
        );

        let d = build_updown(&big_word());
        assert_eq!(d.slice_movie(), sundaram_stanley(&big_word()).unwrap());

        let d = build_updown(&MatchingWord::empty());
        assert_eq!(d.slice_movie().shapes(), shapes(&[&[]]).as_slice());
    }

    #[test]
    fn longest_pattern_big_matching() {
        let m = crate::matching::word_to_matching(&big_word());
        let witness = longest_pattern(&m).unwrap();
        assert_eq!(witness.strands, vec![7, 6, 5, 3]);
        assert_eq!(witness.times, vec![1, 3, 4, 6]);
        for i in 0..witness.strands.len() {
            for j in i + 1..witness.strands.len() {
                assert!(strands_cross(&m, witness.strands[i], witness.strands[j]).unwrap());
            }
        }
    }

    #[test]
    fn longest_pattern_degenerate() {
        let noncrossing = Matching::new(vec![(1, 2), (3, 4), (5, 6)]).unwrap();
        assert_eq!(longest_pattern(&noncrossing).unwrap().len(), 1);

        // Every pair of strands of {(i, k+i)} crosses.
        let all_crossing = Matching::new(vec![(1, 4), (2, 5), (3, 6)]).unwrap();
        let w = longest_pattern(&all_crossing).unwrap();
        assert_eq!(w.strands, vec![3, 2, 1]);
        assert_eq!(w.times, vec![1, 2, 3]);

        assert_eq!(longest_pattern(&Matching::empty()), Err(Error::EmptyMatching));
    }

    #[test]
    fn coexistence_examples() {
        let w = big_word();
        let times = |vals: &[usize]| -> Vec<usize> {
            vals.iter().map(|&v| w.unbarred_position(v).unwrap()).collect()
        };
        assert_eq!(is_coexistent(&w, &times(&[7, 6, 5, 3])), Ok(true));
        assert_eq!(is_coexistent(&w, &times(&[7, 6, 5, 3, 1])), Ok(false));
        assert_eq!(is_coexistent(&w, &times(&[8])), Ok(true));
        assert_eq!(is_coexistent(&w, &[]), Ok(true));
        assert!(matches!(
            is_coexistent(&w, &times(&[3, 7])),
            Err(Error::NotDecreasing(_))
        ));
        assert!(matches!(
            is_coexistent(&w, &[5]),
            Err(Error::NotDecreasing(_))
        ));
    }

    #[test]
    fn rectangle_below_corners_is_cross_free() {
        let d = build_updown(&big_word());
        let top = d.max_color().unwrap();
        for ci in 1..=top.index() {
            for corner in d.corners(Color::new(ci).unwrap()) {
                let (t, b) = corner.at;
                for &(ct, cb) in d.crosses() {
                    assert!(!(ct <= t && cb <= b), "× at ({ct},{cb}) under corner ({t},{b})");
                }
            }
        }
    }
}
