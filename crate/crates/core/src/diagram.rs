//! Viennot's geometric construction: colored monotone lattice paths on the
//! integer grid encoding the full bumping timeline of a permutation.
//!
//! Coordinates are (t, b) with t the time direction (rightward) and b the
//! bumping direction (upward), both 1-based. The unit horizontal segment
//! (t,b)→(t+1,b) is keyed by (t,b); the unit vertical segment (t,b)→(t,b+1)
//! likewise. Rays conceptually extend to infinity; segments are stored up to
//! the boundary lines t = T+1 and b = k+1, and the exit colors are recorded
//! separately.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::matching::Permutation;
use crate::partition::Partition;
use crate::tableau::StandardTableau;

/// One of the totally ordered colors c_1 < c_2 < ⋯ used to paint segments.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Color(usize);

impl Color {
    pub const FIRST: Color = Color(1);

    pub fn new(index: usize) -> Result<Self> {
        if index == 0 {
            return Err(Error::InternalInvariant("color index 0 is reserved".into()));
        }
        Ok(Color(index))
    }

    /// 1-based index of the color.
    pub fn index(self) -> usize {
        self.0
    }

    pub fn next(self) -> Color {
        Color(self.0 + 1)
    }
}

impl std::fmt::Display for Color {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "c{}", self.0)
    }
}

pub type SegmentMap = BTreeMap<(usize, usize), Color>;

/// The two local bend shapes of a monotone lattice path. An outer corner has
/// segments leaving rightward and upward from its point; an inner corner has
/// a segment arriving from below and one leaving leftward.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CornerKind {
    Outer,
    Inner,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Corner {
    pub kind: CornerKind,
    pub at: (usize, usize),
    pub color: Color,
}

/// Shared column-by-column construction state for the ordinary and the
/// up-down diagram.
#[derive(Debug)]
pub(crate) struct GridBuilder {
    /// Board height k; dots live in `[1,T]×[1,k]` and rays exit at k+1.
    height: usize,
    /// Color of the horizontal ray at each live height as it enters the
    /// current column, i.e. of the segment (t−1,b)→(t,b).
    ray_color: BTreeMap<usize, Color>,
    pub dots: Vec<(usize, usize)>,
    pub crosses: Vec<(usize, usize)>,
    pub hsegs: SegmentMap,
    pub vsegs: SegmentMap,
    pub top_exit: BTreeMap<usize, Color>,
}

impl GridBuilder {
    pub fn new(height: usize) -> Self {
        GridBuilder {
            height,
            ray_color: BTreeMap::new(),
            dots: Vec::new(),
            crosses: Vec::new(),
            hsegs: SegmentMap::new(),
            vsegs: SegmentMap::new(),
            top_exit: BTreeMap::new(),
        }
    }

    /// Place a • at (t, a), draw the vertical ray up to the boundary, and
    /// extend every live horizontal ray across column t.
    ///
    /// The vertical ray starts with c_1 and moves to the next color each time
    /// it passes a point whose incoming horizontal segment carries its
    /// current color. A horizontal ray moves to the next color exactly when
    /// the vertical segment crossing it from below carries its own color.
    pub fn unbarred_step(&mut self, t: usize, a: usize) {
        debug_assert!(!self.ray_color.contains_key(&a), "height {a} already live");
        self.dots.push((t, a));

        let mut cur = Color::FIRST;
        self.vsegs.insert((t, a), cur);
        for b in a + 1..=self.height {
            if self.ray_color.get(&b) == Some(&cur) {
                cur = cur.next();
            }
            self.vsegs.insert((t, b), cur);
        }
        self.top_exit.insert(t, cur);

        self.ray_color.insert(a, Color::FIRST);
        let live: Vec<usize> = self.ray_color.keys().copied().collect();
        for b in live {
            let mut col = self.ray_color[&b];
            if b > a && self.vsegs.get(&(t, b - 1)) == Some(&col) {
                col = col.next();
            }
            self.hsegs.insert((t, b), col);
            self.ray_color.insert(b, col);
        }
    }

    /// Place a × at (t, a), ending the horizontal ray at height a there, and
    /// extend the remaining live rays across column t unchanged (no vertical
    /// is drawn, so no colors move).
    pub fn barred_step(&mut self, t: usize, a: usize) {
        debug_assert!(self.ray_color.contains_key(&a), "height {a} is not live");
        self.crosses.push((t, a));
        self.ray_color.remove(&a);
        let live: Vec<usize> = self.ray_color.keys().copied().collect();
        for b in live {
            self.hsegs.insert((t, b), self.ray_color[&b]);
        }
    }

    /// Exit colors of the rays still live after the final column `t_last`.
    pub fn right_exit(&self, t_last: usize) -> BTreeMap<usize, Color> {
        self.ray_color
            .iter()
            .map(|(&b, &c)| {
                debug_assert_eq!(self.hsegs.get(&(t_last, b)), Some(&c));
                (b, c)
            })
            .collect()
    }
}

/// The finished Viennot diagram of a permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ViennotDiagram {
    k: usize,
    dots: Vec<(usize, usize)>,
    hsegs: SegmentMap,
    vsegs: SegmentMap,
    top_exit: BTreeMap<usize, Color>,
    right_exit: BTreeMap<usize, Color>,
}

/// Run the construction on `w`, one column per time step.
pub fn build_viennot(w: &Permutation) -> ViennotDiagram {
    let k = w.len();
    let mut g = GridBuilder::new(k);
    for t in 1..=k {
        g.unbarred_step(t, w.value_at(t));
    }
    let right_exit = g.right_exit(k);
    ViennotDiagram {
        k,
        dots: g.dots,
        hsegs: g.hsegs,
        vsegs: g.vsegs,
        top_exit: g.top_exit,
        right_exit,
    }
}

impl ViennotDiagram {
    pub fn k(&self) -> usize {
        self.k
    }

    /// The • points (t, a_t) in time order.
    pub fn dots(&self) -> &[(usize, usize)] {
        &self.dots
    }

    pub fn hsegs(&self) -> &SegmentMap {
        &self.hsegs
    }

    pub fn vsegs(&self) -> &SegmentMap {
        &self.vsegs
    }

    /// Color of the vertical ray of column t where it crosses b = k + ½.
    pub fn top_exit(&self) -> &BTreeMap<usize, Color> {
        &self.top_exit
    }

    /// Color of the horizontal ray at height b where it crosses t = k + ½.
    pub fn right_exit(&self) -> &BTreeMap<usize, Color> {
        &self.right_exit
    }

    /// Largest color index appearing in the diagram, if any segment exists.
    pub fn max_color(&self) -> Option<Color> {
        self.hsegs.values().copied().max()
    }

    /// Row j of P is filled with the b-coordinates of the c_j-colored
    /// horizontal segments meeting the right boundary.
    pub fn read_p(&self) -> StandardTableau {
        tableau_from_exits(&self.right_exit)
    }

    /// Row j of Q is filled with the t-coordinates of the c_j-colored
    /// vertical segments meeting the top boundary.
    pub fn read_q(&self) -> StandardTableau {
        tableau_from_exits(&self.top_exit)
    }

    /// Stop after s steps: the insertion tableau P_s and its shape, read from
    /// the colors of the horizontal segments crossing the line t = s + ½.
    pub fn time_slice(&self, s: usize) -> Result<(StandardTableau, Partition)> {
        if s > self.k {
            return Err(Error::StepOutOfRange { step: s, max: self.k });
        }
        let slice = slice_exits(&self.hsegs, s);
        let tab = tableau_from_exits(&slice);
        let shape = tab.shape();
        Ok((tab, shape))
    }

    /// All outer and inner corners of the c-colored lattice paths.
    pub fn corners(&self, c: Color) -> Vec<Corner> {
        corners_in(&self.hsegs, &self.vsegs, c)
    }

    /// Times t_1 < ⋯ < t_ℓ of a longest decreasing subsequence, found by the
    /// corner cascade from a maximal-color outer corner down to the • points.
    ///
    /// Deterministic tie-breaks: the starting corner is the maximal-color
    /// outer corner with smallest t (then smallest b), and where the cascade
    /// may pick either the downward or the leftward corner for a gap box it
    /// prefers the downward one.
    pub fn lds_extract(&self) -> Result<Vec<usize>> {
        if self.k == 0 {
            return Err(Error::EmptyDiagram);
        }
        let top = self.max_color().expect("nonempty diagram has segments");
        let start = outer_corners(&self.hsegs, &self.vsegs, top)
            .into_iter()
            .min()
            .expect("maximal color has an outer corner");
        let seq = cascade(&self.hsegs, &self.vsegs, top, start);
        debug_assert!(seq.windows(2).all(|w| w[0].0 < w[1].0 && w[0].1 > w[1].1));
        Ok(seq.into_iter().map(|(t, _)| t).collect())
    }

    /// Times of a longest increasing subsequence: one outer corner per
    /// c_1-colored lattice path, walking down from the innermost path and
    /// left to an outer corner, repeatedly.
    pub fn lis_extract(&self) -> Result<Vec<usize>> {
        if self.k == 0 {
            return Err(Error::EmptyDiagram);
        }
        Ok(increasing_walk(&self.hsegs, &self.vsegs, &self.top_exit))
    }

    /// Number of c-colored lattice paths (each enters from the top boundary).
    pub fn path_count(&self, c: Color) -> usize {
        self.top_exit.values().filter(|&&e| e == c).count()
    }

    /// Reflect along the diagonal: swaps t↔b, horizontal↔vertical segments,
    /// and the two exit maps. The transpose of the diagram of w is the
    /// diagram of w⁻¹.
    pub fn transpose(&self) -> ViennotDiagram {
        let mut dots: Vec<(usize, usize)> = self.dots.iter().map(|&(t, b)| (b, t)).collect();
        dots.sort_unstable();
        ViennotDiagram {
            k: self.k,
            dots,
            hsegs: self.vsegs.iter().map(|(&(t, b), &c)| ((b, t), c)).collect(),
            vsegs: self.hsegs.iter().map(|(&(t, b), &c)| ((b, t), c)).collect(),
            top_exit: self.right_exit.clone(),
            right_exit: self.top_exit.clone(),
        }
    }
}

/// Group exit coordinates by color: row j collects the keys colored c_j.
pub(crate) fn tableau_from_exits(exits: &BTreeMap<usize, Color>) -> StandardTableau {
    let mut rows: Vec<Vec<usize>> = Vec::new();
    for (&coord, &c) in exits {
        let j = c.index();
        if rows.len() < j {
            rows.resize(j, Vec::new());
        }
        rows[j - 1].push(coord);
    }
    debug_assert!(rows.iter().all(|r| !r.is_empty()));
    StandardTableau::new(rows).expect("exit colors of a diagram read off as a tableau")
}

/// Colors of the horizontal segments keyed (s, ·), i.e. crossing t = s + ½.
pub(crate) fn slice_exits(hsegs: &SegmentMap, s: usize) -> BTreeMap<usize, Color> {
    hsegs
        .range((s, 0)..=(s, usize::MAX))
        .map(|(&(_, b), &c)| (b, c))
        .collect()
}

pub(crate) fn corners_in(hsegs: &SegmentMap, vsegs: &SegmentMap, c: Color) -> Vec<Corner> {
    let mut out = Vec::new();
    for (&(t, b), &col) in hsegs {
        if col != c {
            continue;
        }
        if vsegs.get(&(t, b)) == Some(&c) {
            out.push(Corner {
                kind: CornerKind::Outer,
                at: (t, b),
                color: c,
            });
        }
        // The segment (t,b)→(t+1,b) arrives at (t+1,b); with a same-colored
        // vertical arriving there from below, the path bends into an inner
        // corner.
        if vsegs.get(&(t + 1, b.wrapping_sub(1))) == Some(&c) {
            out.push(Corner {
                kind: CornerKind::Inner,
                at: (t + 1, b),
                color: c,
            });
        }
    }
    out.sort_unstable();
    out
}

pub(crate) fn outer_corners(
    hsegs: &SegmentMap,
    vsegs: &SegmentMap,
    c: Color,
) -> Vec<(usize, usize)> {
    corners_in(hsegs, vsegs, c)
        .into_iter()
        .filter(|cr| cr.kind == CornerKind::Outer)
        .map(|cr| cr.at)
        .collect()
}

/// From an inner corner, follow the c-colored horizontal run leftward to the
/// outer corner where the path bends down.
fn walk_left(hsegs: &SegmentMap, vsegs: &SegmentMap, c: Color, from: (usize, usize)) -> (usize, usize) {
    let (mut t, b) = from;
    while t > 1 && hsegs.get(&(t - 1, b)) == Some(&c) {
        t -= 1;
    }
    debug_assert_eq!(hsegs.get(&(t, b)), Some(&c));
    debug_assert_eq!(vsegs.get(&(t, b)), Some(&c), "leftward walk must end at an outer corner");
    (t, b)
}

/// From an inner corner, follow the c-colored vertical run downward to the
/// outer corner where the path bends right.
fn walk_down(hsegs: &SegmentMap, vsegs: &SegmentMap, c: Color, from: (usize, usize)) -> (usize, usize) {
    let (t, mut b) = from;
    while b > 1 && vsegs.get(&(t, b - 1)) == Some(&c) {
        b -= 1;
    }
    debug_assert_eq!(vsegs.get(&(t, b)), Some(&c));
    debug_assert_eq!(hsegs.get(&(t, b)), Some(&c), "downward walk must end at an outer corner");
    (t, b)
}

/// The corner cascade: starting from one outer corner of `top`, repeatedly
/// turn a decreasing sequence of c_{i}-colored outer corners (which coincide
/// with c_{i−1}-colored inner corners) into a one-longer decreasing sequence
/// of c_{i−1}-colored outer corners, ending at the c_1 outer corners, which
/// are • points. Every visited point stays weakly below-left of `start`.
pub(crate) fn cascade(
    hsegs: &SegmentMap,
    vsegs: &SegmentMap,
    top: Color,
    start: (usize, usize),
) -> Vec<(usize, usize)> {
    let mut seq = vec![start];
    for ci in (1..top.index()).rev() {
        let c = Color(ci);
        let inner = seq;
        let mut next = Vec::with_capacity(inner.len() + 1);
        next.push(walk_left(hsegs, vsegs, c, inner[0]));
        for j in 1..inner.len() {
            // The gap box between consecutive inner corners contains the
            // downward corner of the previous one or the leftward corner of
            // the next one; prefer the downward one when both fit.
            let down = walk_down(hsegs, vsegs, c, inner[j - 1]);
            if down.1 >= inner[j].1 {
                next.push(down);
            } else {
                let left = walk_left(hsegs, vsegs, c, inner[j]);
                debug_assert!(left.0 >= inner[j - 1].0, "gap box must contain a corner");
                next.push(left);
            }
        }
        next.push(walk_down(hsegs, vsegs, c, inner[inner.len() - 1]));
        seq = next;
    }
    seq
}

/// Walk of the increasing-subsequence proof: start at the first outer corner
/// of the innermost c_1 path, travel down until meeting the next c_1 path,
/// then left to an outer corner, and repeat. Returns the times in increasing
/// order.
pub(crate) fn increasing_walk(
    hsegs: &SegmentMap,
    vsegs: &SegmentMap,
    top_exit: &BTreeMap<usize, Color>,
) -> Vec<usize> {
    let c1 = Color::FIRST;
    let entry = top_exit
        .iter()
        .filter(|&(_, &c)| c == c1)
        .map(|(&t, _)| t)
        .max()
        .expect("every nonempty diagram has a c_1 path");
    // The whole entry column is c_1 (colors weakly increase upward), so the
    // descent from the boundary ends at the column's • point.
    let top_b = vsegs
        .range((entry, 0)..=(entry, usize::MAX))
        .map(|(&(_, b), _)| b)
        .max()
        .expect("entry column has vertical segments");
    let (mut t, mut b) = walk_down(hsegs, vsegs, c1, (entry, top_b));

    let mut corners = vec![(t, b)];
    'outer: loop {
        for b2 in (1..b).rev() {
            if hsegs.get(&(t, b2)) == Some(&c1) || (t > 1 && hsegs.get(&(t - 1, b2)) == Some(&c1))
            {
                let mut t2 = t;
                while t2 > 1 && hsegs.get(&(t2 - 1, b2)) == Some(&c1) {
                    t2 -= 1;
                }
                t = t2;
                b = b2;
                corners.push((t, b));
                continue 'outer;
            }
        }
        break;
    }
    corners.reverse();
    debug_assert!(corners.windows(2).all(|w| w[0].0 < w[1].0 && w[0].1 < w[1].1));
    corners.into_iter().map(|(t, _)| t).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schensted::{lds_length_brute, lis_length_brute, rs};

    fn perm(word: &[usize]) -> Permutation {
        Permutation::new(word.to_vec()).unwrap()
    }

    fn colors(pairs: &[(usize, usize)]) -> BTreeMap<usize, Color> {
        pairs.iter().map(|&(k, c)| (k, Color(c))).collect()
    }

    fn example_one() -> Permutation {
        perm(&[2, 9, 1, 15, 4, 7, 13, 18, 11, 19, 5, 14, 3, 10, 6, 17, 8, 16, 12])
    }

    #[test]
    fn exits_for_2431() {
        let d = build_viennot(&perm(&[2, 4, 3, 1]));
        assert_eq!(
            d.right_exit(),
            &colors(&[(1, 1), (2, 2), (3, 1), (4, 3)])
        );
        assert_eq!(d.top_exit(), &colors(&[(1, 1), (2, 1), (3, 2), (4, 3)]));
    }

    #[test]
    fn single_point() {
        let d = build_viennot(&perm(&[1]));
        assert_eq!(d.dots(), &[(1, 1)]);
        assert_eq!(d.top_exit(), &colors(&[(1, 1)]));
        assert_eq!(d.right_exit(), &colors(&[(1, 1)]));
    }

    #[test]
    fn five_colors_in_big_example() {
        let d = build_viennot(&example_one());
        assert_eq!(d.max_color(), Some(Color(5)));
    }

    #[test]
    fn reading_rule() {
        let d = build_viennot(&perm(&[2, 4, 3, 1]));
        let p = d.read_p();
        let q = d.read_q();
        assert_eq!(p.rows(), &[vec![1, 3], vec![2], vec![4]]);
        assert_eq!(q.rows(), &[vec![1, 2], vec![3], vec![4]]);

        let d = build_viennot(&example_one());
        let (p, q, _) = rs(&example_one());
        assert_eq!(d.read_p(), p);
        assert_eq!(q.rows()[0], vec![1, 2, 4, 7, 8, 10]);
        assert_eq!(d.read_q(), q);

        let d = build_viennot(&Permutation::identity(0));
        assert!(d.read_p().is_empty());
        assert!(d.read_q().is_empty());
    }

    #[test]
    fn time_slices_for_2431() {
        let w = perm(&[2, 4, 3, 1]);
        let d = build_viennot(&w);
        let (p3, l3) = d.time_slice(3).unwrap();
        assert_eq!(p3.rows(), &[vec![2, 3], vec![4]]);
        assert_eq!(l3.parts(), &[2, 1]);

        let (p0, l0) = d.time_slice(0).unwrap();
        assert!(p0.is_empty() && l0.is_empty());

        let (p4, _) = d.time_slice(4).unwrap();
        assert_eq!(p4, d.read_p());

        assert_eq!(
            d.time_slice(5),
            Err(Error::StepOutOfRange { step: 5, max: 4 })
        );
    }

    #[test]
    fn corners_for_2431() {
        let d = build_viennot(&perm(&[2, 4, 3, 1]));
        let c1 = d.corners(Color(1));
        let outer: Vec<_> = c1
            .iter()
            .filter(|c| c.kind == CornerKind::Outer)
            .map(|c| c.at)
            .collect();
        assert_eq!(outer, vec![(1, 2), (2, 4), (3, 3), (4, 1)]);
        let inner: Vec<_> = c1
            .iter()
            .filter(|c| c.kind == CornerKind::Inner)
            .map(|c| c.at)
            .collect();
        assert_eq!(inner, vec![(3, 4), (4, 2)]);

        let c2_outer = outer_corners(d.hsegs(), d.vsegs(), Color(2));
        assert_eq!(c2_outer, vec![(3, 4), (4, 2)]);
        let c3_outer = outer_corners(d.hsegs(), d.vsegs(), Color(3));
        assert_eq!(c3_outer, vec![(4, 4)]);
    }

    #[test]
    fn lds_extract_2431() {
        let d = build_viennot(&perm(&[2, 4, 3, 1]));
        assert_eq!(d.lds_extract().unwrap(), vec![2, 3, 4]);
    }

    #[test]
    fn lds_extract_big_example() {
        let w = example_one();
        let d = build_viennot(&w);
        let times = d.lds_extract().unwrap();
        assert_eq!(times, vec![4, 7, 9, 11, 13]);
        let values: Vec<usize> = times.iter().map(|&t| w.value_at(t)).collect();
        assert_eq!(values, vec![15, 13, 11, 5, 3]);
        assert_eq!(times.len(), lds_length_brute(&w));
    }

    #[test]
    fn lis_extract_examples() {
        let d = build_viennot(&perm(&[1, 2, 3]));
        assert_eq!(d.lis_extract().unwrap(), vec![1, 2, 3]);

        let d = build_viennot(&perm(&[3, 2, 1]));
        assert_eq!(d.lis_extract().unwrap().len(), 1);

        let w = example_one();
        let d = build_viennot(&w);
        let times = d.lis_extract().unwrap();
        assert_eq!(times.len(), lis_length_brute(&w));
        assert_eq!(times, vec![3, 5, 6, 7, 8, 10]);
        let values: Vec<usize> = times.iter().map(|&t| w.value_at(t)).collect();
        assert!(values.windows(2).all(|v| v[0] < v[1]));
    }

    #[test]
    fn empty_diagram_errors() {
        let d = build_viennot(&Permutation::identity(0));
        assert_eq!(d.lds_extract(), Err(Error::EmptyDiagram));
        assert_eq!(d.lis_extract(), Err(Error::EmptyDiagram));
    }

    #[test]
    fn transpose_is_inverse_diagram() {
        for word in [vec![2, 4, 3, 1], vec![1], vec![3, 1, 2, 5, 4]] {
            let w = perm(&word);
            let d = build_viennot(&w);
            assert_eq!(d.transpose(), build_viennot(&w.inverse()));
        }
    }
}
