//! Schensted's bumping algorithm, its reverse, and the Robinson–Schensted
//! correspondence built from it, plus quadratic-time longest
//! increasing/decreasing subsequence oracles that never touch insertion.

use crate::error::{Error, Result};
use crate::matching::Permutation;
use crate::partition::Partition;
use crate::tableau::StandardTableau;

/// Outcome of one row insertion: the grown tableau and the 1-based cell
/// that was appended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InsertionResult {
    pub tableau: StandardTableau,
    pub added_box: (usize, usize),
}

/// Insert `v` by classic row bumping: in each row, `v` replaces the leftmost
/// entry strictly greater than itself and the bumped entry descends; if no
/// greater entry exists, `v` is appended at the end of the row.
pub fn row_insert(t: &StandardTableau, v: usize) -> Result<InsertionResult> {
    if t.contains(v) {
        return Err(Error::DuplicateEntry(v));
    }
    let mut out = t.clone();
    let rows = out.rows_mut();
    let mut incoming = v;
    let mut r = 0;
    loop {
        if r == rows.len() {
            rows.push(vec![incoming]);
            break;
        }
        // Rows are sorted, so the leftmost strictly greater entry is found
        // by binary search.
        match rows[r].binary_search(&incoming) {
            Ok(_) => unreachable!("duplicate entries are rejected above"),
            Err(pos) if pos == rows[r].len() => {
                rows[r].push(incoming);
                break;
            }
            Err(pos) => {
                incoming = std::mem::replace(&mut rows[r][pos], incoming);
                r += 1;
            }
        }
    }
    let added_box = (r + 1, out.rows()[r].len());
    Ok(InsertionResult {
        tableau: out,
        added_box,
    })
}

/// Exact inverse of [`row_insert`]: remove the removable corner at `corner`
/// and un-bump upward, returning the shrunk tableau and the ejected value.
pub fn reverse_insert(
    t: &StandardTableau,
    corner: (usize, usize),
) -> Result<(StandardTableau, usize)> {
    let (row, col) = corner;
    if !t.is_removable_corner(row, col) {
        return Err(Error::NotACorner(row, col));
    }
    let mut out = t.clone();
    let rows = out.rows_mut();
    let mut outgoing = rows[row - 1].pop().expect("corner row is nonempty");
    if rows[row - 1].is_empty() {
        rows.pop();
    }
    for r in (0..row - 1).rev() {
        // Rightmost entry strictly less than the rising value.
        let pos = rows[r].partition_point(|&x| x < outgoing) - 1;
        outgoing = std::mem::replace(&mut rows[r][pos], outgoing);
    }
    Ok((out, outgoing))
}

/// The Robinson–Schensted correspondence: P accumulates the inserted values,
/// Q records in each cell the step at which it was created, and both share
/// the shape λ.
pub fn rs(w: &Permutation) -> (StandardTableau, StandardTableau, Partition) {
    let mut p = StandardTableau::empty();
    let mut q = StandardTableau::empty();
    for (step, &v) in w.word().iter().enumerate() {
        let ins = row_insert(&p, v).expect("permutation values are distinct");
        let (r, c) = ins.added_box;
        p = ins.tableau;
        let q_rows = q.rows_mut();
        if r > q_rows.len() {
            q_rows.push(Vec::new());
        }
        debug_assert_eq!(q_rows[r - 1].len(), c - 1);
        q_rows[r - 1].push(step + 1);
    }
    let shape = p.shape();
    debug_assert_eq!(shape, q.shape());
    (p, q, shape)
}

/// Recover the permutation from (P, Q) by locating the cell of Q labeled
/// t = k, k−1, … and reverse-inserting from that corner of P.
pub fn rs_inverse(p: &StandardTableau, q: &StandardTableau) -> Result<Permutation> {
    if p.shape() != q.shape() {
        return Err(Error::ShapeMismatch(
            p.shape().parts().to_vec(),
            q.shape().parts().to_vec(),
        ));
    }
    if !p.is_standard() {
        return Err(Error::NotStandard("P has non-standard content".into()));
    }
    if !q.is_standard() {
        return Err(Error::NotStandard("Q has non-standard content".into()));
    }
    let k = p.size();
    let mut cur = p.clone();
    let mut word = vec![0usize; k];
    for t in (1..=k).rev() {
        let corner = q.find(t).expect("standard Q contains every step label");
        let (shrunk, ejected) = reverse_insert(&cur, corner)?;
        cur = shrunk;
        word[t - 1] = ejected;
    }
    Permutation::new(word)
}

/// The movie λ_1 ⊆ λ_2 ⊆ … read off a recording tableau: λ_t is the shape of
/// the cells labeled at most t. Includes the empty λ_0.
pub fn shape_movie(q: &StandardTableau) -> Result<Vec<Partition>> {
    if !q.is_standard() {
        return Err(Error::NotStandard(
            "shape movies are read from standard recording tableaux".into(),
        ));
    }
    let k = q.size();
    let mut lens = vec![0usize; q.rows().len()];
    let mut movie = Vec::with_capacity(k + 1);
    movie.push(Partition::empty());
    for t in 1..=k {
        let (r, c) = q.find(t).expect("standard Q contains every step label");
        debug_assert_eq!(lens[r - 1] + 1, c);
        lens[r - 1] = c;
        let parts: Vec<usize> = lens.iter().copied().take_while(|&l| l > 0).collect();
        movie.push(Partition::new(parts)?);
    }
    Ok(movie)
}

/// Exact longest strictly decreasing subsequence length by quadratic dynamic
/// programming. Deliberately independent of any insertion machinery.
pub fn lds_length_brute(w: &Permutation) -> usize {
    longest_monotone(w.word(), |a, b| a > b)
}

/// Exact longest strictly increasing subsequence length, same method.
pub fn lis_length_brute(w: &Permutation) -> usize {
    longest_monotone(w.word(), |a, b| a < b)
}

fn longest_monotone(word: &[usize], follows: impl Fn(usize, usize) -> bool) -> usize {
    let mut best = vec![0usize; word.len()];
    let mut overall = 0;
    for i in 0..word.len() {
        let mut here = 1;
        for j in 0..i {
            if follows(word[j], word[i]) && best[j] + 1 > here {
                here = best[j] + 1;
            }
        }
        best[i] = here;
        overall = overall.max(here);
    }
    overall
}
