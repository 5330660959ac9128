//! Permutations, perfect matchings of 2k points on a line, and matching words,
//! together with the conversions among them.
//!
//! A matching word spells out a matching position by position: the right
//! endpoints of the strands, read left to right, carry the barred labels
//! k̄ down to 1̄, and each left endpoint carries the unbarred label of its
//! partner. Barred tokens are encoded as negative integers in external
//! formats (−i for ī).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of {1..k} in one-line notation.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let k = word.len();
        let mut seen = vec![false; k + 1];
        for (i, &v) in word.iter().enumerate() {
            if v == 0 || v > k {
                return Err(Error::InvalidPermutation(format!(
                    "value {v} at position {} is outside 1..={k}",
                    i + 1
                )));
            }
            if seen[v] {
                return Err(Error::InvalidPermutation(format!("value {v} repeats")));
            }
            seen[v] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(k: usize) -> Self {
        Permutation {
            word: (1..=k).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// w(t) for 1-based t.
    pub fn value_at(&self, t: usize) -> usize {
        self.word[t - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.word.len()];
        for (i, &v) in self.word.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { word: inv }
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(word: Vec<usize>) -> Result<Self> {
        Permutation::new(word)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(w: Permutation) -> Self {
        w.word
    }
}

impl std::fmt::Display for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, v) in self.word.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// A perfect matching of the points {1..2k}: k disjoint unordered pairs.
/// Stored normalized, each pair as (smaller, larger), sorted by first point.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<(usize, usize)>", into = "Vec<(usize, usize)>")]
pub struct Matching {
    pairs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn new(pairs: Vec<(usize, usize)>) -> Result<Self> {
        let n = 2 * pairs.len();
        let mut seen = vec![false; n + 1];
        let mut norm: Vec<(usize, usize)> = Vec::with_capacity(pairs.len());
        for (a, b) in pairs {
            if a == b {
                return Err(Error::InvalidMatching(format!("point {a} paired with itself")));
            }
            for p in [a, b] {
                if p == 0 || p > n {
                    return Err(Error::InvalidMatching(format!(
                        "point {p} is outside 1..={n}"
                    )));
                }
                if seen[p] {
                    return Err(Error::InvalidMatching(format!("point {p} repeats")));
                }
                seen[p] = true;
            }
            norm.push((a.min(b), a.max(b)));
        }
        norm.sort_unstable();
        Ok(Matching { pairs: norm })
    }

    pub fn empty() -> Self {
        Matching { pairs: Vec::new() }
    }

    /// Number of pairs k.
    pub fn strand_count(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Endpoint positions of the strand labeled `label` in the matching word.
    pub fn strand_endpoints(&self, label: usize) -> Result<(usize, usize)> {
        let k = self.strand_count();
        if label == 0 || label > k {
            return Err(Error::UnknownStrand(label));
        }
        // Right endpoints in increasing position carry labels k down to 1.
        let mut rights: Vec<usize> = self.pairs.iter().map(|&(_, b)| b).collect();
        rights.sort_unstable();
        let right = rights[k - label];
        let &(left, _) = self
            .pairs
            .iter()
            .find(|&&(_, b)| b == right)
            .expect("right endpoint belongs to a pair");
        Ok((left, right))
    }
}

impl TryFrom<Vec<(usize, usize)>> for Matching {
    type Error = Error;
    fn try_from(pairs: Vec<(usize, usize)>) -> Result<Self> {
        Matching::new(pairs)
    }
}

impl From<Matching> for Vec<(usize, usize)> {
    fn from(m: Matching) -> Self {
        m.pairs
    }
}

impl std::fmt::Display for Matching {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, (a, b)) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}-{b}")?;
        }
        Ok(())
    }
}

/// One symbol of a matching word: a strand label, barred or not.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Token {
    pub value: usize,
    pub barred: bool,
}

impl Token {
    pub fn unbarred(value: usize) -> Self {
        Token { value, barred: false }
    }

    pub fn barred(value: usize) -> Self {
        Token { value, barred: true }
    }

    /// Signed encoding: i for an unbarred token, −i for ī.
    pub fn to_signed(self) -> i64 {
        if self.barred {
            -(self.value as i64)
        } else {
            self.value as i64
        }
    }

    pub fn from_signed(v: i64) -> Result<Self> {
        if v == 0 {
            return Err(Error::MalformedWord {
                position: 0,
                reason: "token 0 is reserved".into(),
            });
        }
        Ok(Token {
            value: v.unsigned_abs() as usize,
            barred: v < 0,
        })
    }
}

impl std::fmt::Display for Token {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_signed())
    }
}

/// A word of 2k tokens over {1..k, 1̄..k̄}: each symbol once, each i before ī,
/// and the barred symbols in strictly decreasing value order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct MatchingWord {
    tokens: Vec<Token>,
}

impl MatchingWord {
    pub fn new(tokens: Vec<Token>) -> Result<Self> {
        if !tokens.len().is_multiple_of(2) {
            return Err(Error::MalformedWord {
                position: tokens.len(),
                reason: "word length must be even".into(),
            });
        }
        let k = tokens.len() / 2;
        let mut unbarred_pos = vec![0usize; k + 1];
        let mut barred_pos = vec![0usize; k + 1];
        let mut last_bar = k + 1;
        for (i, tok) in tokens.iter().enumerate() {
            let position = i + 1;
            if tok.value == 0 || tok.value > k {
                return Err(Error::MalformedWord {
                    position,
                    reason: format!("value {} is outside 1..={k}", tok.value),
                });
            }
            let slot = if tok.barred {
                &mut barred_pos[tok.value]
            } else {
                &mut unbarred_pos[tok.value]
            };
            if *slot != 0 {
                return Err(Error::MalformedWord {
                    position,
                    reason: format!("token {tok} repeats"),
                });
            }
            *slot = position;
            if tok.barred {
                if tok.value >= last_bar {
                    return Err(Error::MalformedWord {
                        position,
                        reason: format!(
                            "barred values must strictly decrease, saw {} after {}",
                            tok.value, last_bar
                        ),
                    });
                }
                last_bar = tok.value;
                if unbarred_pos[tok.value] == 0 {
                    return Err(Error::MalformedWord {
                        position,
                        reason: format!("{} appears before {}", Token::barred(tok.value), tok.value),
                    });
                }
            }
        }
        Ok(MatchingWord { tokens })
    }

    pub fn empty() -> Self {
        MatchingWord { tokens: Vec::new() }
    }

    /// Number of strands k.
    pub fn strand_count(&self) -> usize {
        self.tokens.len() / 2
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn tokens(&self) -> &[Token] {
        &self.tokens
    }

    /// Token at 1-based position t.
    pub fn token_at(&self, t: usize) -> Token {
        self.tokens[t - 1]
    }

    /// 1-based position of the unbarred token `value`.
    pub fn unbarred_position(&self, value: usize) -> Result<usize> {
        self.tokens
            .iter()
            .position(|t| !t.barred && t.value == value)
            .map(|i| i + 1)
            .ok_or(Error::UnknownStrand(value))
    }

    /// 1-based position of the barred token `value`.
    pub fn barred_position(&self, value: usize) -> Result<usize> {
        self.tokens
            .iter()
            .position(|t| t.barred && t.value == value)
            .map(|i| i + 1)
            .ok_or(Error::UnknownStrand(value))
    }

    pub fn to_signed(&self) -> Vec<i64> {
        self.tokens.iter().map(|t| t.to_signed()).collect()
    }

    pub fn from_signed(values: &[i64]) -> Result<Self> {
        let tokens = values
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                Token::from_signed(v).map_err(|_| Error::MalformedWord {
                    position: i + 1,
                    reason: "token 0 is reserved".into(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        MatchingWord::new(tokens)
    }
}

impl TryFrom<Vec<i64>> for MatchingWord {
    type Error = Error;
    fn try_from(values: Vec<i64>) -> Result<Self> {
        MatchingWord::from_signed(&values)
    }
}

impl From<MatchingWord> for Vec<i64> {
    fn from(w: MatchingWord) -> Self {
        w.to_signed()
    }
}

impl std::fmt::Display for MatchingWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, t) in self.tokens.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// Bend a permutation into a matching word: the one-line word followed by
/// the barred symbols k̄, (k−1)̄, …, 1̄.
pub fn permutation_to_matching_word(w: &Permutation) -> MatchingWord {
    let k = w.len();
    let mut tokens: Vec<Token> = w.word().iter().map(|&v| Token::unbarred(v)).collect();
    tokens.extend((1..=k).rev().map(Token::barred));
    MatchingWord::new(tokens).expect("bent permutations always form matching words")
}

/// Label the strands of a matching and read off its word: right endpoints in
/// increasing position carry k̄ down to 1̄, left endpoints the matching
/// unbarred label.
pub fn matching_to_word(m: &Matching) -> MatchingWord {
    let k = m.strand_count();
    let mut rights: Vec<usize> = m.pairs().iter().map(|&(_, b)| b).collect();
    rights.sort_unstable();
    let mut tokens = vec![Token::unbarred(0); 2 * k];
    for (rank, &right) in rights.iter().enumerate() {
        let label = k - rank;
        let &(left, _) = m
            .pairs()
            .iter()
            .find(|&&(_, b)| b == right)
            .expect("right endpoint belongs to a pair");
        tokens[left - 1] = Token::unbarred(label);
        tokens[right - 1] = Token::barred(label);
    }
    MatchingWord::new(tokens).expect("labeled matchings always form matching words")
}

/// Pair up the positions of i and ī for each strand label i.
pub fn word_to_matching(w: &MatchingWord) -> Matching {
    let k = w.strand_count();
    let mut left = vec![0usize; k + 1];
    let mut right = vec![0usize; k + 1];
    for (i, tok) in w.tokens().iter().enumerate() {
        if tok.barred {
            right[tok.value] = i + 1;
        } else {
            left[tok.value] = i + 1;
        }
    }
    let pairs = (1..=k).map(|v| (left[v], right[v])).collect();
    Matching::new(pairs).expect("valid words always pair up into matchings")
}

/// Whether the strands labeled `i` and `j` cross in the reduced diagram of `m`:
/// writing their endpoint positions as (a_i, b_i) and (a_j, b_j) with
/// a_i < a_j, they cross iff a_j < b_i < b_j.
pub fn strands_cross(m: &Matching, i: usize, j: usize) -> Result<bool> {
    if i == j {
        return Err(Error::UnknownStrand(i));
    }
    let pi = m.strand_endpoints(i)?;
    let pj = m.strand_endpoints(j)?;
    let ((_, b1), (a2, b2)) = if pi.0 < pj.0 { (pi, pj) } else { (pj, pi) };
    Ok(a2 < b1 && b1 < b2)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn word(signed: &[i64]) -> MatchingWord {
        MatchingWord::from_signed(signed).unwrap()
    }

    /// The 8-strand matching whose word is 7 8 6 5 8̄ 3 7̄ 4 1 6̄ 2 5̄ 4̄ 3̄ 2̄ 1̄.
    pub(crate) fn big_matching() -> Matching {
        Matching::new(vec![
            (1, 7),
            (2, 5),
            (3, 10),
            (4, 12),
            (6, 14),
            (8, 13),
            (9, 16),
            (11, 15),
        ])
        .unwrap()
    }

    pub(crate) const BIG_WORD: [i64; 16] =
        [7, 8, 6, 5, -8, 3, -7, 4, 1, -6, 2, -5, -4, -3, -2, -1];

    #[test]
    fn permutation_validation() {
        assert!(Permutation::new(vec![2, 4, 3, 1]).is_ok());
        assert!(Permutation::new(vec![]).is_ok());
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![3]).is_err());
        assert!(Permutation::new(vec![0]).is_err());
    }

    #[test]
    fn permutation_inverse() {
        let w = Permutation::new(vec![2, 4, 3, 1]).unwrap();
        assert_eq!(w.inverse().word(), &[4, 1, 3, 2]);
        assert_eq!(w.inverse().inverse(), w);
    }

    #[test]
    fn bend_permutation() {
        let w = Permutation::new(vec![2, 4, 3, 1]).unwrap();
        assert_eq!(
            permutation_to_matching_word(&w).to_signed(),
            vec![2, 4, 3, 1, -4, -3, -2, -1]
        );
        let w = Permutation::new(vec![1]).unwrap();
        assert_eq!(permutation_to_matching_word(&w).to_signed(), vec![1, -1]);
        let w = Permutation::identity(3);
        assert_eq!(
            permutation_to_matching_word(&w).to_signed(),
            vec![1, 2, 3, -3, -2, -1]
        );
    }

    #[test]
    fn word_validation() {
        assert!(MatchingWord::from_signed(&[1, -1]).is_ok());
        assert!(MatchingWord::from_signed(&[]).is_ok());
        // ī before i
        let err = MatchingWord::from_signed(&[-1, 1]).unwrap_err();
        assert!(matches!(err, Error::MalformedWord { position: 1, .. }));
        // barred values must descend
        let err = MatchingWord::from_signed(&[1, 2, -1, -2]).unwrap_err();
        assert!(matches!(err, Error::MalformedWord { position: 4, .. }));
        // repeats
        assert!(MatchingWord::from_signed(&[1, 1, -1, -1]).is_err());
        // out of range
        assert!(MatchingWord::from_signed(&[3, 1, -3, -1]).is_err());
        assert!(MatchingWord::from_signed(&[1, 0, -1, -1]).is_err());
    }

    #[test]
    fn paper_word_to_matching() {
        let w = word(&BIG_WORD);
        assert_eq!(word_to_matching(&w), big_matching());
        assert_eq!(matching_to_word(&big_matching()), w);
    }

    #[test]
    fn small_word_examples() {
        assert_eq!(
            word_to_matching(&word(&[1, -1])),
            Matching::new(vec![(1, 2)]).unwrap()
        );
        assert_eq!(
            matching_to_word(&Matching::new(vec![(1, 2)]).unwrap()).to_signed(),
            vec![1, -1]
        );
        assert_eq!(
            matching_to_word(&Matching::new(vec![(1, 3), (2, 4)]).unwrap()).to_signed(),
            vec![2, 1, -2, -1]
        );
    }

    #[test]
    fn crossing_examples() {
        let m = big_matching();
        assert!(strands_cross(&m, 7, 6).unwrap());
        assert!(strands_cross(&m, 6, 7).unwrap());
        assert!(!strands_cross(&m, 7, 1).unwrap());
        for &a in &[7, 6, 5, 3] {
            for &b in &[7, 6, 5, 3] {
                if a != b {
                    assert!(strands_cross(&m, a, b).unwrap(), "{a} x {b}");
                }
            }
        }
        let disjoint = Matching::new(vec![(1, 2), (3, 4)]).unwrap();
        assert!(!strands_cross(&disjoint, 1, 2).unwrap());
        assert!(strands_cross(&disjoint, 1, 1).is_err());
        assert!(strands_cross(&disjoint, 1, 3).is_err());
    }

    #[test]
    fn canonical_text_form() {
        let w = word(&BIG_WORD);
        assert_eq!(w.to_string(), "7,8,6,5,-8,3,-7,4,1,-6,2,-5,-4,-3,-2,-1");
        let m = Matching::new(vec![(2, 5), (1, 7), (3, 10), (4, 12), (6, 14), (8, 13), (9, 16), (11, 15)]).unwrap();
        assert_eq!(
            m.to_string(),
            "1-7,2-5,3-10,4-12,6-14,8-13,9-16,11-15"
        );
    }
}
