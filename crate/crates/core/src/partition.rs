use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer partition: a weakly decreasing sequence of positive box counts,
/// top row first. The empty sequence is the empty shape.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        for (i, &p) in parts.iter().enumerate() {
            if p == 0 {
                return Err(Error::InvalidPartition(format!("part {} is zero", i + 1)));
            }
            if i > 0 && parts[i - 1] < p {
                return Err(Error::InvalidPartition(format!(
                    "parts not weakly decreasing at row {}: {} < {}",
                    i + 1,
                    parts[i - 1],
                    p
                )));
            }
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    /// Number of columns: the first part, or 0 for the empty shape.
    pub fn columns(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Total number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Length of row `row` (1-based), 0 if the row does not exist.
    pub fn row_len(&self, row: usize) -> usize {
        if row == 0 {
            return 0;
        }
        self.parts.get(row - 1).copied().unwrap_or(0)
    }

    /// 1-based rows where a box may be added, including the fresh row below.
    pub fn addable_rows(&self) -> Vec<usize> {
        let mut rows = Vec::new();
        for r in 1..=self.parts.len() {
            if r == 1 || self.parts[r - 2] > self.parts[r - 1] {
                rows.push(r);
            }
        }
        rows.push(self.parts.len() + 1);
        rows
    }

    /// 1-based rows whose last box is a removable corner.
    pub fn removable_rows(&self) -> Vec<usize> {
        (1..=self.parts.len())
            .filter(|&r| self.parts[r - 1] > self.parts.get(r).copied().unwrap_or(0))
            .collect()
    }

    /// Shape with one box added at the end of `row` (1-based).
    pub fn with_box_added(&self, row: usize) -> Result<Self> {
        let mut parts = self.parts.clone();
        if row == parts.len() + 1 {
            parts.push(1);
        } else if row >= 1 && row <= parts.len() {
            parts[row - 1] += 1;
        } else {
            return Err(Error::InvalidPartition(format!("row {row} out of range")));
        }
        Partition::new(parts)
    }

    /// Shape with the last box of `row` (1-based) removed.
    pub fn with_box_removed(&self, row: usize) -> Result<Self> {
        if !self.removable_rows().contains(&row) {
            return Err(Error::InvalidPartition(format!(
                "row {row} has no removable corner"
            )));
        }
        let mut parts = self.parts.clone();
        parts[row - 1] -= 1;
        if parts[row - 1] == 0 {
            parts.pop();
        }
        Partition::new(parts)
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// One step of an up-down movie: the 1-based cell that changed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoxStep {
    Added { row: usize, col: usize },
    Removed { row: usize, col: usize },
}

/// The single-box difference from `from` to `to`, if there is exactly one.
pub fn one_box_step(from: &Partition, to: &Partition) -> Option<BoxStep> {
    let (small, big, added) = match to.size().checked_sub(from.size()) {
        Some(1) => (from, to, true),
        _ if from.size() == to.size() + 1 => (to, from, false),
        _ => return None,
    };
    let rows = big.rows();
    let mut changed = None;
    for r in 1..=rows {
        let a = small.row_len(r);
        let b = big.row_len(r);
        match b.checked_sub(a) {
            Some(0) => {}
            Some(1) if changed.is_none() => changed = Some((r, b)),
            _ => return None,
        }
    }
    let (row, col) = changed?;
    Some(if added {
        BoxStep::Added { row, col }
    } else {
        BoxStep::Removed { row, col }
    })
}

/// A movie of 2k+1 partitions from the empty shape back to the empty shape,
/// each step adding or removing exactly one box.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct UpDownTableau {
    shapes: Vec<Partition>,
}

impl UpDownTableau {
    pub fn new(shapes: Vec<Partition>) -> Result<Self> {
        if shapes.is_empty() || shapes.len().is_multiple_of(2) {
            return Err(Error::MalformedMovie {
                step: 0,
                reason: format!("movie must have 2k+1 shapes, got {}", shapes.len()),
            });
        }
        if !shapes[0].is_empty() {
            return Err(Error::MalformedMovie {
                step: 0,
                reason: "movie must start with the empty shape".into(),
            });
        }
        if !shapes[shapes.len() - 1].is_empty() {
            return Err(Error::MalformedMovie {
                step: shapes.len() - 1,
                reason: "movie must end with the empty shape".into(),
            });
        }
        for t in 1..shapes.len() {
            if one_box_step(&shapes[t - 1], &shapes[t]).is_none() {
                return Err(Error::MalformedMovie {
                    step: t,
                    reason: format!(
                        "shapes {} and {} do not differ by one box",
                        shapes[t - 1],
                        shapes[t]
                    ),
                });
            }
        }
        Ok(UpDownTableau { shapes })
    }

    /// Number of steps 2k.
    pub fn steps(&self) -> usize {
        self.shapes.len() - 1
    }

    /// Number of strands k.
    pub fn strand_count(&self) -> usize {
        self.steps() / 2
    }

    pub fn shapes(&self) -> &[Partition] {
        &self.shapes
    }

    pub fn shape(&self, t: usize) -> &Partition {
        &self.shapes[t]
    }

    /// Largest row count over all shapes of the movie.
    pub fn max_rows(&self) -> usize {
        self.shapes.iter().map(Partition::rows).max().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![]).is_ok());
        assert!(Partition::new(vec![3, 3, 1]).is_ok());
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn rows_and_columns() {
        assert_eq!(Partition::empty().rows(), 0);
        assert_eq!(Partition::empty().columns(), 0);
        let lam = p(&[4, 2, 1]);
        assert_eq!(lam.rows(), 3);
        assert_eq!(lam.columns(), 4);
        assert_eq!(lam.size(), 7);
    }

    #[test]
    fn corners() {
        let lam = p(&[3, 3, 1]);
        assert_eq!(lam.addable_rows(), vec![1, 3, 4]);
        assert_eq!(lam.removable_rows(), vec![2, 3]);
        assert_eq!(lam.with_box_added(3).unwrap(), p(&[3, 3, 2]));
        assert_eq!(lam.with_box_removed(3).unwrap(), p(&[3, 3]));
        assert!(lam.with_box_removed(1).is_err());
    }

    #[test]
    fn one_box_steps() {
        assert_eq!(
            one_box_step(&p(&[2, 1]), &p(&[2, 2])),
            Some(BoxStep::Added { row: 2, col: 2 })
        );
        assert_eq!(
            one_box_step(&p(&[2, 1]), &p(&[2])),
            Some(BoxStep::Removed { row: 2, col: 1 })
        );
        assert_eq!(one_box_step(&p(&[2, 1]), &p(&[2, 1])), None);
        assert_eq!(one_box_step(&p(&[2, 2]), &p(&[3, 1])), None);
        assert_eq!(
            one_box_step(&Partition::empty(), &p(&[1])),
            Some(BoxStep::Added { row: 1, col: 1 })
        );
    }

    #[test]
    fn updown_validation() {
        let ok = UpDownTableau::new(vec![Partition::empty(), p(&[1]), Partition::empty()]);
        assert!(ok.is_ok());
        assert_eq!(ok.unwrap().strand_count(), 1);

        // k = 0 movie is the single empty shape.
        assert!(UpDownTableau::new(vec![Partition::empty()]).is_ok());

        assert!(UpDownTableau::new(vec![Partition::empty(), p(&[1])]).is_err());
        assert!(UpDownTableau::new(vec![p(&[1]), p(&[1]), p(&[1])]).is_err());
        assert!(
            UpDownTableau::new(vec![Partition::empty(), p(&[2]), Partition::empty()]).is_err()
        );
    }
}
