use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A row- and column-strict filling of a Young diagram with distinct positive
/// entries. Entries need not be 1..n: intermediate insertion tableaux carry
/// whatever values have been inserted so far. Use [`StandardTableau::is_standard`]
/// to test for standard content.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = std::collections::BTreeSet::new();
        for (r, row) in rows.iter().enumerate() {
            if row.is_empty() {
                return Err(Error::InvalidTableau(format!("row {} is empty", r + 1)));
            }
            if r > 0 && rows[r - 1].len() < row.len() {
                return Err(Error::InvalidTableau(format!(
                    "row lengths do not form a partition at row {}",
                    r + 1
                )));
            }
            for (c, &v) in row.iter().enumerate() {
                if v == 0 {
                    return Err(Error::InvalidTableau("entry 0 is reserved".into()));
                }
                if !seen.insert(v) {
                    return Err(Error::InvalidTableau(format!("entry {v} repeats")));
                }
                if c > 0 && row[c - 1] >= v {
                    return Err(Error::InvalidTableau(format!(
                        "row {} not strictly increasing at column {}",
                        r + 1,
                        c + 1
                    )));
                }
                if r > 0 && rows[r - 1][c] >= v {
                    return Err(Error::InvalidTableau(format!(
                        "column {} not strictly increasing at row {}",
                        c + 1,
                        r + 1
                    )));
                }
            }
        }
        Ok(StandardTableau { rows })
    }

    pub fn empty() -> Self {
        StandardTableau { rows: Vec::new() }
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect())
            .expect("row lengths of a valid tableau form a partition")
    }

    /// Total number of boxes.
    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Entry at the 1-based cell (row, col).
    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        self.rows.get(row.checked_sub(1)?)?.get(col.checked_sub(1)?).copied()
    }

    /// 1-based cell holding `value`, if present.
    pub fn find(&self, value: usize) -> Option<(usize, usize)> {
        for (r, row) in self.rows.iter().enumerate() {
            // Rows are sorted, so binary search within each row.
            if let Ok(c) = row.binary_search(&value) {
                return Some((r + 1, c + 1));
            }
        }
        None
    }

    pub fn contains(&self, value: usize) -> bool {
        self.find(value).is_some()
    }

    /// True iff the entries are exactly 1..=size, each once.
    pub fn is_standard(&self) -> bool {
        let n = self.size();
        let mut seen = vec![false; n + 1];
        for row in &self.rows {
            for &v in row {
                if v > n || seen[v] {
                    return false;
                }
                seen[v] = true;
            }
        }
        true
    }

    /// True iff (row, col) is a removable corner of the shape (1-based).
    pub fn is_removable_corner(&self, row: usize, col: usize) -> bool {
        if row == 0 || col == 0 || row > self.rows.len() {
            return false;
        }
        let len = self.rows[row - 1].len();
        col == len && self.rows.get(row).map_or(0, Vec::len) < len
    }

    pub(crate) fn rows_mut(&mut self) -> &mut Vec<Vec<usize>> {
        &mut self.rows
    }
}

impl TryFrom<Vec<Vec<usize>>> for StandardTableau {
    type Error = Error;
    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self> {
        StandardTableau::new(rows)
    }
}

impl From<StandardTableau> for Vec<Vec<usize>> {
    fn from(t: StandardTableau) -> Self {
        t.rows
    }
}

impl std::fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "(empty)");
        }
        let width = self
            .rows
            .iter()
            .flatten()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v:>width$}")?;
            }
        }
        Ok(())
    }
}
